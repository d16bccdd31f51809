#include "orbifold/export.hpp"

#include <map>

#include "json.hpp"
#include "orbifold/ring.hpp"

namespace orbifold {

using ordered_json = nlohmann::ordered_json;

const char* format_name(ExportFormat f) {
  switch (f) {
    case ExportFormat::Text:
      return "text";
    case ExportFormat::Json:
      return "json";
    case ExportFormat::Csv:
      return "csv";
  }
  return "?";
}

std::optional<ExportFormat> parse_format(std::string_view s) {
  if (s == "text") return ExportFormat::Text;
  if (s == "json") return ExportFormat::Json;
  if (s == "csv") return ExportFormat::Csv;
  return std::nullopt;
}

const char* sector_name(Sector s) {
  switch (s) {
    case Sector::NonDiag:
      return "nondiag";
    case Sector::Diag:
      return "diag";
    case Sector::Twist:
      return "twist";
  }
  return "?";
}

std::string origin_text(const CellOrigin& o) {
  return std::string(o.from_completion ? "completion:" : "rule:") + rule_tag_name(o.rule);
}

namespace {

// RFC 4180 quoting; labels contain commas, so most fields end up quoted.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  out += '\n';
  return out;
}

ordered_json qdim_json(const QDim& d) {
  return ordered_json{
      {"a", d.a.to_string()}, {"b", d.b.to_string()}, {"radicand", d.radicand}};
}

ordered_json envelope(const RankParam& rk) {
  return ordered_json{{"tool", kToolName},
                      {"version", kToolVersion},
                      {"k", rk.k},
                      {"radicand", rk.radicand()}};
}

ordered_json terms_json(const FusionVector& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& [c, m] : v) arr.push_back(ordered_json{{"c", label_text(c)}, {"mult", m}});
  return arr;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::optional<RuleTag> parse_rule_tag(std::string_view s) {
  for (RuleTag t : {RuleTag::NonDiagNonDiagGeneric, RuleTag::NonDiagNonDiagEqualDiff,
                    RuleTag::NonDiagDiag, RuleTag::NonDiagTwist, RuleTag::DiagDiag,
                    RuleTag::DiagTwist, RuleTag::TwistTwistSameParity,
                    RuleTag::TwistTwistMixedParity, RuleTag::Uncovered})
    if (s == rule_tag_name(t)) return t;
  return std::nullopt;
}

std::optional<CellOrigin> parse_origin(std::string_view s) {
  bool completed = false;
  if (s.rfind("rule:", 0) == 0) {
    s.remove_prefix(5);
  } else if (s.rfind("completion:", 0) == 0) {
    s.remove_prefix(11);
    completed = true;
  } else {
    return std::nullopt;
  }
  auto tag = parse_rule_tag(s);
  if (!tag) return std::nullopt;
  return CellOrigin{*tag, completed};
}

}  // namespace

std::string export_enumerate(const RankParam& rk, ExportFormat f) {
  const std::vector<Label> simples = enumerate_simples(rk);
  switch (f) {
    case ExportFormat::Text: {
      std::string out = "simple objects\n";
      out += "k: " + std::to_string(rk.k) + "\n";
      out += "count: " + std::to_string(simples.size()) + "\n";
      out += "nondiag: " + std::to_string(nondiag_count(rk)) + "\n";
      out += "diag: " + std::to_string(diag_count(rk)) + "\n";
      out += "twist: " + std::to_string(twist_count(rk)) + "\n";
      for (const Label& x : simples)
        out += label_text(x) + "  " + sector_name(x.sector) + "  qdim " +
               qdim(rk, x).to_string() + "\n";
      out += "global dimension: " + global_dimension(rk).to_string() + "\n";
      return out;
    }
    case ExportFormat::Csv: {
      std::string out = csv_row({"label", "sector", "qdim"});
      for (const Label& x : simples)
        out += csv_row({label_text(x), sector_name(x.sector), qdim(rk, x).to_string()});
      return out;
    }
    case ExportFormat::Json: {
      ordered_json j = envelope(rk);
      j["simple_count"] = simples.size();
      j["sector_counts"] = ordered_json{{"nondiag", nondiag_count(rk)},
                                        {"diag", diag_count(rk)},
                                        {"twist", twist_count(rk)}};
      ordered_json arr = ordered_json::array();
      for (const Label& x : simples)
        arr.push_back(ordered_json{{"label", label_text(x)},
                                   {"sector", sector_name(x.sector)},
                                   {"qdim", qdim_json(qdim(rk, x))}});
      j["simples"] = std::move(arr);
      j["global_dimension"] = qdim_json(global_dimension(rk));
      return dump(j);
    }
  }
  return {};
}

std::string export_qdim(const RankParam& rk, const Label& x, ExportFormat f) {
  const QDim d = qdim(rk, x);
  switch (f) {
    case ExportFormat::Text: {
      std::string out = "k: " + std::to_string(rk.k) + "\n";
      out += "object: " + label_text(x) + "\n";
      out += "qdim: " + d.to_string() + "\n";
      return out;
    }
    case ExportFormat::Csv: {
      std::string out = csv_row({"label", "qdim"});
      out += csv_row({label_text(x), d.to_string()});
      return out;
    }
    case ExportFormat::Json: {
      ordered_json j = envelope(rk);
      j["object"] = label_text(x);
      j["qdim"] = qdim_json(d);
      return dump(j);
    }
  }
  return {};
}

std::string export_branch(const RankParam& rk, const Label& x, ExportFormat f) {
  const auto comps = branch(rk, x);
  switch (f) {
    case ExportFormat::Text: {
      std::string out = "k: " + std::to_string(rk.k) + "\n";
      out += "object: " + label_text(x) + "  qdim " + qdim(rk, x).to_string() + "\n";
      for (const BranchComponent& c : comps)
        out += "component: " + branch_component_text(c) + "  qdim " +
               qdim_sub(rk, c.part).to_string() + "\n";
      return out;
    }
    case ExportFormat::Csv: {
      std::string out = csv_row({"object", "r", "part", "qdim"});
      for (const BranchComponent& c : comps)
        out += csv_row({label_text(x), std::to_string(c.r), sublabel_text(c.part),
                        qdim_sub(rk, c.part).to_string()});
      return out;
    }
    case ExportFormat::Json: {
      ordered_json j = envelope(rk);
      j["object"] = label_text(x);
      j["qdim"] = qdim_json(qdim(rk, x));
      ordered_json arr = ordered_json::array();
      for (const BranchComponent& c : comps)
        arr.push_back(ordered_json{{"r", c.r},
                                   {"part", sublabel_text(c.part)},
                                   {"qdim", qdim_json(qdim_sub(rk, c.part))}});
      j["components"] = std::move(arr);
      return dump(j);
    }
  }
  return {};
}

std::string export_fuse(const RankParam& rk, const RuleVariantConfig& cfg, const FuseResult& r,
                        ExportFormat f) {
  switch (f) {
    case ExportFormat::Text: {
      std::string out = "k: " + std::to_string(rk.k) + "\n";
      out += std::string("variant: ") + variant_name(cfg.variant) + "\n";
      out += label_text(r.a) + " * " + label_text(r.b) + " = " + r.terms.to_string() + "\n";
      out += "origin: " + origin_text(r.origin) + "\n";
      return out;
    }
    case ExportFormat::Csv: {
      std::string out = csv_row({"a", "b", "c", "mult", "origin"});
      for (const auto& [c, m] : r.terms)
        out += csv_row({label_text(r.a), label_text(r.b), label_text(c), std::to_string(m),
                        origin_text(r.origin)});
      return out;
    }
    case ExportFormat::Json: {
      ordered_json j = envelope(rk);
      j["variant"] = variant_name(cfg.variant);
      j["a"] = label_text(r.a);
      j["b"] = label_text(r.b);
      j["terms"] = terms_json(r.terms);
      j["origin"] = origin_text(r.origin);
      return dump(j);
    }
  }
  return {};
}

std::string export_table(const CompleteTable& t, const CompletionReport& rep, ExportFormat f) {
  const int n = static_cast<int>(t.simples.size());
  switch (f) {
    case ExportFormat::Text: {
      std::string out = "fusion table\n";
      out += "k: " + std::to_string(t.rk.k) + "\n";
      out += std::string("variant: ") + variant_name(t.cfg.variant) + "\n";
      out += "simples: " + std::to_string(n) + "\n";
      out += "cells: " + std::to_string(static_cast<std::int64_t>(n) * (n + 1) / 2) + "\n";
      out += "completed cells: " + std::to_string(rep.resolved.size()) + "\n";
      for (int ia = 0; ia < n; ++ia)
        for (int ib = ia; ib < n; ++ib)
          out += label_text(t.simples[static_cast<size_t>(ia)]) + " * " +
                 label_text(t.simples[static_cast<size_t>(ib)]) + " = " +
                 t.product_at(ia, ib).to_string() + "\n";
      return out;
    }
    case ExportFormat::Csv: {
      std::string out = csv_row({"a", "b", "c", "mult", "origin"});
      for (int ia = 0; ia < n; ++ia)
        for (int ib = ia; ib < n; ++ib) {
          const Label& a = t.simples[static_cast<size_t>(ia)];
          const Label& b = t.simples[static_cast<size_t>(ib)];
          const std::string org = origin_text(t.origin(a, b));
          for (const auto& [c, m] : t.product_at(ia, ib))
            out += csv_row({label_text(a), label_text(b), label_text(c), std::to_string(m), org});
        }
      return out;
    }
    case ExportFormat::Json: {
      ordered_json j = envelope(t.rk);
      j["variant"] = variant_name(t.cfg.variant);
      j["simple_count"] = n;
      ordered_json simples = ordered_json::array();
      for (const Label& x : t.simples)
        simples.push_back(ordered_json{{"label", label_text(x)},
                                       {"sector", sector_name(x.sector)},
                                       {"qdim", qdim_json(qdim(t.rk, x))}});
      j["simples"] = std::move(simples);
      ordered_json cells = ordered_json::array();
      for (int ia = 0; ia < n; ++ia)
        for (int ib = ia; ib < n; ++ib) {
          const Label& a = t.simples[static_cast<size_t>(ia)];
          const Label& b = t.simples[static_cast<size_t>(ib)];
          cells.push_back(ordered_json{{"a", label_text(a)},
                                       {"b", label_text(b)},
                                       {"terms", terms_json(t.product_at(ia, ib))},
                                       {"origin", origin_text(t.origin(a, b))}});
        }
      j["cells"] = std::move(cells);
      j["completion"] = ordered_json{{"status", completion_status_name(rep.status)},
                                     {"unknown_cells", rep.unknown_uncovered},
                                     {"unknown_degenerate_positions", rep.unknown_markers},
                                     {"resolved_cells", rep.resolved.size()}};
      return dump(j);
    }
  }
  return {};
}

std::string export_verify(const RankParam& rk, const RuleVariantConfig& cfg,
                          const AxiomReport& report, ExportFormat f) {
  switch (f) {
    case ExportFormat::Text: {
      std::string out = "verification\n";
      out += "k: " + std::to_string(rk.k) + "\n";
      out += std::string("variant: ") + variant_name(cfg.variant) + "\n";
      out += report.to_text();
      out += std::string("result: ") + (report.all_passed() ? "pass" : "fail") + "\n";
      return out;
    }
    case ExportFormat::Csv: {
      std::string out = csv_row({"axiom", "passed", "checked", "counterexample"});
      for (const AxiomResult& r : report.results)
        out += csv_row({r.name, r.passed ? "true" : "false", std::to_string(r.checked),
                        r.counterexample});
      return out;
    }
    case ExportFormat::Json: {
      ordered_json j = envelope(rk);
      j["variant"] = variant_name(cfg.variant);
      ordered_json arr = ordered_json::array();
      for (const AxiomResult& r : report.results)
        arr.push_back(ordered_json{{"axiom", r.name},
                                   {"passed", r.passed},
                                   {"checked", r.checked},
                                   {"counterexample", r.counterexample}});
      j["axioms"] = std::move(arr);
      j["all_passed"] = report.all_passed();
      return dump(j);
    }
  }
  return {};
}

std::string export_arbitration(const ArbitrationOutcome& out, ExportFormat f) {
  switch (f) {
    case ExportFormat::Text:
      return out.to_text();
    case ExportFormat::Csv: {
      std::string s = csv_row({"variant", "status", "axioms_pass"});
      for (const auto& [v, rep] : out.reports)
        s += csv_row({variant_name(v), completion_status_name(rep.status),
                      rep.verified && rep.axioms.all_passed() ? "true" : "false"});
      return s;
    }
    case ExportFormat::Json: {
      ordered_json j = envelope(out.rk);
      ordered_json arr = ordered_json::array();
      for (const auto& [v, rep] : out.reports) {
        ordered_json e{{"variant", variant_name(v)},
                       {"status", completion_status_name(rep.status)},
                       {"axioms_pass", rep.verified && rep.axioms.all_passed()}};
        if (rep.failure)
          e["failure"] =
              ordered_json{{"axiom", rep.failure->axiom}, {"counterexample", rep.failure->detail}};
        arr.push_back(std::move(e));
      }
      j["variants"] = std::move(arr);
      j["passing"] = out.passing ? ordered_json(variant_name(*out.passing)) : ordered_json(nullptr);
      j["coincident"] = out.coincident;
      return dump(j);
    }
  }
  return {};
}

std::string export_completion(const CompletionReport& rep, ExportFormat f) {
  switch (f) {
    case ExportFormat::Text:
      return rep.to_text();
    case ExportFormat::Csv: {
      std::string out = csv_row({"a", "b", "c", "mult"});
      for (const ResolvedCell& rc : rep.resolved)
        for (const auto& [c, m] : rc.value)
          out += csv_row(
              {label_text(rc.key.a), label_text(rc.key.b), label_text(c), std::to_string(m)});
      return out;
    }
    case ExportFormat::Json: {
      ordered_json j = envelope(rep.rk);
      j["variant"] = variant_name(rep.cfg.variant);
      j["status"] = completion_status_name(rep.status);
      j["unknown_cells"] = rep.unknown_uncovered;
      j["unknown_degenerate_positions"] = rep.unknown_markers;
      ordered_json arr = ordered_json::array();
      for (const ResolvedCell& rc : rep.resolved)
        arr.push_back(ordered_json{{"a", label_text(rc.key.a)},
                                   {"b", label_text(rc.key.b)},
                                   {"terms", terms_json(rc.value)}});
      j["resolved"] = std::move(arr);
      if (rep.failure)
        j["failure"] =
            ordered_json{{"axiom", rep.failure->axiom}, {"counterexample", rep.failure->detail}};
      if (rep.status == CompletionStatus::Ambiguous) {
        ordered_json sols = ordered_json::array();
        for (const auto& sol : rep.solutions) {
          ordered_json one = ordered_json::array();
          for (const ResolvedCell& rc : sol)
            one.push_back(ordered_json{{"a", label_text(rc.key.a)},
                                       {"b", label_text(rc.key.b)},
                                       {"terms", terms_json(rc.value)}});
          sols.push_back(std::move(one));
        }
        j["solutions"] = std::move(sols);
      }
      if (rep.verified) {
        int passed = 0;
        for (const AxiomResult& r : rep.axioms.results) passed += r.passed ? 1 : 0;
        j["axioms"] = ordered_json{{"passed", passed},
                                   {"total", rep.axioms.results.size()},
                                   {"all_passed", rep.axioms.all_passed()}};
      }
      return dump(j);
    }
  }
  return {};
}

std::optional<CompleteTable> table_from_json(const std::string& text, std::string& err) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    err = "not valid json";
    return std::nullopt;
  }
  try {
    const RankParam rk{j.at("k").get<int>()};
    if (!rk.valid()) {
      err = "k out of range";
      return std::nullopt;
    }
    if (j.at("radicand").get<std::int64_t>() != rk.radicand()) {
      err = "radicand does not match k";
      return std::nullopt;
    }
    auto variant = parse_variant(j.at("variant").get<std::string>());
    if (!variant) {
      err = "unknown variant";
      return std::nullopt;
    }
    CompleteTable t;
    t.init(rk, RuleVariantConfig{*variant, DegeneratePolicy::Defer});
    const size_t n = t.simples.size();
    if (j.at("simple_count").get<size_t>() != n) {
      err = "simple_count does not match k";
      return std::nullopt;
    }
    std::map<CellKey, int> seen;
    for (const auto& cj : j.at("cells")) {
      std::string perr;
      auto a = parse_label(cj.at("a").get<std::string>(), rk, perr);
      auto b = parse_label(cj.at("b").get<std::string>(), rk, perr);
      if (!a || !b) {
        err = "bad cell label: " + perr;
        return std::nullopt;
      }
      auto origin = parse_origin(cj.at("origin").get<std::string>());
      if (!origin) {
        err = "bad cell origin";
        return std::nullopt;
      }
      FusionVector v;
      for (const auto& tj : cj.at("terms")) {
        auto c = parse_label(tj.at("c").get<std::string>(), rk, perr);
        if (!c) {
          err = "bad term label: " + perr;
          return std::nullopt;
        }
        const std::int64_t m = tj.at("mult").get<std::int64_t>();
        if (m <= 0) {
          err = "nonpositive multiplicity";
          return std::nullopt;
        }
        v.add(*c, m);
      }
      if (++seen[CellKey(*a, *b)] > 1) {
        err = "duplicate cell " + cell_text(CellKey(*a, *b));
        return std::nullopt;
      }
      t.set_cell(*a, *b, v, *origin);
    }
    if (seen.size() != n * (n + 1) / 2) {
      err = "table has " + std::to_string(seen.size()) + " cells, expected " +
            std::to_string(n * (n + 1) / 2);
      return std::nullopt;
    }
    return t;
  } catch (const ordered_json::exception& e) {
    err = e.what();
    return std::nullopt;
  }
}

}  // namespace orbifold
