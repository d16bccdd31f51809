#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbifold/completion.hpp"
#include "orbifold/export.hpp"
#include "orbifold/ring.hpp"
#include "orbifold/rules.hpp"
#include "orbifold/table.hpp"

namespace {

using namespace orbifold;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitFailed = 3;
constexpr const char* kVariantEnv = "ORBIFOLD_FUSION_VARIANT";

struct Args {
  int k = 0;
  std::string variant;  // empty: not given on the command line
  std::string format = "text";
  std::string out;
  std::vector<std::string> labels;
};

void add_common(CLI::App* sub, Args& a, bool wants_variant) {
  sub->add_option("-k,--k", a.k, "positive lattice parameter; the generator norm is 2k")
      ->required()
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--out", a.out, "write output to this file instead of stdout");
  if (wants_variant)
    sub->add_option("--variant", a.variant,
                    "rule variant (overrides the ORBIFOLD_FUSION_VARIANT environment variable)")
        ->check(CLI::IsMember({"printed", "corrected"}));
}

// Flag beats environment beats unset. `bad_env` reports an unusable
// environment value, which is a usage error even when a default would exist.
std::optional<Variant> resolve_variant(const std::string& flag, bool& bad_env,
                                       std::string& env_value) {
  if (!flag.empty()) return parse_variant(flag);
  if (const char* env = std::getenv(kVariantEnv)) {
    auto v = parse_variant(env);
    if (!v) {
      bad_env = true;
      env_value = env;
    }
    return v;
  }
  return std::nullopt;
}

bool emit(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  f << payload;
  if (!f.good()) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

std::optional<Label> get_label(const std::string& s, const RankParam& rk) {
  std::string err;
  auto x = parse_label(s, rk, err);
  if (!x) std::cerr << "error: " << err << "\n";
  return x;
}

int run_enumerate(const Args& a, ExportFormat f) {
  return emit(a.out, export_enumerate(RankParam{a.k}, f)) ? kExitOk : kExitUsage;
}

int run_qdim(const Args& a, ExportFormat f) {
  const RankParam rk{a.k};
  auto x = get_label(a.labels[0], rk);
  if (!x) return kExitUsage;
  return emit(a.out, export_qdim(rk, *x, f)) ? kExitOk : kExitUsage;
}

int run_branch(const Args& a, ExportFormat f) {
  const RankParam rk{a.k};
  auto x = get_label(a.labels[0], rk);
  if (!x) return kExitUsage;
  return emit(a.out, export_branch(rk, *x, f)) ? kExitOk : kExitUsage;
}

int run_fuse(const Args& a, ExportFormat f, Variant v) {
  const RankParam rk{a.k};
  auto x = get_label(a.labels[0], rk);
  auto y = get_label(a.labels[1], rk);
  if (!x || !y) return kExitUsage;
  const RuleVariantConfig cfg{v, DegeneratePolicy::Defer};

  FuseResult r{*x, *y, {}, {}};
  const FuseOutcome fo = fuse(rk, *x, *y, cfg);
  if (fo.covered && fo.markers.empty()) {
    r.terms = fo.terms;
    r.origin = CellOrigin{fo.rule, false};
  } else {
    // The cell is not decided by the rules alone; solve the whole table and
    // read the product off the completed table.
    CompletionReport rep = complete_table(build_partial_table(rk, cfg), false);
    if (!rep.table) {
      std::cerr << rep.to_text();
      return kExitFailed;
    }
    r.terms = rep.table->product(*x, *y);
    r.origin = rep.table->origin(*x, *y);
  }
  return emit(a.out, export_fuse(rk, cfg, r, f)) ? kExitOk : kExitUsage;
}

int run_table(const Args& a, ExportFormat f, Variant v) {
  const RankParam rk{a.k};
  const RuleVariantConfig cfg{v, DegeneratePolicy::Defer};
  CompletionReport rep = complete_table(build_partial_table(rk, cfg), false);
  if (!rep.table) {
    std::cerr << rep.to_text();
    return kExitFailed;
  }
  return emit(a.out, export_table(*rep.table, rep, f)) ? kExitOk : kExitUsage;
}

int run_complete(const Args& a, ExportFormat f, Variant v) {
  const RankParam rk{a.k};
  const RuleVariantConfig cfg{v, DegeneratePolicy::Defer};
  CompletionReport rep = complete_table(build_partial_table(rk, cfg), true);
  if (!emit(a.out, export_completion(rep, f))) return kExitUsage;
  return rep.status == CompletionStatus::Unique ? kExitOk : kExitFailed;
}

int run_verify(const Args& a, ExportFormat f, std::optional<Variant> chosen) {
  const RankParam rk{a.k};
  if (chosen) {
    const RuleVariantConfig cfg{*chosen, DegeneratePolicy::Defer};
    CompletionReport rep = complete_table(build_partial_table(rk, cfg), true);
    if (!rep.table) {
      if (!emit(a.out, export_completion(rep, f))) return kExitUsage;
      return kExitFailed;
    }
    if (!emit(a.out, export_verify(rk, cfg, rep.axioms, f))) return kExitUsage;
    return rep.axioms.all_passed() ? kExitOk : kExitFailed;
  }
  // No variant requested anywhere: run both and report which one stands.
  ArbitrationOutcome out = arbitrate_variants(rk, DegeneratePolicy::Defer);
  if (!emit(a.out, export_arbitration(out, f))) return kExitUsage;
  return out.passing ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact fusion-ring calculator for the two-cycle permutation orbifold of a rank-one "
      "lattice theory with generator norm 2k."};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  Args args;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list the simple objects with quantum dimensions");
  add_common(enumerate, args, false);

  CLI::App* fuse_cmd = app.add_subcommand("fuse", "multiply two simple objects");
  add_common(fuse_cmd, args, true);
  fuse_cmd->add_option("labels", args.labels, "two labels, e.g. \"N(1,0)\" \"T(0,1)\"")
      ->required()
      ->expected(2);

  CLI::App* table_cmd = app.add_subcommand("table", "emit the full completed fusion table");
  add_common(table_cmd, args, true);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check the ring axioms; without --variant, arbitrate both variants");
  add_common(verify_cmd, args, true);

  CLI::App* complete_cmd =
      app.add_subcommand("complete", "solve for the cells the rules leave open");
  add_common(complete_cmd, args, true);

  CLI::App* branch_cmd =
      app.add_subcommand("branch", "decompose a simple object over the unextended subalgebra");
  add_common(branch_cmd, args, false);
  branch_cmd->add_option("labels", args.labels, "one label")->required()->expected(1);

  CLI::App* qdim_cmd = app.add_subcommand("qdim", "print the exact quantum dimension");
  add_common(qdim_cmd, args, false);
  qdim_cmd->add_option("labels", args.labels, "one label")->required()->expected(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const ExportFormat fmt = *parse_format(args.format);

  if (enumerate->parsed()) return run_enumerate(args, fmt);
  if (qdim_cmd->parsed()) return run_qdim(args, fmt);
  if (branch_cmd->parsed()) return run_branch(args, fmt);

  bool bad_env = false;
  std::string env_value;
  const std::optional<Variant> chosen = resolve_variant(args.variant, bad_env, env_value);
  if (bad_env) {
    std::cerr << "error: invalid " << kVariantEnv << " value '" << env_value
              << "' (expected printed or corrected)\n";
    return kExitUsage;
  }
  const Variant v = chosen.value_or(Variant::Corrected);

  if (fuse_cmd->parsed()) return run_fuse(args, fmt, v);
  if (table_cmd->parsed()) return run_table(args, fmt, v);
  if (complete_cmd->parsed()) return run_complete(args, fmt, v);
  if (verify_cmd->parsed()) return run_verify(args, fmt, chosen);
  return kExitUsage;
}
