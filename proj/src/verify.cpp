#include "orbifold/verify.hpp"

#include <optional>

#include "orbifold/ring.hpp"

namespace orbifold {

bool AxiomReport::all_passed() const {
  for (const AxiomResult& r : results)
    if (!r.passed) return false;
  return true;
}

const AxiomResult* AxiomReport::first_failure() const {
  for (const AxiomResult& r : results)
    if (!r.passed) return &r;
  return nullptr;
}

std::string AxiomReport::to_text() const {
  std::string out;
  for (const AxiomResult& r : results) {
    out += r.passed ? "[ pass ] " : "[ FAIL ] ";
    out += r.name + " (checked " + std::to_string(r.checked) + ")";
    if (!r.passed) out += ": " + r.counterexample;
    out += "\n";
  }
  return out;
}

namespace {

std::string pair_text(const Label& x, const Label& y) {
  return label_text(x) + " * " + label_text(y);
}

}  // namespace

AxiomReport verify_axioms(const CompleteTable& t) {
  AxiomReport rep;
  const RankParam rk = t.rk;
  const int n = static_cast<int>(t.simples.size());
  const Label one = unit_label();
  const int iu = t.index_of(one);

  std::vector<QDim> qd;
  qd.reserve(static_cast<size_t>(n));
  for (const Label& x : t.simples) qd.push_back(qdim(rk, x));

  {
    AxiomResult r{"unit", true, 0, ""};
    for (int ix = 0; ix < n && r.passed; ++ix) {
      ++r.checked;
      FusionVector want;
      want.add(t.simples[static_cast<size_t>(ix)]);
      if (t.product_at(iu, ix) != want) {
        r.passed = false;
        r.counterexample = pair_text(one, t.simples[static_cast<size_t>(ix)]) + " = " +
                           t.product_at(iu, ix).to_string();
      }
    }
    rep.results.push_back(std::move(r));
  }

  {
    AxiomResult r{"integrality", true, 0, ""};
    for (int ix = 0; ix < n && r.passed; ++ix)
      for (int iy = 0; iy < n && r.passed; ++iy) {
        ++r.checked;
        for (const auto& [c, m] : t.product_at(ix, iy))
          if (m < 0) {
            r.passed = false;
            r.counterexample = pair_text(t.simples[static_cast<size_t>(ix)],
                                         t.simples[static_cast<size_t>(iy)]) +
                               " has negative multiplicity at " + label_text(c);
            break;
          }
      }
    rep.results.push_back(std::move(r));
  }

  {
    AxiomResult r{"commutativity", true, 0, ""};
    for (int ix = 0; ix < n && r.passed; ++ix)
      for (int iy = ix + 1; iy < n && r.passed; ++iy) {
        ++r.checked;
        if (t.product_at(ix, iy) != t.product_at(iy, ix)) {
          r.passed = false;
          r.counterexample = pair_text(t.simples[static_cast<size_t>(ix)],
                                       t.simples[static_cast<size_t>(iy)]) +
                             " != transposed cell";
        }
      }
    rep.results.push_back(std::move(r));
  }

  {
    AxiomResult r{"associativity", true, 0, ""};
    for (int ix = 0; ix < n && r.passed; ++ix)
      for (int iy = 0; iy < n && r.passed; ++iy)
        for (int iz = 0; iz < n && r.passed; ++iz) {
          ++r.checked;
          FusionVector lhs, rhs;
          for (const auto& [c, m] : t.product_at(ix, iy))
            lhs.add_scaled(t.product(c, t.simples[static_cast<size_t>(iz)]), m);
          for (const auto& [d, m] : t.product_at(iy, iz))
            rhs.add_scaled(t.product(t.simples[static_cast<size_t>(ix)], d), m);
          if (lhs != rhs) {
            r.passed = false;
            r.counterexample = "(" +
                               pair_text(t.simples[static_cast<size_t>(ix)],
                                         t.simples[static_cast<size_t>(iy)]) +
                               ") * " + label_text(t.simples[static_cast<size_t>(iz)]) +
                               ": bracketings give " + lhs.to_string() + " vs " + rhs.to_string();
          }
        }
    rep.results.push_back(std::move(r));
  }

  // Duals via the unit row; the delta property demands exactly one partner.
  std::vector<std::optional<Label>> dual(static_cast<size_t>(n));
  {
    AxiomResult r{"dual-existence", true, 0, ""};
    for (int ix = 0; ix < n; ++ix) {
      ++r.checked;
      const Label x = t.simples[static_cast<size_t>(ix)];
      std::optional<Label> found;
      bool bad = false;
      std::string why;
      for (int iy = 0; iy < n; ++iy) {
        const std::int64_t m = t.product_at(ix, iy).mult_of(one);
        if (m == 0) continue;
        const Label y = t.simples[static_cast<size_t>(iy)];
        if (m > 1) {
          bad = true;
          why = "unit multiplicity " + std::to_string(m) + " in " + pair_text(x, y);
          break;
        }
        if (found) {
          bad = true;
          why = "unit appears in both " + pair_text(x, *found) + " and " + pair_text(x, y);
          break;
        }
        found = y;
      }
      if (!bad && !found) {
        bad = true;
        why = "no dual for " + label_text(x);
      }
      if (bad) {
        if (r.passed) {
          r.passed = false;
          r.counterexample = why;
        }
        continue;
      }
      dual[static_cast<size_t>(ix)] = *found;
    }
    rep.results.push_back(std::move(r));
  }

  {
    AxiomResult r{"dual-involution", true, 0, ""};
    for (int ix = 0; ix < n && r.passed; ++ix) {
      const auto& dx = dual[static_cast<size_t>(ix)];
      const Label x = t.simples[static_cast<size_t>(ix)];
      ++r.checked;
      if (!dx) {
        r.passed = false;
        r.counterexample = "dual undefined for " + label_text(x);
        continue;
      }
      const int id = t.index_of(*dx);
      if (!dual[static_cast<size_t>(id)] || *dual[static_cast<size_t>(id)] != x) {
        r.passed = false;
        r.counterexample = "dual(dual(" + label_text(x) + ")) != " + label_text(x);
      }
    }
    rep.results.push_back(std::move(r));
  }

  {
    AxiomResult r{"dual-qdim", true, 0, ""};
    for (int ix = 0; ix < n && r.passed; ++ix) {
      ++r.checked;
      const auto& dx = dual[static_cast<size_t>(ix)];
      if (!dx) {
        r.passed = false;
        r.counterexample = "dual undefined for " + label_text(t.simples[static_cast<size_t>(ix)]);
        continue;
      }
      if (qdim(rk, *dx) != qd[static_cast<size_t>(ix)]) {
        r.passed = false;
        r.counterexample = "qdim(" + label_text(*dx) +
                           ") != qdim(" + label_text(t.simples[static_cast<size_t>(ix)]) + ")";
      }
    }
    rep.results.push_back(std::move(r));
  }

  {
    // N[x*y -> c] = N[c*dual(y) -> x], the standard rigidity symmetry.
    AxiomResult r{"dual-symmetry", true, 0, ""};
    bool duals_ok = true;
    for (const auto& d : dual)
      if (!d) duals_ok = false;
    if (!duals_ok) {
      r.passed = false;
      r.counterexample = "duals undefined, symmetry not checkable";
    }
    for (int ix = 0; ix < n && r.passed; ++ix)
      for (int iy = 0; iy < n && r.passed; ++iy) {
        const int iyd = t.index_of(*dual[static_cast<size_t>(iy)]);
        for (int ic = 0; ic < n && r.passed; ++ic) {
          ++r.checked;
          const std::int64_t lhs = t.product_at(ix, iy).mult_of(t.simples[static_cast<size_t>(ic)]);
          const std::int64_t rhs = t.product_at(ic, iyd).mult_of(t.simples[static_cast<size_t>(ix)]);
          if (lhs != rhs) {
            r.passed = false;
            r.counterexample =
                "N[" + pair_text(t.simples[static_cast<size_t>(ix)],
                                 t.simples[static_cast<size_t>(iy)]) +
                " -> " + label_text(t.simples[static_cast<size_t>(ic)]) + "] = " +
                std::to_string(lhs) + " but partner count is " + std::to_string(rhs);
          }
        }
      }
    rep.results.push_back(std::move(r));
  }

  {
    AxiomResult r{"qdim-homomorphism", true, 0, ""};
    for (int ix = 0; ix < n && r.passed; ++ix)
      for (int iy = ix; iy < n && r.passed; ++iy) {
        ++r.checked;
        const QDim want = qd[static_cast<size_t>(ix)] * qd[static_cast<size_t>(iy)];
        const QDim got = t.product_at(ix, iy).qdim_total(rk);
        if (want != got) {
          r.passed = false;
          r.counterexample = pair_text(t.simples[static_cast<size_t>(ix)],
                                       t.simples[static_cast<size_t>(iy)]) +
                             ": qdim sum " + got.to_string() + " != " + want.to_string();
        }
      }
    rep.results.push_back(std::move(r));
  }

  {
    AxiomResult r{"qdim-lower-bound", true, 0, ""};
    for (int ix = 0; ix < n && r.passed; ++ix) {
      ++r.checked;
      if (!qd[static_cast<size_t>(ix)].at_least(Rational(1))) {
        r.passed = false;
        r.counterexample = "qdim(" + label_text(t.simples[static_cast<size_t>(ix)]) + ") < 1";
      }
    }
    rep.results.push_back(std::move(r));
  }

  {
    // Currents are the qdim-1 simples; they must be exactly the Diag sector
    // and multiply like Z_{2k} x Z_2 on the (i, e) coordinates.
    AxiomResult r{"simple-current-group", true, 0, ""};
    std::vector<Label> currents = simple_currents(t);
    if (static_cast<int>(currents.size()) != diag_count(rk)) {
      r.passed = false;
      r.counterexample = "expected " + std::to_string(diag_count(rk)) + " currents, found " +
                         std::to_string(currents.size());
    }
    for (size_t i = 0; i < currents.size() && r.passed; ++i)
      if (currents[i].sector != Sector::Diag) {
        r.passed = false;
        r.counterexample = label_text(currents[i]) + " has qdim 1 outside the Diag sector";
      }
    for (size_t i = 0; i < currents.size() && r.passed; ++i)
      for (size_t j = 0; j < currents.size() && r.passed; ++j) {
        ++r.checked;
        FusionVector want;
        want.add(diag(rk, currents[i].i + currents[j].i, currents[i].j + currents[j].j));
        if (t.product(currents[i], currents[j]) != want) {
          r.passed = false;
          r.counterexample = pair_text(currents[i], currents[j]) + " = " +
                             t.product(currents[i], currents[j]).to_string() +
                             ", expected index-additive current";
        }
      }
    rep.results.push_back(std::move(r));
  }

  return rep;
}

}  // namespace orbifold
