#include "orbifold/completion.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>

#include "orbifold/ring.hpp"

namespace orbifold {

const char* completion_status_name(CompletionStatus s) {
  switch (s) {
    case CompletionStatus::Unique:
      return "unique";
    case CompletionStatus::Ambiguous:
      return "ambiguous";
    case CompletionStatus::Infeasible:
      return "infeasible";
  }
  return "?";
}

namespace {

// Element of the simple-current group Z_{2k} x Z_2 acting by translation.
struct Current {
  int i = 0;
  int e = 0;
  friend constexpr auto operator<=>(const Current&, const Current&) = default;
};

// One two-sided simple-current orbit of cells. Coverage is not an orbit
// invariant: an orbit may mix covered, marker and uncovered cells (the
// nondiag families reach both difference representatives d and 2k-d), so the
// shared unknown X is the *total* value at the root and every member carries
// the constraint value(member) = t * X.
struct UnknownOrbit {
  CellKey root;
  std::vector<std::pair<CellKey, Current>> members;  // sorted; value = t * X
  std::vector<Current> self_constraints;             // g with g * X == X forced
  std::vector<FusionVector> candidates;              // surviving root totals X
  bool solved = false;
};

class Solver {
 public:
  Solver(const PartialTable& pt, bool run_verify)
      : pt_(pt), rk_(pt.rk), run_verify_(run_verify), simples_(pt.simples) {
    n_ = static_cast<int>(simples_.size());
  }

  CompletionReport run();

 private:
  size_t li(int ia, int ib) const { return static_cast<size_t>(ia) * n_ + ib; }
  int idx(const Label& x) const {
    auto it = std::lower_bound(simples_.begin(), simples_.end(), x);
    assert(it != simples_.end() && *it == x);
    return static_cast<int>(it - simples_.begin());
  }

  Current compose(Current u, Current v) const {
    return Current{floor_mod(u.i + v.i, rk_.order()), (u.e + v.e) % 2};
  }
  Current inverse(Current u) const { return Current{floor_mod(-u.i, rk_.order()), u.e}; }
  Label translate(const Current& u, const Label& x) const {
    return current_translate(rk_, Label{Sector::Diag, u.i, u.e}, x, pt_.cfg);
  }
  FusionVector translate(const Current& u, const FusionVector& v) const {
    FusionVector out;
    for (const auto& [c, m] : v) out.add(translate(u, c), m);
    return out;
  }

  void load_cells();
  void build_orbits();
  std::optional<Counterexample> precheck();
  std::optional<Counterexample> record_unit(const CellKey& key, const FusionVector& value);
  std::optional<Counterexample> record_member_units(const UnknownOrbit& o);
  std::optional<Counterexample> seed_candidates(UnknownOrbit& o);
  std::vector<FusionVector> enumerate_candidates(const UnknownOrbit& o) const;
  bool candidate_obeys_members(const UnknownOrbit& o, const FusionVector& x,
                               std::string* why) const;
  bool candidate_obeys_orbit(const UnknownOrbit& o, const FusionVector& x) const;
  bool candidate_obeys_delta(const UnknownOrbit& o, const FusionVector& x, std::string* why) const;
  bool candidate_obeys_triples(const UnknownOrbit& o, const FusionVector& x, std::string* why);
  void place_overlay(const UnknownOrbit& o, const FusionVector& x);
  const FusionVector* lookup(int ia, int ib) const;  // decided or current-overlay cell
  void adopt_solution(UnknownOrbit& o, const FusionVector& x);
  CompleteTable assemble(const std::vector<const FusionVector*>& residual_choice,
                         const std::vector<int>& residual_orbits) const;
  CompletionReport make_infeasible(Counterexample ce);
  void fill_resolved(CompletionReport& rep, const CompleteTable& t) const;

  const PartialTable& pt_;
  RankParam rk_;
  bool run_verify_;
  std::vector<Label> simples_;
  int n_ = 0;

  std::vector<FusionVector> value_;  // dense cell values (decided cells)
  std::vector<char> known_;          // value_ entry valid
  std::vector<int> orbit_of_;        // orbit index or -1
  std::vector<UnknownOrbit> orbits_;
  std::map<Label, Label> dual_known_;
  std::vector<int> z_order_;  // twists first: they discriminate candidates fastest

  // Overlay of the orbit under the candidate currently being tested;
  // generation counter avoids clearing between candidates.
  std::vector<FusionVector> overlay_;
  std::vector<std::uint32_t> overlay_gen_;
  std::uint32_t gen_ = 0;

  int unknown_uncovered_ = 0;
  int unknown_markers_ = 0;
};

void Solver::load_cells() {
  const size_t nn = static_cast<size_t>(n_) * n_;
  value_.assign(nn, FusionVector{});
  known_.assign(nn, 0);
  orbit_of_.assign(nn, -1);
  overlay_.assign(nn, FusionVector{});
  overlay_gen_.assign(nn, 0);

  for (const auto& [key, cell] : pt_.cells) {
    const int ia = idx(key.a), ib = idx(key.b);
    if (cell.status == CellStatus::Covered) {
      value_[li(ia, ib)] = cell.terms;
      value_[li(ib, ia)] = cell.terms;
      known_[li(ia, ib)] = 1;
      known_[li(ib, ia)] = 1;
    } else {
      if (cell.status == CellStatus::Uncovered) ++unknown_uncovered_;
      unknown_markers_ += static_cast<int>(cell.markers.size());
    }
  }

  z_order_.clear();
  for (Sector s : {Sector::Twist, Sector::NonDiag, Sector::Diag})
    for (int iz = 0; iz < n_; ++iz)
      if (simples_[static_cast<size_t>(iz)].sector == s) z_order_.push_back(iz);
}

void Solver::build_orbits() {
  std::vector<Current> currents;
  for (int i = 0; i < rk_.order(); ++i)
    for (int e = 0; e < 2; ++e) currents.push_back(Current{i, e});

  for (const auto& [start, cell] : pt_.cells) {
    if (cell.status == CellStatus::Covered) continue;
    if (orbit_of_[li(idx(start.a), idx(start.b))] >= 0) continue;

    // BFS over two-sided current translation, tracking transports from start.
    std::map<CellKey, Current> visited;
    std::set<Current> self;
    visited.emplace(start, Current{0, 0});
    std::deque<CellKey> queue{start};
    while (!queue.empty()) {
      const CellKey cur = queue.front();
      queue.pop_front();
      const Current t = visited.at(cur);
      for (const Current& s : currents) {
        const CellKey moved[2] = {CellKey(translate(s, cur.a), cur.b),
                                  CellKey(cur.a, translate(s, cur.b))};
        for (const CellKey& next : moved) {
          const Current tn = compose(s, t);
          auto it = visited.find(next);
          if (it == visited.end()) {
            visited.emplace(next, tn);
            queue.push_back(next);
          } else if (it->second != tn) {
            self.insert(compose(inverse(it->second), tn));
          }
        }
      }
    }

    UnknownOrbit o;
    o.root = visited.begin()->first;  // map order: minimal cell key
    const Current troot = visited.at(o.root);
    for (const auto& [key, t] : visited) o.members.emplace_back(key, compose(t, inverse(troot)));
    for (const Current& g : self) o.self_constraints.push_back(g);

    const int oi = static_cast<int>(orbits_.size());
    for (const auto& [key, t] : o.members) {
      orbit_of_[li(idx(key.a), idx(key.b))] = oi;
      orbit_of_[li(idx(key.b), idx(key.a))] = oi;
    }
    orbits_.push_back(std::move(o));
  }
}

std::optional<Counterexample> Solver::record_unit(const CellKey& key, const FusionVector& value) {
  const std::int64_t m = value.mult_of(unit_label());
  if (m == 0) return std::nullopt;
  if (m > 1)
    return Counterexample{"dual-existence",
                          "unit multiplicity " + std::to_string(m) + " in " + cell_text(key)};
  for (const auto& [x, y] : {std::pair{key.a, key.b}, std::pair{key.b, key.a}}) {
    auto it = dual_known_.find(x);
    if (it != dual_known_.end() && it->second != y)
      return Counterexample{"dual-existence",
                            "unit appears in both " + cell_text(CellKey(x, it->second)) +
                                " and " + cell_text(key)};
  }
  dual_known_[key.a] = key.b;
  dual_known_[key.b] = key.a;
  return std::nullopt;
}

std::optional<Counterexample> Solver::record_member_units(const UnknownOrbit& o) {
  for (const auto& [key, t] : o.members) {
    if (auto ce = record_unit(key, value_[li(idx(key.a), idx(key.b))])) return ce;
  }
  return std::nullopt;
}

std::optional<Counterexample> Solver::precheck() {
  // Exact qdim budget per decided cell: terms plus 2 per open position.
  for (const auto& [key, cell] : pt_.cells) {
    if (cell.status == CellStatus::Uncovered) continue;
    QDim got = cell.terms.qdim_total(rk_);
    got += QDim(Rational(2 * static_cast<std::int64_t>(cell.markers.size())), Rational(0),
                rk_.radicand());
    if (got != pt_.cell_budget(key))
      return Counterexample{"qdim-homomorphism", "rule output for " + cell_text(key) +
                                                     " misses its qdim budget: " + got.to_string()};
  }

  // Unit placements decided by the rules pin duals; conflicts are fatal.
  for (const auto& [key, cell] : pt_.cells)
    if (auto ce = record_unit(key, cell.terms)) return ce;

  if (orbits_.empty()) return std::nullopt;  // no unknowns; verification covers the rest

  // Dual symmetry over decided cells with known duals.
  for (int ix = 0; ix < n_; ++ix)
    for (int iy = 0; iy < n_; ++iy) {
      if (!known_[li(ix, iy)]) continue;
      const Label y = simples_[static_cast<size_t>(iy)];
      auto dy = dual_known_.find(y);
      if (dy == dual_known_.end()) continue;
      const int iyd = idx(dy->second);
      for (int ic = 0; ic < n_; ++ic) {
        if (!known_[li(ic, iyd)]) continue;
        const Label x = simples_[static_cast<size_t>(ix)];
        const Label c = simples_[static_cast<size_t>(ic)];
        const std::int64_t lhs = value_[li(ix, iy)].mult_of(c);
        const std::int64_t rhs = value_[li(ic, iyd)].mult_of(x);
        if (lhs != rhs)
          return Counterexample{
              "dual-symmetry", "N[" + label_text(x) + " * " + label_text(y) + " -> " +
                                   label_text(c) + "] = " + std::to_string(lhs) + " but N[" +
                                   label_text(c) + " * " + label_text(dy->second) + " -> " +
                                   label_text(x) + "] = " + std::to_string(rhs)};
      }
    }

  // Associativity over triples whose needed cells are all decided.
  for (int ix = 0; ix < n_; ++ix)
    for (int iy = 0; iy < n_; ++iy) {
      if (!known_[li(ix, iy)]) continue;
      for (int iz = 0; iz < n_; ++iz) {
        if (!known_[li(iy, iz)]) continue;
        FusionVector lhs, rhs;
        bool ok = true;
        for (const auto& [c, m] : value_[li(ix, iy)]) {
          const int ic = idx(c);
          if (!known_[li(ic, iz)]) {
            ok = false;
            break;
          }
          lhs.add_scaled(value_[li(ic, iz)], m);
        }
        if (!ok) continue;
        for (const auto& [d, m] : value_[li(iy, iz)]) {
          const int id = idx(d);
          if (!known_[li(ix, id)]) {
            ok = false;
            break;
          }
          rhs.add_scaled(value_[li(ix, id)], m);
        }
        if (!ok) continue;
        if (lhs != rhs)
          return Counterexample{
              "associativity",
              "(" + label_text(simples_[static_cast<size_t>(ix)]) + " * " +
                  label_text(simples_[static_cast<size_t>(iy)]) + ") * " +
                  label_text(simples_[static_cast<size_t>(iz)]) + ": bracketings give " +
                  lhs.to_string() + " vs " + rhs.to_string()};
      }
    }

  return std::nullopt;
}

// All root totals X compatible with the root cell's decided terms and qdim
// budget. For a marker root the open part lives on the named Diag pairs, two
// units per marker; for an uncovered root it ranges over all simples.
std::vector<FusionVector> Solver::enumerate_candidates(const UnknownOrbit& o) const {
  const Cell& cell = pt_.cells.at(o.root);
  std::vector<FusionVector> out;

  if (cell.status == CellStatus::CoveredWithMarkers) {
    out.push_back(cell.terms);
    for (const DegeneratePair& d : cell.markers) {
      std::vector<FusionVector> next;
      for (const FusionVector& x : out)
        for (int m0 = 0; m0 <= 2; ++m0) {
          FusionVector y = x;
          y.add(diag(rk_, d.index, 0), m0);
          y.add(diag(rk_, d.index, 1), 2 - m0);
          next.push_back(std::move(y));
        }
      out = std::move(next);
    }
    return out;
  }

  FusionVector acc;
  const QDim zero = QDim(Rational(0), Rational(0), rk_.radicand());
  // All label qdims have nonnegative components, so a remainder with a
  // negative component can never be met exactly.
  auto feasible = [](const QDim& rem) { return rem.a >= Rational(0) && rem.b >= Rational(0); };

  auto rec = [&](auto&& self, size_t pos, QDim rem) -> void {
    if (rem == zero) {
      out.push_back(acc);
      return;
    }
    if (pos >= simples_.size()) return;
    const QDim d = qdim(rk_, simples_[pos]);
    QDim used = zero;
    int maxm = 0;
    while (feasible(rem - (used + d))) {
      used += d;
      ++maxm;
    }
    QDim left = rem - used;
    for (int m = maxm; m >= 1; --m) {
      acc.add(simples_[pos], m);
      self(self, pos + 1, left);
      acc.add(simples_[pos], -m);
      left += d;
    }
    self(self, pos + 1, rem);
  };
  rec(rec, 0, pt_.cell_budget(o.root));
  return out;
}

// The transported total t * X must extend each member's rule-decided terms:
// exact equality on covered members, remainder confined to the open Diag
// pairs (two units per marker) on marker members.
bool Solver::candidate_obeys_members(const UnknownOrbit& o, const FusionVector& x,
                                     std::string* why) const {
  for (const auto& [key, t] : o.members) {
    const Cell& cell = pt_.cells.at(key);
    if (cell.status == CellStatus::Uncovered) continue;
    FusionVector rem = translate(t, x);
    rem.add_scaled(cell.terms, -1);
    std::map<int, std::int64_t> open;
    for (const DegeneratePair& d : cell.markers) open[d.index] += 2;
    bool ok = true;
    for (const auto& [c, m] : rem) {
      auto it = c.sector == Sector::Diag ? open.find(c.i) : open.end();
      if (m < 0 || it == open.end()) {
        ok = false;
        break;
      }
      it->second -= m;
    }
    if (ok)
      for (const auto& [pos, left] : open) ok = ok && left == 0;
    if (!ok) {
      *why = "transported value " + translate(t, x).to_string() + " at " + cell_text(key) +
             " contradicts the rule terms " + cell.terms.to_string();
      return false;
    }
  }
  return true;
}

// Initial candidate set for one orbit. A covered member pins the total
// outright by simple-current covariance; otherwise candidates are enumerated
// from the root's qdim budget and filtered against the cheap constraints.
std::optional<Counterexample> Solver::seed_candidates(UnknownOrbit& o) {
  for (const auto& [key, t] : o.members) {
    if (pt_.cells.at(key).status != CellStatus::Covered) continue;
    FusionVector x = translate(inverse(t), value_[li(idx(key.a), idx(key.b))]);
    std::string why = "the orbit stabilizer moves the pinned value";
    if (!candidate_obeys_orbit(o, x) || !candidate_obeys_members(o, x, &why))
      return Counterexample{"associativity", "simple-current transport around " +
                                                 cell_text(o.root) + " is inconsistent: " + why};
    if (!candidate_obeys_delta(o, x, &why)) return Counterexample{"dual-existence", why};
    o.candidates.push_back(std::move(x));
    return std::nullopt;
  }

  std::string why;
  for (FusionVector& cand : enumerate_candidates(o)) {
    if (!candidate_obeys_orbit(o, cand)) continue;
    if (!candidate_obeys_members(o, cand, &why)) continue;
    if (!candidate_obeys_delta(o, cand, &why)) continue;
    o.candidates.push_back(std::move(cand));
  }
  if (o.candidates.empty())
    return Counterexample{"dual-existence",
                          "no qdim-budget candidate for " + cell_text(o.root) +
                              " survives the rule, orbit and delta constraints"};
  return std::nullopt;
}

bool Solver::candidate_obeys_orbit(const UnknownOrbit& o, const FusionVector& x) const {
  for (const Current& g : o.self_constraints)
    if (translate(g, x) != x) return false;
  return true;
}

bool Solver::candidate_obeys_delta(const UnknownOrbit& o, const FusionVector& x,
                                   std::string* why) const {
  const Label one = unit_label();
  for (const auto& [key, t] : o.members) {
    const std::int64_t m = translate(t, x).mult_of(one);
    if (m > 1) {
      *why = "unit multiplicity " + std::to_string(m) + " in " + cell_text(key);
      return false;
    }
    for (const auto& [left, right] : {std::pair{key.a, key.b}, std::pair{key.b, key.a}}) {
      auto it = dual_known_.find(left);
      if (it == dual_known_.end()) continue;
      const std::int64_t want = it->second == right ? 1 : 0;
      if (m != want) {
        *why = "unit multiplicity " + std::to_string(m) + " in " + cell_text(key) +
               " contradicts dual(" + label_text(left) + ") = " + label_text(it->second);
        return false;
      }
    }
  }
  return true;
}

void Solver::place_overlay(const UnknownOrbit& o, const FusionVector& x) {
  ++gen_;
  for (const auto& [key, t] : o.members) {
    const int ia = idx(key.a), ib = idx(key.b);
    FusionVector total = translate(t, x);
    overlay_[li(ib, ia)] = total;
    overlay_gen_[li(ib, ia)] = gen_;
    overlay_[li(ia, ib)] = std::move(total);
    overlay_gen_[li(ia, ib)] = gen_;
  }
}

const FusionVector* Solver::lookup(int ia, int ib) const {
  const size_t l = li(ia, ib);
  if (known_[l]) return &value_[l];
  if (overlay_gen_[l] == gen_) return &overlay_[l];
  return nullptr;
}

bool Solver::candidate_obeys_triples(const UnknownOrbit& o, const FusionVector& x,
                                     std::string* why) {
  place_overlay(o, x);
  const int ra = idx(o.root.a), rb = idx(o.root.b);
  const FusionVector& total = overlay_[li(ra, rb)];

  for (const int iz : z_order_) {
    const Label z = simples_[static_cast<size_t>(iz)];
    // (a*b)*z expanded through the candidate value.
    FusionVector lhs;
    bool lhs_ok = true;
    for (const auto& [c, m] : total) {
      const FusionVector* v = lookup(idx(c), iz);
      if (!v) {
        lhs_ok = false;
        break;
      }
      lhs.add_scaled(*v, m);
    }
    if (!lhs_ok) continue;

    if (const FusionVector* bz = lookup(rb, iz)) {  // a*(b*z)
      FusionVector rhs;
      bool rhs_ok = true;
      for (const auto& [d, m] : *bz) {
        const FusionVector* v = lookup(ra, idx(d));
        if (!v) {
          rhs_ok = false;
          break;
        }
        rhs.add_scaled(*v, m);
      }
      if (rhs_ok && lhs != rhs) {
        *why = "associativity fails at (" + cell_text(o.root) + ") * " + label_text(z);
        return false;
      }
    }
    if (const FusionVector* az = lookup(ra, iz)) {  // (a*z)*b
      FusionVector mid;
      bool mid_ok = true;
      for (const auto& [c, m] : *az) {
        const FusionVector* v = lookup(idx(c), rb);
        if (!v) {
          mid_ok = false;
          break;
        }
        mid.add_scaled(*v, m);
      }
      if (mid_ok && lhs != mid) {
        *why = "associativity fails at (" + label_text(o.root.a) + " * " + label_text(z) +
               ") * " + label_text(o.root.b);
        return false;
      }
    }
  }
  return true;
}

void Solver::adopt_solution(UnknownOrbit& o, const FusionVector& x) {
  o.solved = true;
  for (const auto& [key, t] : o.members) {
    const int ia = idx(key.a), ib = idx(key.b);
    FusionVector total = translate(t, x);
    value_[li(ib, ia)] = total;
    known_[li(ib, ia)] = 1;
    value_[li(ia, ib)] = std::move(total);
    known_[li(ia, ib)] = 1;
  }
}

CompleteTable Solver::assemble(const std::vector<const FusionVector*>& residual_choice,
                               const std::vector<int>& residual_orbits) const {
  CompleteTable t;
  t.init(rk_, pt_.cfg);
  std::vector<const FusionVector*> choice_of(orbits_.size(), nullptr);
  for (size_t i = 0; i < residual_orbits.size(); ++i)
    choice_of[static_cast<size_t>(residual_orbits[i])] = residual_choice[i];

  for (const auto& [key, cell] : pt_.cells) {
    const int ia = idx(key.a), ib = idx(key.b);
    const size_t l = li(ia, ib);
    const CellOrigin origin{cell.rule, cell.status != CellStatus::Covered};
    if (known_[l]) {
      t.set_cell(key.a, key.b, value_[l], origin);
      continue;
    }
    const int oi = orbit_of_[l];
    assert(oi >= 0 && choice_of[static_cast<size_t>(oi)]);
    const UnknownOrbit& o = orbits_[static_cast<size_t>(oi)];
    Current tr{0, 0};
    for (const auto& [mkey, mt] : o.members)
      if (mkey == key) tr = mt;
    t.set_cell(key.a, key.b, translate(tr, *choice_of[static_cast<size_t>(oi)]), origin);
  }
  return t;
}

CompletionReport Solver::make_infeasible(Counterexample ce) {
  CompletionReport rep;
  rep.rk = rk_;
  rep.cfg = pt_.cfg;
  rep.status = CompletionStatus::Infeasible;
  rep.unknown_uncovered = unknown_uncovered_;
  rep.unknown_markers = unknown_markers_;
  rep.failure = std::move(ce);
  return rep;
}

void Solver::fill_resolved(CompletionReport& rep, const CompleteTable& t) const {
  for (const auto& [key, cell] : pt_.cells)
    if (cell.status != CellStatus::Covered)
      rep.resolved.push_back(ResolvedCell{key, t.product(key.a, key.b)});
}

CompletionReport Solver::run() {
  load_cells();
  build_orbits();

  if (auto ce = precheck()) return make_infeasible(std::move(*ce));

  for (UnknownOrbit& o : orbits_)
    if (auto ce = seed_candidates(o)) return make_infeasible(std::move(*ce));

  // Fixpoint: filtering an orbit against everything already decided; each
  // adoption unlocks lookups for the rest.
  Counterexample last_reject{"associativity", ""};
  bool progress = true;
  while (progress) {
    progress = false;
    for (UnknownOrbit& o : orbits_) {
      if (o.solved) continue;
      std::vector<FusionVector> kept;
      std::string why;
      for (const FusionVector& cand : o.candidates) {
        if (!candidate_obeys_delta(o, cand, &why)) {
          last_reject = {"dual-existence", why};
          continue;
        }
        if (!candidate_obeys_triples(o, cand, &why)) {
          last_reject = {"associativity", why};
          continue;
        }
        kept.push_back(cand);
      }
      if (kept.empty())
        return make_infeasible(Counterexample{
            last_reject.axiom, "every qdim-budget candidate for " + cell_text(o.root) +
                                   " is rejected; last: " + last_reject.detail});
      o.candidates = std::move(kept);
      if (o.candidates.size() == 1) {
        adopt_solution(o, o.candidates.front());
        if (auto ce = record_member_units(o)) return make_infeasible(std::move(*ce));
        progress = true;
      }
    }
  }

  std::vector<int> residual;
  for (size_t i = 0; i < orbits_.size(); ++i)
    if (!orbits_[i].solved) residual.push_back(static_cast<int>(i));

  CompletionReport rep;
  rep.rk = rk_;
  rep.cfg = pt_.cfg;
  rep.unknown_uncovered = unknown_uncovered_;
  rep.unknown_markers = unknown_markers_;

  if (residual.empty()) {
    CompleteTable t = assemble({}, {});
    if (run_verify_) {
      rep.axioms = verify_axioms(t);
      rep.verified = true;
      if (!rep.axioms.all_passed()) {
        const AxiomResult* f = rep.axioms.first_failure();
        return make_infeasible(Counterexample{f->name, f->counterexample});
      }
    }
    rep.status = CompletionStatus::Unique;
    fill_resolved(rep, t);
    rep.table = std::move(t);
    return rep;
  }

  // Residual ambiguity: every combination must stand against the full axiom
  // suite (this is the authority regardless of run_verify_).
  std::vector<std::vector<ResolvedCell>> solutions;
  std::optional<CompleteTable> sole_table;
  std::optional<AxiomReport> sole_axioms;
  std::optional<Counterexample> first_fail;
  std::vector<const FusionVector*> choice(residual.size(), nullptr);
  std::vector<size_t> pos(residual.size(), 0);
  while (true) {
    for (size_t i = 0; i < residual.size(); ++i)
      choice[i] = &orbits_[static_cast<size_t>(residual[i])].candidates[pos[i]];
    CompleteTable t = assemble(choice, residual);
    AxiomReport ar = verify_axioms(t);
    if (ar.all_passed()) {
      std::vector<ResolvedCell> sol;
      for (const auto& [key, cell] : pt_.cells)
        if (cell.status != CellStatus::Covered)
          sol.push_back(ResolvedCell{key, t.product(key.a, key.b)});
      solutions.push_back(std::move(sol));
      if (solutions.size() == 1) {
        sole_table = std::move(t);
        sole_axioms = std::move(ar);
      }
    } else if (!first_fail) {
      const AxiomResult* f = ar.first_failure();
      first_fail = Counterexample{f->name, f->counterexample};
    }
    size_t d = 0;
    while (d < residual.size()) {
      if (++pos[d] < orbits_[static_cast<size_t>(residual[d])].candidates.size()) break;
      pos[d] = 0;
      ++d;
    }
    if (d == residual.size()) break;
  }

  if (solutions.empty())
    return make_infeasible(first_fail.value_or(
        Counterexample{"associativity", "no residual assignment satisfies the axiom suite"}));
  if (solutions.size() == 1) {
    rep.status = CompletionStatus::Unique;
    rep.resolved = std::move(solutions.front());
    rep.table = std::move(sole_table);
    rep.axioms = std::move(*sole_axioms);
    rep.verified = true;
    return rep;
  }
  rep.status = CompletionStatus::Ambiguous;
  rep.solutions = std::move(solutions);
  return rep;
}

}  // namespace

CompletionReport complete_table(const PartialTable& pt, bool run_verify) {
  Solver solver(pt, run_verify);
  return solver.run();
}

std::string CompletionReport::to_text() const {
  std::string out = "completion report\n";
  out += "k: " + std::to_string(rk.k) + "\n";
  out += std::string("variant: ") + variant_name(cfg.variant) + "\n";
  out += std::string("degenerate-policy: ") +
         (cfg.degenerate == DegeneratePolicy::Defer ? "defer" : "split-even") + "\n";
  out += std::string("status: ") + completion_status_name(status) + "\n";
  out += "unknown cells (uncovered): " + std::to_string(unknown_uncovered) + "\n";
  out += "unknown degenerate positions: " + std::to_string(unknown_markers) + "\n";
  if (status == CompletionStatus::Infeasible && failure) {
    out += "failing axiom: " + failure->axiom + "\n";
    out += "counterexample: " + failure->detail + "\n";
    return out;
  }
  if (status == CompletionStatus::Ambiguous) {
    out += "solutions: " + std::to_string(solutions.size()) + "\n";
    for (size_t i = 0; i < solutions.size(); ++i) {
      out += "solution " + std::to_string(i + 1) + ":\n";
      for (const ResolvedCell& rc : solutions[i])
        out += "  " + cell_text(rc.key) + " = " + rc.value.to_string() + "\n";
    }
    return out;
  }
  if (!resolved.empty()) {
    out += "resolved cells:\n";
    for (const ResolvedCell& rc : resolved)
      out += "  " + cell_text(rc.key) + " = " + rc.value.to_string() + "\n";
  }
  if (verified) {
    int total = static_cast<int>(axioms.results.size());
    int passed = 0;
    for (const AxiomResult& r : axioms.results) passed += r.passed ? 1 : 0;
    out += "axioms: " + std::to_string(passed) + "/" + std::to_string(total) + " pass\n";
  } else {
    out += "axioms: not run\n";
  }
  return out;
}

namespace {

bool tables_equal(const CompleteTable& x, const CompleteTable& y) {
  if (x.simples != y.simples) return false;
  const int n = static_cast<int>(x.simples.size());
  for (int ia = 0; ia < n; ++ia)
    for (int ib = 0; ib < n; ++ib)
      if (x.product_at(ia, ib) != y.product_at(ia, ib)) return false;
  return true;
}

}  // namespace

ArbitrationOutcome arbitrate_variants(const RankParam& rk, DegeneratePolicy pol) {
  ArbitrationOutcome out;
  out.rk = rk;
  for (Variant v : {Variant::Printed, Variant::Corrected}) {
    RuleVariantConfig cfg{v, pol};
    out.reports.emplace_back(v, complete_table(build_partial_table(rk, cfg), true));
  }

  std::vector<Variant> passing;
  for (const auto& [v, rep] : out.reports)
    if (rep.table && rep.verified && rep.axioms.all_passed()) passing.push_back(v);

  if (passing.size() == 1) {
    out.passing = passing.front();
  } else if (passing.size() == 2 &&
             tables_equal(*out.reports[0].second.table, *out.reports[1].second.table)) {
    out.coincident = true;
    out.passing = Variant::Corrected;
  }
  return out;
}

std::string ArbitrationOutcome::to_text() const {
  std::string out = "variant arbitration\n";
  out += "k: " + std::to_string(rk.k) + "\n";
  for (const auto& [v, rep] : reports) {
    out += std::string("variant ") + variant_name(v) + ": " + completion_status_name(rep.status);
    if (rep.status == CompletionStatus::Infeasible && rep.failure)
      out += " (" + rep.failure->axiom + ": " + rep.failure->detail + ")";
    else if (rep.verified)
      out += rep.axioms.all_passed() ? "; axioms pass" : "; axioms fail";
    out += "\n";
  }
  if (coincident)
    out += "note: both variants pass with identical tables; corrected is canonical\n";
  out += "passing variant: ";
  out += passing ? variant_name(*passing) : "none";
  out += "\n";
  return out;
}

}  // namespace orbifold
