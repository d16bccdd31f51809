// Acceptance suite: each check prints exactly one PASS/FAIL line with the
// measured values; the process exits nonzero if any check fails.
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "orbifold/completion.hpp"
#include "orbifold/export.hpp"
#include "orbifold/ring.hpp"

using namespace orbifold;

namespace {

constexpr RuleVariantConfig kCorrected{Variant::Corrected, DegeneratePolicy::Defer};

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;  // keep the first failure
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

int g_failures = 0;

void report(int num, const std::string& name, const Outcome& o, long elapsed_ms,
            long budget_ms = 0) {
  bool pass = o.pass;
  std::string detail = o.detail;
  if (pass && budget_ms > 0 && elapsed_ms >= budget_ms)
    detail = "took " + std::to_string(elapsed_ms) + " ms, budget " + std::to_string(budget_ms),
    pass = false;
  if (!pass) ++g_failures;
  std::printf("[%s] %02d %s (%ld ms)%s%s\n", pass ? "PASS" : "FAIL", num, name.c_str(),
              elapsed_ms, detail.empty() ? "" : " — ", detail.c_str());
  std::fflush(stdout);
}

const CompleteTable& completed(int k) {
  static std::vector<CompletionReport> cache(9);
  if (!cache[static_cast<size_t>(k)].table) {
    cache[static_cast<size_t>(k)] =
        complete_table(build_partial_table(RankParam{k}, kCorrected), /*run_verify=*/false);
  }
  return *cache[static_cast<size_t>(k)].table;
}

void check_counts() {
  const auto t0 = Clock::now();
  Outcome o;
  for (int k = 1; k <= 8; ++k) {
    const RankParam rk{k};
    const auto all = enumerate_simples(rk);
    int nd = 0, d = 0, t = 0;
    for (const Label& x : all) {
      if (x.sector == Sector::NonDiag) ++nd;
      if (x.sector == Sector::Diag) ++d;
      if (x.sector == Sector::Twist) ++t;
    }
    if (static_cast<int>(all.size()) != 2 * k * k + 7 * k)
      o.fail("k=" + std::to_string(k) + ": " + std::to_string(all.size()) + " labels");
    if (nd != 2 * k * k - k || d != 4 * k || t != 4 * k)
      o.fail("k=" + std::to_string(k) + ": class counts " + std::to_string(nd) + "/" +
             std::to_string(d) + "/" + std::to_string(t));
    if (std::set<Label>(all.begin(), all.end()).size() != all.size())
      o.fail("k=" + std::to_string(k) + ": duplicate labels");
  }
  if (o.pass) o.detail = "k=1..8: 2k^2+7k labels, classes (2k^2-k, 4k, 4k)";
  report(1, "simple-object counts", o, ms_since(t0), 1000);
}

void check_qdims() {
  const auto t0 = Clock::now();
  Outcome o;
  for (int k = 1; k <= 8; ++k) {
    const RankParam rk{k};
    const QDim two(Rational(2), Rational(0), rk.radicand());
    const QDim one(Rational(1), Rational(0), rk.radicand());
    const QDim root(Rational(0), Rational(1), rk.radicand());
    for (const Label& x : enumerate_simples(rk)) {
      const QDim d = qdim(rk, x);
      const QDim want = x.sector == Sector::NonDiag ? two
                        : x.sector == Sector::Diag  ? one
                                                    : root;
      if (d != want)
        o.fail("k=" + std::to_string(k) + ": qdim(" + label_text(x) + ") = " + d.to_string());
      if (!d.at_least(Rational(1)))
        o.fail("k=" + std::to_string(k) + ": qdim(" + label_text(x) + ") < 1");
    }
  }
  if (o.pass) o.detail = "k=1..8: qdims are exactly 2 / 1 / sqrt(2k), all >= 1";
  report(2, "quantum dimensions", o, ms_since(t0), 1000);
}

void check_qdim_homomorphism() {
  const auto t0 = Clock::now();
  Outcome o;
  std::int64_t pairs = 0;
  for (int k = 1; k <= 6; ++k) {
    const RankParam rk{k};
    const CompleteTable& t = completed(k);
    const int n = static_cast<int>(t.simples.size());
    for (int ia = 0; ia < n; ++ia)
      for (int ib = 0; ib < n; ++ib) {
        ++pairs;
        const Label& a = t.simples[static_cast<size_t>(ia)];
        const Label& b = t.simples[static_cast<size_t>(ib)];
        if (qdim_vector(rk, t.product_at(ia, ib)) != qdim(rk, a) * qdim(rk, b)) {
          o.fail("k=" + std::to_string(k) + ": " + label_text(a) + " * " + label_text(b));
          break;
        }
      }
  }
  if (o.pass)
    o.detail = "k=1..6: qdim(x*y) = qdim(x)*qdim(y) exactly on " + std::to_string(pairs) +
               " ordered pairs";
  report(3, "qdim homomorphism on completed tables", o, ms_since(t0), 30000);
}

void check_axiom_suite_arbitration() {
  const auto t0 = Clock::now();
  Outcome o;
  for (int k = 1; k <= 4; ++k) {
    const ArbitrationOutcome arb = arbitrate_variants(RankParam{k});
    int passing = 0;
    for (const auto& [v, rep] : arb.reports)
      if (rep.status == CompletionStatus::Unique && rep.verified && rep.axioms.all_passed())
        ++passing;
    if (passing != 1)
      o.fail("k=" + std::to_string(k) + ": " + std::to_string(passing) + " variants pass");
    if (!arb.passing || *arb.passing != Variant::Corrected)
      o.fail("k=" + std::to_string(k) + ": passing variant not corrected");
    if (arb.to_text().find("passing variant: corrected") == std::string::npos)
      o.fail("k=" + std::to_string(k) + ": report does not name the passing variant");
  }
  if (o.pass) o.detail = "k=1..4: exactly one variant passes all 11 axioms, named corrected";
  report(4, "full axiom suite selects one variant", o, ms_since(t0), 60000);
}

void check_spot_products() {
  const auto t0 = Clock::now();
  Outcome o;
  const RankParam rk{1};
  const auto N10 = nondiag(rk, 1, 0);
  auto expect = [&](const Label& x, const Label& y, std::initializer_list<Label> labs) {
    FusionVector want;
    for (const Label& l : labs) want.add(l);
    const FuseOutcome out = fuse(rk, x, y, kCorrected);
    if (!out.covered || !out.markers.empty() || out.terms != want)
      o.fail(label_text(x) + " * " + label_text(y) + " = " + out.terms.to_string());
  };
  expect(N10, twist(rk, 0, 0), {twist(rk, 1, 0), twist(rk, 1, 1)});
  expect(N10, diag(rk, 1, 0), {N10});
  expect(diag(rk, 1, 0), diag(rk, 1, 1), {diag(rk, 0, 1)});
  expect(diag(rk, 1, 0), twist(rk, 0, 0), {twist(rk, 0, 1)});
  expect(diag(rk, 1, 1), twist(rk, 1, 0), {twist(rk, 1, 1)});
  expect(N10, N10, {diag(rk, 0, 0), diag(rk, 0, 1), diag(rk, 1, 0), diag(rk, 1, 1)});
  expect(twist(rk, 0, 0), twist(rk, 0, 1), {diag(rk, 0, 1), diag(rk, 1, 0)});
  expect(twist(rk, 1, 0), twist(rk, 1, 1), {diag(rk, 0, 1), diag(rk, 1, 1)});
  expect(twist(rk, 0, 0), twist(rk, 1, 0), {N10});
  if (o.pass) o.detail = "k=1: all nine hand-checkable products match";
  report(5, "k=1 spot products", o, ms_since(t0));
}

void check_simple_currents() {
  const auto t0 = Clock::now();
  Outcome o;
  for (int k = 1; k <= 6; ++k) {
    const RankParam rk{k};
    const CompleteTable& t = completed(k);
    const std::vector<Label> currents = simple_currents(t);
    if (static_cast<int>(currents.size()) != 4 * k)
      o.fail("k=" + std::to_string(k) + ": " + std::to_string(currents.size()) + " currents");
    for (const Label& g : currents)
      if (g.sector != Sector::Diag) o.fail("k=" + std::to_string(k) + ": non-diag current");
    // group law: D(a,e) * D(c,f) = D(a+c, e+f), i.e. Z_2k x Z_2
    for (const Label& g : currents)
      for (const Label& h : currents) {
        const FusionVector& p = t.product(g, h);
        if (p.term_count() != 1 || p.terms().front().second != 1 ||
            p.terms().front().first != diag(rk, g.i + h.i, g.j + h.j)) {
          o.fail("k=" + std::to_string(k) + ": " + label_text(g) + " * " + label_text(h));
          break;
        }
      }
    // generator orders: D(1,0) has order 2k, D(0,1) order 2
    Label p = unit_label();
    int order = 0;
    do {
      const FusionVector& v = t.product(diag(rk, 1, 0), p);
      p = v.terms().front().first;
      ++order;
    } while (p != unit_label() && order <= 4 * k);
    if (order != 2 * k) o.fail("k=" + std::to_string(k) + ": D(1,0) has order " +
                               std::to_string(order));
    if (t.product(diag(rk, 0, 1), diag(rk, 0, 1)).terms().front().first != unit_label())
      o.fail("k=" + std::to_string(k) + ": D(0,1) not an involution");
  }
  if (o.pass) o.detail = "k=1..6: {qdim=1} = 4k diag labels, group law Z_2k x Z_2";
  report(6, "simple-current group", o, ms_since(t0));
}

void check_branching() {
  const auto t0 = Clock::now();
  Outcome o;
  for (int k = 1; k <= 6; ++k) {
    const RankParam rk{k};
    const QDim two(Rational(2), Rational(0), rk.radicand());
    std::set<BranchComponent> seen;
    int total = 0;
    for (const Label& x : enumerate_simples(rk)) {
      const auto b = branch(rk, x);
      if (b[0] == b[1]) o.fail("k=" + std::to_string(k) + ": equal components for " +
                               label_text(x));
      for (const BranchComponent& c : b) {
        ++total;
        if (!seen.insert(c).second)
          o.fail("k=" + std::to_string(k) + ": repeated component " + branch_component_text(c));
      }
      if (qdim_sub(rk, b[0].part) + qdim_sub(rk, b[1].part) != two * qdim(rk, x))
        o.fail("k=" + std::to_string(k) + ": qdim sum off for " + label_text(x));
    }
    if (total != 2 * simple_count(rk))
      o.fail("k=" + std::to_string(k) + ": " + std::to_string(total) + " components");
  }
  if (o.pass) o.detail = "k=1..6: 2 distinct summands each, all pairwise distinct, qdim sums match";
  report(7, "branching consistency", o, ms_since(t0));
}

void check_global_dimension() {
  const auto t0 = Clock::now();
  Outcome o;
  for (int k = 1; k <= 8; ++k) {
    const RankParam rk{k};
    const QDim g = global_dimension(rk);
    if (g != QDim(Rational(16 * k * k), Rational(0), rk.radicand()))
      o.fail("k=" + std::to_string(k) + ": " + g.to_string());
  }
  if (o.pass) o.detail = "k=1..8: sum of squared qdims equals 16 k^2";
  report(8, "global dimension", o, ms_since(t0));
}

void check_completion_unique_deterministic() {
  const auto t0 = Clock::now();
  Outcome o;
  for (int k = 1; k <= 4; ++k) {
    const RankParam rk{k};
    const CompletionReport a = complete_table(build_partial_table(rk, kCorrected));
    const CompletionReport b = complete_table(build_partial_table(rk, kCorrected));
    if (a.status != CompletionStatus::Unique)
      o.fail("k=" + std::to_string(k) + ": status " + completion_status_name(a.status));
    if (a.to_text() != b.to_text())
      o.fail("k=" + std::to_string(k) + ": reports differ between runs");
    if (export_completion(a, ExportFormat::Json) != export_completion(b, ExportFormat::Json))
      o.fail("k=" + std::to_string(k) + ": json exports differ between runs");
  }
  if (o.pass) o.detail = "k=1..4: status unique, byte-identical reports across runs";
  report(9, "completion uniqueness and determinism", o, ms_since(t0));
}

void check_mutation_sensitivity() {
  const auto t0 = Clock::now();
  Outcome o;
  const CompleteTable& base = completed(2);
  if (!verify_axioms(base).all_passed()) o.fail("k=2 base table does not verify");
  const size_t n = base.simples.size();
  std::int64_t mutations = 0;
  for (size_t ia = 0; ia < n && o.pass; ++ia)
    for (size_t ib = ia; ib < n && o.pass; ++ib)
      for (size_t ic = 0; ic < n; ++ic) {
        CompleteTable t = base;
        const Label a = t.simples[ia], b = t.simples[ib], c = t.simples[ic];
        FusionVector v = t.product(a, b);
        v.add(c, 1);
        t.set_cell(a, b, v, t.origin(a, b));
        ++mutations;
        const AxiomReport rep = verify_axioms(t);
        const AxiomResult* f = rep.first_failure();
        if (rep.all_passed() || f == nullptr || f->name.empty() || f->counterexample.empty()) {
          o.fail("bump of N[" + label_text(a) + "," + label_text(b) + " -> " + label_text(c) +
                 "] not caught");
          break;
        }
      }
  if (o.pass)
    o.detail = "k=2: all " + std::to_string(mutations) +
               " single +1 bumps rejected with named counterexamples";
  report(10, "mutation sensitivity", o, ms_since(t0));
}

}  // namespace

int main() {
  std::printf("acceptance checks, tool %s %s\n", kToolName, kToolVersion);
  check_counts();
  check_qdims();
  check_qdim_homomorphism();
  check_axiom_suite_arbitration();
  check_spot_products();
  check_simple_currents();
  check_branching();
  check_global_dimension();
  check_completion_unique_deterministic();
  check_mutation_sensitivity();
  if (g_failures == 0) {
    std::printf("all 10 checks passed\n");
    return 0;
  }
  std::printf("%d check(s) failed\n", g_failures);
  return 1;
}
