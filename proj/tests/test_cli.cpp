#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef CLI_BINARY_PATH
#error "CLI_BINARY_PATH must point at the orbifold-fusion binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr merged
};

// Runs the CLI through the shell with a controlled environment: the variant
// variable is cleared unless `env_variant` is given.
RunResult run_cli(const std::string& args, const std::string& env_variant = "") {
  std::string cmd = "env ";
  if (env_variant.empty())
    cmd += "-u ORBIFOLD_FUSION_VARIANT ";
  else
    cmd += "ORBIFOLD_FUSION_VARIANT=" + env_variant + " ";
  cmd += std::string(CLI_BINARY_PATH) + " " + args + " 2>&1";

  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.output.append(buf, n);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("version and help") {
  const RunResult v = run_cli("--version");
  CHECK(v.exit_code == 0);
  CHECK(contains(v.output, "orbifold-fusion 1.0.0"));

  const RunResult h = run_cli("--help");
  CHECK(h.exit_code == 0);
  for (const char* sub : {"enumerate", "fuse", "table", "verify", "complete", "branch", "qdim"})
    CHECK(contains(h.output, sub));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("").exit_code == 2);                                // missing subcommand
  CHECK(run_cli("enumerate").exit_code == 2);                       // missing --k
  CHECK(run_cli("enumerate --k 0").exit_code == 2);                 // k must be positive
  CHECK(run_cli("enumerate --k -3").exit_code == 2);
  CHECK(run_cli("enumerate --k 2 --format yaml").exit_code == 2);   // unknown format
  CHECK(run_cli("fuse --k 2 \"N(1,0)\"").exit_code == 2);           // needs two labels
  CHECK(run_cli("fuse --k 2 --variant emended \"N(1,0)\" \"N(1,0)\"").exit_code == 2);
  CHECK(run_cli("qdim --k 2 \"X(1,0)\"").exit_code == 2);           // bad sector letter
  CHECK(run_cli("qdim --k 2 \"N(1,1)\"").exit_code == 2);           // degenerate pair
  CHECK(run_cli("nonsense --k 2").exit_code == 2);
  const RunResult bad = run_cli("qdim --k 2 \"N(1,1)\"");
  CHECK(contains(bad.output, "error:"));
}

TEST_CASE("enumerate lists the simples") {
  const RunResult r = run_cli("enumerate --k 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "count: 39"));
  CHECK(contains(r.output, "nondiag: 15"));
  CHECK(contains(r.output, "diag: 12"));
  CHECK(contains(r.output, "twist: 12"));
  CHECK(contains(r.output, "N(1,0)  nondiag  qdim 2"));
  CHECK(contains(r.output, "T(0,0)  twist  qdim sqrt(6)"));
  CHECK(contains(r.output, "global dimension: 144"));

  const RunResult j = run_cli("enumerate --k 2 --format json");
  CHECK(j.exit_code == 0);
  CHECK(contains(j.output, "\"tool\": \"orbifold-fusion\""));
  CHECK(contains(j.output, "\"simple_count\": 22"));

  const RunResult c = run_cli("enumerate --k 1 --format csv");
  CHECK(c.exit_code == 0);
  CHECK(contains(c.output, "label,sector,qdim"));
  CHECK(contains(c.output, "\"N(1,0)\",nondiag,2"));
}

TEST_CASE("qdim and branch") {
  const RunResult q = run_cli("qdim --k 3 \"T(1,0)\"");
  CHECK(q.exit_code == 0);
  CHECK(contains(q.output, "qdim: sqrt(6)"));
  const RunResult q2 = run_cli("qdim --k 2 \"T(1,0)\"");
  CHECK(contains(q2.output, "qdim: 2"));  // sqrt(4) folds

  const RunResult b = run_cli("branch --k 2 \"N(1,0)\"");
  CHECK(b.exit_code == 0);
  CHECK(contains(b.output, "component: (1, V[1])"));
  CHECK(contains(b.output, "component: (5, V[3])"));
}

TEST_CASE("fuse covered and completed cells") {
  const RunResult r = run_cli("fuse --k 1 \"N(1,0)\" \"T(0,0)\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "N(1,0) * T(0,0) = T(1,0) + T(1,1)"));
  CHECK(contains(r.output, "origin: rule:nondiag-twist"));

  // uncovered cell: the value comes from completion
  const RunResult u = run_cli("fuse --k 2 \"N(1,0)\" \"N(3,0)\"");
  CHECK(u.exit_code == 0);
  CHECK(contains(u.output, "N(1,0) * N(3,0) = N(3,1) + D(0,0) + D(0,1)"));
  CHECK(contains(u.output, "origin: completion:uncovered"));

  // short alias labels parse too
  const RunResult a = run_cli("fuse --k 1 \"(1 0)\" \"^(0 0)\"");
  CHECK(a.exit_code == 0);
  CHECK(contains(a.output, "= T(1,0) + T(1,1)"));
}

TEST_CASE("variant resolution: flag beats environment beats default") {
  const std::string cell = "fuse --k 1 \"D(1,0)\" \"T(0,0)\"";
  // default is corrected
  CHECK(contains(run_cli(cell).output, "= T(0,1)"));
  // environment selects printed
  const RunResult env_printed = run_cli(cell, "printed");
  CHECK(contains(env_printed.output, "variant: printed"));
  CHECK(contains(env_printed.output, "= T(0,0)"));
  // flag overrides environment
  const RunResult flag_wins = run_cli(cell + " --variant corrected", "printed");
  CHECK(contains(flag_wins.output, "variant: corrected"));
  CHECK(contains(flag_wins.output, "= T(0,1)"));
  // unusable environment value is a usage error
  const RunResult bad_env = run_cli(cell, "emended");
  CHECK(bad_env.exit_code == 2);
  CHECK(contains(bad_env.output, "invalid ORBIFOLD_FUSION_VARIANT value 'emended'"));
  // ...but not for subcommands that never touch the rules
  CHECK(run_cli("enumerate --k 2", "emended").exit_code == 0);
}

TEST_CASE("table emits every cell and fails cleanly for printed rules") {
  const RunResult r = run_cli("table --k 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "simples: 9"));
  CHECK(contains(r.output, "cells: 45"));
  CHECK(contains(r.output, "T(0,0) * T(0,0) = D(0,0) + D(1,1)"));

  const RunResult p = run_cli("table --k 2 --variant printed");
  CHECK(p.exit_code == 3);
  CHECK(contains(p.output, "status: infeasible"));
  CHECK(contains(p.output, "failing axiom: dual-existence"));
}

TEST_CASE("complete reports the solved cells") {
  const RunResult k1 = run_cli("complete --k 1");
  CHECK(k1.exit_code == 0);
  CHECK(contains(k1.output, "status: unique"));
  CHECK(contains(k1.output, "unknown cells (uncovered): 0"));

  const RunResult k2 = run_cli("complete --k 2");
  CHECK(k2.exit_code == 0);
  CHECK(contains(k2.output, "status: unique"));
  CHECK(contains(k2.output, "unknown cells (uncovered): 3"));
  CHECK(contains(k2.output, "N(1,0) * N(3,0) = N(3,1) + D(0,0) + D(0,1)"));

  const RunResult p = run_cli("complete --k 2 --variant printed");
  CHECK(p.exit_code == 3);
  CHECK(contains(p.output, "status: infeasible"));
}

TEST_CASE("verify: single variant and arbitration") {
  const RunResult good = run_cli("verify --k 2 --variant corrected");
  CHECK(good.exit_code == 0);
  CHECK(contains(good.output, "result: pass"));
  CHECK(contains(good.output, "associativity"));
  CHECK(contains(good.output, "simple-current-group"));

  const RunResult bad = run_cli("verify --k 1 --variant printed");
  CHECK(bad.exit_code == 3);
  CHECK(contains(bad.output, "status: infeasible"));
  CHECK(contains(bad.output, "failing axiom: associativity"));
  CHECK(contains(bad.output,
                 "(D(1,0) * T(0,0)) * T(0,0): bracketings give D(0,0) + D(1,1) vs "
                 "D(0,1) + D(1,0)"));

  const RunResult arb = run_cli("verify --k 2");
  CHECK(arb.exit_code == 0);
  CHECK(contains(arb.output, "variant printed: infeasible"));
  CHECK(contains(arb.output, "variant corrected: unique; axioms pass"));
  CHECK(contains(arb.output, "passing variant: corrected"));

  // the environment variable also selects the single-variant mode
  const RunResult env_sel = run_cli("verify --k 1", "printed");
  CHECK(env_sel.exit_code == 3);
}

TEST_CASE("--out writes the same bytes as stdout, and runs are deterministic") {
  const std::string f1 = "cli_out_a.json";
  const std::string f2 = "cli_out_b.json";
  const RunResult direct = run_cli("table --k 2 --format json");
  REQUIRE(direct.exit_code == 0);
  const RunResult o1 = run_cli("table --k 2 --format json --out " + f1);
  REQUIRE(o1.exit_code == 0);
  CHECK(o1.output.empty());
  const RunResult o2 = run_cli("table --k 2 --format json --out " + f2);
  REQUIRE(o2.exit_code == 0);
  const std::string s1 = slurp(f1), s2 = slurp(f2);
  CHECK(s1 == direct.output);
  CHECK(s1 == s2);
  CHECK_FALSE(s1.empty());
  std::remove(f1.c_str());
  std::remove(f2.c_str());

  const RunResult c1 = run_cli("complete --k 3 --format json");
  const RunResult c2 = run_cli("complete --k 3 --format json");
  CHECK(c1.output == c2.output);
}

TEST_CASE("unwritable --out path is an error") {
  const RunResult r = run_cli("enumerate --k 1 --out /nonexistent-dir/x.txt");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "error: cannot write"));
}
