#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = (env.empty() ? "" : env + " ") + std::string(UNAVOID_CLI_PATH) + " " + args +
                    " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::trunc);
  out << contents;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("decide exit codes and wording") {
  write_file("/tmp/unavoid_x0_24.set", "k=2\na--a\nb--b\na--b\n");
  RunResult unavoid = run("decide /tmp/unavoid_x0_24.set --exact");
  CHECK(unavoid.exit_code == 1);
  CHECK(contains(unavoid.out, "Unavoidable (window-graph)"));

  write_file("/tmp/unavoid_single.set", "k=2\na--a\n");
  RunResult avoid = run("decide /tmp/unavoid_single.set");
  CHECK(avoid.exit_code == 0);
  CHECK(contains(avoid.out, "Avoidable period "));

  write_file("/tmp/unavoid_x0_35.set", "k=3\na---a\nb---b\nc---c\na---b\na---c\nb---c\n");
  RunResult unknown = run("decide /tmp/unavoid_x0_35.set --period-max 9 --max-nodes 8");
  CHECK(unknown.exit_code == 2);
  CHECK(contains(unknown.out, "Unknown"));

  write_file("/tmp/unavoid_bad.set", "k=2\nabc\n");
  RunResult bad = run("decide /tmp/unavoid_bad.set");
  CHECK(bad.exit_code == 64);

  RunResult missing = run("decide /tmp/unavoid_no_such_file.set");
  CHECK(missing.exit_code == 64);
}

TEST_CASE("node cap environment override") {
  write_file("/tmp/unavoid_x0_26.set", "k=2\na----a\nb----b\na----b\n");
  // Cap of 8 nodes forces the policy off the exact path; the set is
  // unavoidable, so the bounded search reports Unknown.
  RunResult r = run("decide /tmp/unavoid_x0_26.set --period-max 6", "UNAVOID_MAX_NODES=8");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.out, "Unknown"));
}

TEST_CASE("holes output") {
  RunResult k3 = run("holes --k 3 --m 7");
  CHECK(k3.exit_code == 0);
  CHECK(contains(k3.out, "H = 23 (conditional on Conjecture 1), max_fill = 7"));

  RunResult k2 = run("holes --k 2 --m 6");
  CHECK(k2.exit_code == 0);
  CHECK(contains(k2.out, "H = 7"));
  CHECK(!contains(k2.out, "conditional"));
}

TEST_CASE("x2 command") {
  RunResult r = run("x2 --m 12 --x1 6 --y1 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "a------b---b"));
  CHECK(contains(r.out, "in_conjecture_region: true"));
  CHECK(contains(r.out, "T1.R3"));

  RunResult eq2 = run("x2 --m 5 --x1 0 --y1 1 --eq2");
  CHECK(eq2.exit_code == 0);
  CHECK(contains(eq2.out, "aa--a"));
  CHECK(contains(eq2.out, "b-c-c"));

  RunResult alias = run("x2eq2 --m 5 --x1 0 --y1 1");
  CHECK(alias.out == eq2.out);

  RunResult range_err = run("x2 --m 5 --x1 9 --y1 0");
  CHECK(range_err.exit_code == 64);
}

TEST_CASE("reduce command") {
  write_file("/tmp/unavoid_reduce.set", "ab--\nc\n");
  RunResult r = run("reduce /tmp/unavoid_reduce.set --ops hole-truncation");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "ab\n"));
  CHECK(contains(r.out, "c\n"));
  CHECK(contains(r.out, "# hole-truncation"));
  CHECK(!contains(r.out, "ab--\nc"));
}

TEST_CASE("verify command") {
  RunResult ok = run("verify prop3 --m-max 7");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "suite prop3: pass"));

  RunResult unknown_suite = run("verify nonsense");
  CHECK(unknown_suite.exit_code == 64);
}

TEST_CASE("sweep and summarize commands") {
  std::remove("/tmp/unavoid_cli_sweep.tsv");
  RunResult sweep = run("sweep --m-max 10 --out /tmp/unavoid_cli_sweep.tsv --jobs 2");
  CHECK(sweep.exit_code == 0);
  CHECK(contains(sweep.out, "unknown: 0"));

  RunResult sum = run("summarize /tmp/unavoid_cli_sweep.tsv --sample 1.0");
  CHECK(sum.exit_code == 0);
  CHECK(contains(sum.out, "total: "));
  CHECK(contains(sum.out, "unknown: 0"));
  std::remove("/tmp/unavoid_cli_sweep.tsv");
}
