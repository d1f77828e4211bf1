// unavoid -- decide avoidability of sets of partial words, build the studied
// set families, verify the closed-form conditions, and run parameter sweeps.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "unavoid/decide.hpp"
#include "unavoid/patterns.hpp"
#include "unavoid/reduce.hpp"
#include "unavoid/sweep.hpp"
#include "unavoid/theory.hpp"
#include "unavoid/verify.hpp"

namespace {

constexpr int kExitAvoidable = 0;
constexpr int kExitUnavoidable = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

unavoid::UniformSet read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open set file: " + path);
  try {
    return unavoid::UniformSet::read(in);
  } catch (const unavoid::ParseError& e) {
    throw std::runtime_error(path + ":" + std::to_string(e.line) + ": " + e.what());
  }
}

long long node_cap_default() {
  if (const char* env = std::getenv("UNAVOID_MAX_NODES")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 1LL << 24;
}

int verdict_exit(const unavoid::Verdict& v) {
  switch (v.kind) {
    case unavoid::Verdict::Kind::Avoidable: return kExitAvoidable;
    case unavoid::Verdict::Kind::Unavoidable: return kExitUnavoidable;
    case unavoid::Verdict::Kind::Unknown: return kExitUnknown;
  }
  return kExitUsage;
}

int cmd_decide(const std::string& path, long long period_max, bool exact, long long max_nodes) {
  unavoid::UniformSet set = read_set_file(path);
  unavoid::WindowGraphConfig cfg{max_nodes};
  long long p_max = period_max > 0 ? period_max : 2 * static_cast<long long>(set.max_length()) - 1;
  unavoid::Verdict v = exact ? unavoid::decide_exact(set, cfg) : unavoid::decide(set, p_max, cfg);
  std::cout << v.str() << "\n";
  if (v.avoidable()) std::cout << "method: " << unavoid::method_name(v.method) << "\n";
  return verdict_exit(v);
}

void print_matches(const unavoid::MatchReport& report) {
  if (report.uncovered()) {
    std::cout << "families: none\n";
    return;
  }
  std::cout << "families:";
  for (const auto& m : report.matches) std::cout << " " << m.params_str();
  std::cout << "\n";
}

int cmd_x2(int m, int x1, int y1, bool eq2) {
  if (eq2) {
    unavoid::Eq2Instance inst(m, x1, y1);
    inst.set().write(std::cout);
    print_matches(unavoid::match_families(inst));
  } else {
    unavoid::ConjectureInstance inst(m, x1, y1);
    inst.set().write(std::cout);
    std::cout << "in_conjecture_region: " << (inst.in_conjecture_region() ? "true" : "false")
              << "\n";
    print_matches(unavoid::match_families(inst));
  }
  return 0;
}

int cmd_holes(int k, int m) {
  unavoid::HoleBound hb = unavoid::holes_bound(k, m);
  std::cout << "H = " << hb.h;
  if (hb.conditional_on_conjecture) std::cout << " (conditional on Conjecture 1)";
  std::cout << ", max_fill = " << hb.fill << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, int m_max) {
  unavoid::verify::SuiteResult r = unavoid::verify::run_suite(suite, m_max);
  std::cout << "suite " << r.suite << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.cases
            << " cases)\n";
  if (!r.pass) std::cout << "counterexample: " << r.failure << "\n";
  return r.pass ? 0 : 1;
}

int cmd_sweep(int m_min, int m_max, const std::string& out, bool resume, int jobs) {
  unavoid::SweepOptions opts;
  opts.m_lo = m_min;
  opts.m_hi = m_max;
  opts.out_path = out;
  opts.resume = resume;
  opts.jobs = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  unavoid::SweepReport report = unavoid::run_sweep(opts, &std::cerr);
  std::cout << "total: " << report.total << "\n"
            << "avoidable: " << report.avoidable << "\n"
            << "unknown: " << report.unknown << "\n"
            << "uncovered: " << report.uncovered.size() << "\n";
  for (const auto& [m, x1, y1] : report.uncovered)
    std::cout << "uncovered instance: m=" << m << " x1=" << x1 << " y1=" << y1 << "\n";
  if (report.unknown > 0) {
    std::cerr << "WARNING: " << report.unknown
              << " instance(s) had no avoiding word with period < 2m\n";
    for (const auto& [m, x1, y1] : report.unknown_instances)
      std::cerr << "  unknown: m=" << m << " x1=" << x1 << " y1=" << y1 << "\n";
  }
  return 0;
}

int cmd_summarize(const std::string& path, double sample) {
  unavoid::SweepReport report = unavoid::summarize(path, sample);
  std::cout << "total: " << report.total << "\n"
            << "avoidable: " << report.avoidable << "\n"
            << "unknown: " << report.unknown << "\n"
            << "uncovered: " << report.uncovered.size() << "\n";
  for (const auto& [m, x1, y1] : report.uncovered)
    std::cout << "uncovered instance: m=" << m << " x1=" << x1 << " y1=" << y1 << "\n";
  return 0;
}

int cmd_reduce(const std::string& path, const std::vector<std::string>& ops) {
  unavoid::UniformSet set = read_set_file(path);
  unavoid::ReductionTrace trace;
  for (const std::string& op : ops) {
    if (op == "factoring") {
      set = unavoid::factoring(set, &trace);
    } else if (op == "hole-truncation") {
      set = unavoid::hole_truncation(set, &trace);
    } else if (op.rfind("prefix-suffix=", 0) == 0) {
      set = unavoid::prefix_suffix(set, unavoid::PartialWord::parse(op.substr(14)), true, &trace);
    } else if (op.rfind("expand=", 0) == 0) {
      std::string spec = op.substr(7);
      std::size_t at = spec.find('@');
      if (at == std::string::npos)
        throw std::runtime_error("expand needs the form expand=<word>@<pos,pos,...>");
      unavoid::PartialWord word = unavoid::PartialWord::parse(spec.substr(0, at));
      std::vector<std::size_t> positions;
      std::string rest = spec.substr(at + 1);
      std::size_t start = 0;
      while (start < rest.size()) {
        std::size_t comma = rest.find(',', start);
        if (comma == std::string::npos) comma = rest.size();
        positions.push_back(static_cast<std::size_t>(std::stoul(rest.substr(start, comma - start))));
        start = comma + 1;
      }
      set = unavoid::expand(set, word, positions, &trace);
    } else {
      throw std::runtime_error("unknown reduction op: " + op);
    }
  }
  set.write(std::cout);
  for (const auto& step : trace.steps) {
    std::cout << "# " << step.op << ":";
    for (const auto& w : step.removed) std::cout << " -" << w.str();
    for (const auto& w : step.added) std::cout << " +" << w.str();
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unavoidable-set toolkit for partial words"};
  app.require_subcommand(1);

  std::string setfile;
  long long period_max = 0;
  bool exact = false;
  long long max_nodes = node_cap_default();
  auto* decide = app.add_subcommand("decide", "decide avoidability of a set file");
  decide->add_option("setfile", setfile)->required();
  decide->add_option("--period-max", period_max, "bounded-search period cap (default 2m-1)");
  decide->add_flag("--exact", exact, "force the window-graph decider");
  decide->add_option("--max-nodes", max_nodes, "window graph node cap");

  int m = 0, x1 = 0, y1 = 0;
  bool eq2 = false;
  auto* x2 = app.add_subcommand("x2", "print a two-fill instance and its matched families");
  x2->add_option("--m", m)->required();
  x2->add_option("--x1", x1)->required();
  x2->add_option("--y1", y1)->required();
  x2->add_flag("--eq2", eq2, "use the all-a / b-c-pair form");
  auto* x2eq2 = app.add_subcommand("x2eq2", "shorthand for x2 --eq2");
  int m2 = 0, x12 = 0, y12 = 0;
  x2eq2->add_option("--m", m2)->required();
  x2eq2->add_option("--x1", x12)->required();
  x2eq2->add_option("--y1", y12)->required();

  int hk = 0, hm = 0;
  auto* holes = app.add_subcommand("holes", "max fillable holes and the H bound");
  holes->add_option("--k", hk)->required();
  holes->add_option("--m", hm)->required();

  std::string suite;
  int m_max = 0;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "one of: " + [] {
    std::string all;
    for (const auto& id : unavoid::verify::suite_ids()) all += (all.empty() ? "" : ", ") + id;
    return all;
  }())->required();
  verify->add_option("--m-max", m_max, "override the suite's default bound");

  int s_min = 3, s_max = 0, jobs = 0;
  std::string out;
  bool resume = false;
  auto* sweep = app.add_subcommand("sweep", "decide every conjecture-region instance");
  sweep->add_option("--m-max", s_max)->required();
  sweep->add_option("--m-min", s_min);
  sweep->add_option("--out", out)->required();
  sweep->add_flag("--resume", resume, "keep verified records from an interrupted run");
  sweep->add_option("--jobs", jobs, "worker threads (default: hardware)");

  std::string sum_path;
  double sample = 0.01;
  auto* summarize = app.add_subcommand("summarize", "recount and spot-check a records file");
  summarize->add_option("records", sum_path)->required();
  summarize->add_option("--sample", sample, "fraction of certificates to re-verify");

  std::string red_path;
  std::vector<std::string> ops;
  auto* reduce = app.add_subcommand("reduce", "apply reduction operations to a set file");
  reduce->add_option("setfile", red_path)->required();
  reduce->add_option("--ops", ops, "factoring | hole-truncation | prefix-suffix=<word> | expand=<word>@<positions>")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (decide->parsed()) return cmd_decide(setfile, period_max, exact, max_nodes);
    if (x2->parsed()) return cmd_x2(m, x1, y1, eq2);
    if (x2eq2->parsed()) return cmd_x2(m2, x12, y12, true);
    if (holes->parsed()) return cmd_holes(hk, hm);
    if (verify->parsed()) return cmd_verify(suite, m_max);
    if (sweep->parsed()) return cmd_sweep(s_min, s_max, out, resume, jobs);
    if (summarize->parsed()) return cmd_summarize(sum_path, sample);
    if (reduce->parsed()) return cmd_reduce(red_path, ops);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
