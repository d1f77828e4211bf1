#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "unavoid/sweep.hpp"

using namespace unavoid;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

// Blank the millis column (timings vary run to run; everything else is
// deterministic).
std::string canon(const std::string& contents) {
  std::istringstream in(contents);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') {
      std::size_t last = line.rfind('\t');
      std::size_t prev = line.rfind('\t', last - 1);
      line = line.substr(0, prev) + "\t*" + line.substr(last);
    }
    out << line << '\n';
  }
  return out.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/" + name) { std::remove(path.c_str()); }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("enumeration counts") {
  auto only4 = enumerate_instances(4, 4);
  REQUIRE(only4.size() == 1);
  CHECK(only4[0].x1 == 1);
  CHECK(only4[0].y1 == 0);

  auto m7 = enumerate_instances(7, 7);
  CHECK(m7.size() == 6);
  for (const auto& inst : m7) {
    CHECK(inst.x1 >= 2);
    CHECK(inst.x1 <= 4);
    CHECK(inst.in_conjecture_region());
  }

  // Ordered by (m, x1, y1).
  auto range = enumerate_instances(3, 12);
  for (std::size_t i = 1; i < range.size(); ++i) {
    auto a = std::array{range[i - 1].m, range[i - 1].x1, range[i - 1].y1};
    auto b = std::array{range[i].m, range[i].x1, range[i].y1};
    CHECK(a < b);
  }

  CHECK(enumerate_instances(3, 100).size() == 41650);
  CHECK_THROWS_AS(enumerate_instances(2, 5), std::invalid_argument);
}

TEST_CASE("sweep runs, resumes, and summarizes") {
  TempFile file("unavoid_test_sweep.tsv");
  SweepOptions opts;
  opts.m_lo = 3;
  opts.m_hi = 14;
  opts.out_path = file.path;
  opts.jobs = 2;

  SweepReport report = run_sweep(opts);
  CHECK(report.total == static_cast<long long>(enumerate_instances(3, 14).size()));
  CHECK(report.unknown == 0);
  CHECK(report.avoidable == report.total);
  std::string first = read_file(file.path);

  // Single-job rerun produces the same records.
  TempFile file1("unavoid_test_sweep_j1.tsv");
  opts.out_path = file1.path;
  opts.jobs = 1;
  run_sweep(opts);
  CHECK(canon(read_file(file1.path)) == canon(first));

  // Truncate to simulate a killed run (partial trailing line) and resume.
  std::string cut = first.substr(0, first.size() * 3 / 5);
  {
    std::ofstream out(file.path, std::ios::binary | std::ios::trunc);
    out << cut;
  }
  opts.out_path = file.path;
  opts.resume = true;
  opts.jobs = 2;
  SweepReport resumed = run_sweep(opts);
  CHECK(resumed.total == report.total);
  CHECK(canon(read_file(file.path)) == canon(first));

  SweepReport sum = summarize(file.path, 0.05);
  CHECK(sum.total == report.total);
  CHECK(sum.unknown == 0);
  CHECK(sum.uncovered.size() == report.uncovered.size());
}

TEST_CASE("summarize flags tampering") {
  TempFile file("unavoid_test_tamper.tsv");
  SweepOptions opts;
  opts.m_lo = 3;
  opts.m_hi = 8;
  opts.out_path = file.path;
  run_sweep(opts);

  std::string contents = read_file(file.path);
  // Flip one certificate letter inside a record line.
  std::size_t line_start = contents.find('\n') + 1;
  std::size_t tab = 0;
  for (int i = 0; i < 5; ++i) tab = contents.find('\t', tab + 1);
  std::size_t cert_pos = contents.find('\t', line_start);
  for (int i = 0; i < 4; ++i) cert_pos = contents.find('\t', cert_pos + 1);
  ++cert_pos;
  contents[cert_pos] = contents[cert_pos] == 'a' ? 'b' : 'a';
  {
    std::ofstream out(file.path, std::ios::binary | std::ios::trunc);
    out << contents;
  }
  CHECK_THROWS_WITH_AS(summarize(file.path, 1.0), doctest::Contains("checksum"),
                       std::runtime_error);

  // A resume over the corrupted file refuses too.
  opts.resume = true;
  CHECK_THROWS_AS(run_sweep(opts), std::runtime_error);
}

TEST_CASE("summarize empty and missing") {
  TempFile file("unavoid_test_empty.tsv");
  {
    std::ofstream out(file.path);
  }
  SweepReport r = summarize(file.path);
  CHECK(r.total == 0);
  CHECK_THROWS_AS(summarize("/tmp/definitely_not_here.tsv"), std::runtime_error);
}

TEST_CASE("checksum is stable") {
  CHECK(sweep_line_checksum("x") == sweep_line_checksum("x"));
  CHECK(sweep_line_checksum("x") != sweep_line_checksum("y"));
}
