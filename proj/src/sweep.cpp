#include "unavoid/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "unavoid/decide.hpp"

namespace unavoid {

std::vector<ConjectureInstance> enumerate_instances(int m_lo, int m_hi) {
  if (m_lo < 3 || m_lo > m_hi) throw std::invalid_argument("enumerate_instances: bad range");
  std::vector<ConjectureInstance> out;
  for (int m = m_lo; m <= m_hi; ++m)
    for (int x1 = 0; x1 <= m - 3; ++x1)
      for (int y1 = 0; y1 <= m - 3; ++y1) {
        ConjectureInstance inst(m, x1, y1);
        if (inst.in_conjecture_region()) out.push_back(inst);
      }
  return out;
}

std::string sweep_line_checksum(const std::string& fields) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : fields) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string header_line(int m_lo, int m_hi) {
  std::ostringstream os;
  os << "# " << kToolVersion << " sweep m=[" << m_lo << "," << m_hi
     << "] registry=" << registry_fingerprint()
     << " fields=m,x1,y1,verdict,period,certificate,families,millis,checksum";
  return os.str();
}

std::string record_fields(const SweepRecord& r) {
  std::ostringstream os;
  os << r.m << '\t' << r.x1 << '\t' << r.y1 << '\t' << (r.avoidable ? "Avoidable" : "Unknown")
     << '\t';
  if (r.avoidable)
    os << r.period << '\t' << r.certificate << '\t';
  else
    os << "-\t-\t";
  if (r.families.empty()) {
    os << '-';
  } else {
    for (std::size_t i = 0; i < r.families.size(); ++i) os << (i ? "," : "") << r.families[i];
  }
  return os.str();
}

std::string record_line(const SweepRecord& r) {
  std::string fields = record_fields(r);
  return fields + '\t' + std::to_string(r.millis) + '\t' + sweep_line_checksum(fields);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

SweepRecord parse_record(const std::string& line, const std::string& context) {
  auto cols = split(line, '\t');
  if (cols.size() != 9) throw std::runtime_error(context + ": malformed record");
  std::string fields = line.substr(0, line.rfind('\t', line.rfind('\t') - 1));
  if (sweep_line_checksum(fields) != cols[8])
    throw std::runtime_error(context + ": checksum mismatch");
  SweepRecord r;
  r.m = std::stoi(cols[0]);
  r.x1 = std::stoi(cols[1]);
  r.y1 = std::stoi(cols[2]);
  r.avoidable = cols[3] == "Avoidable";
  if (!r.avoidable && cols[3] != "Unknown")
    throw std::runtime_error(context + ": bad verdict field");
  r.period = cols[4] == "-" ? 0 : std::stoi(cols[4]);
  r.certificate = cols[5] == "-" ? "" : cols[5];
  if (cols[6] != "-") r.families = split(cols[6], ',');
  r.millis = std::stoll(cols[7]);
  return r;
}

void verify_record(const SweepRecord& r, const std::string& context) {
  ConjectureInstance inst(r.m, r.x1, r.y1);
  if (r.avoidable) {
    if (r.certificate.empty() || r.period <= 0 || r.period >= 2 * r.m)
      throw std::runtime_error(context + ": avoidable record without a period < 2m certificate");
    PeriodicWord w(Alphabet(3), r.certificate);
    if (static_cast<int>(w.period()) != r.period)
      throw std::runtime_error(context + ": period field disagrees with certificate");
    if (!avoids_set(w, inst.set()))
      throw std::runtime_error(context + ": certificate does not avoid the set");
  } else if (!r.families.empty()) {
    throw std::runtime_error(context + ": unknown verdict with matched families");
  }
}

SweepRecord compute_record(const ConjectureInstance& inst) {
  auto t0 = std::chrono::steady_clock::now();
  SweepRecord r{inst.m, inst.x1, inst.y1, false, 0, "", {}, 0};
  MatchReport match = match_families(inst, -1, /*first_only=*/true);
  if (!match.uncovered()) {
    const FamilyMatch& hit = match.matches.front();
    r.avoidable = true;
    r.period = static_cast<int>(hit.word.period());
    r.certificate = hit.word.str();
    r.families.push_back(hit.family);
  } else {
    Verdict v = decide_bounded_period(inst.set(), 2 * inst.m - 1);
    if (v.avoidable()) {
      r.avoidable = true;
      r.period = static_cast<int>(v.certificate->period());
      r.certificate = v.certificate->str();
    }
  }
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                   t0)
                 .count();
  return r;
}

void tally(const SweepRecord& r, SweepReport& report) {
  ++report.total;
  if (r.avoidable) {
    ++report.avoidable;
    if (r.families.empty()) report.uncovered.push_back({r.m, r.x1, r.y1});
  } else {
    ++report.unknown;
    report.unknown_instances.push_back({r.m, r.x1, r.y1});
  }
}

}  // namespace

SweepReport run_sweep(const SweepOptions& opts, std::ostream* progress) {
  if (opts.out_path.empty()) throw std::invalid_argument("run_sweep: output path required");
  auto instances = enumerate_instances(opts.m_lo, opts.m_hi);
  const std::string header = header_line(opts.m_lo, opts.m_hi);

  // A resumed run must replay the verified prefix byte-for-byte.
  std::vector<std::string> kept_lines;
  if (opts.resume) {
    std::ifstream in(opts.out_path, std::ios::binary);
    if (in) {
      std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      std::vector<std::string> lines;
      std::size_t start = 0;
      while (true) {
        std::size_t pos = contents.find('\n', start);
        if (pos == std::string::npos) break;  // a trailing partial line is dropped
        lines.push_back(contents.substr(start, pos - start));
        start = pos + 1;
      }
      if (!lines.empty()) {
        if (lines.front() != header)
          throw std::runtime_error("resume: header mismatch (tool, range, or registry changed)");
        for (std::size_t i = 1; i < lines.size(); ++i) {
          std::string context = opts.out_path + ":" + std::to_string(i + 1);
          SweepRecord r = parse_record(lines[i], context);
          std::size_t idx = i - 1;
          if (idx >= instances.size() || instances[idx].m != r.m || instances[idx].x1 != r.x1 ||
              instances[idx].y1 != r.y1)
            throw std::runtime_error(context + ": record out of enumeration order");
          verify_record(r, context);
          kept_lines.push_back(lines[i]);
        }
      }
    }
  }

  std::ofstream out(opts.out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + opts.out_path);
  out << header << '\n';

  SweepReport report;
  report.m_lo = opts.m_lo;
  report.m_hi = opts.m_hi;
  for (const auto& line : kept_lines) {
    out << line << '\n';
    tally(parse_record(line, "kept"), report);
  }

  const std::size_t done = kept_lines.size();
  const std::size_t n = instances.size();
  std::vector<std::optional<SweepRecord>> results(n);
  std::atomic<std::size_t> next{done};
  std::mutex mu;
  std::condition_variable cv;

  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      SweepRecord r = compute_record(instances[i]);
      {
        std::lock_guard<std::mutex> lock(mu);
        results[i] = std::move(r);
      }
      cv.notify_all();
    }
  };

  int jobs = std::max(1, opts.jobs);
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);

  for (std::size_t w = done; w < n; ++w) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return results[w].has_value(); });
    SweepRecord r = std::move(*results[w]);
    results[w].reset();
    lock.unlock();
    out << record_line(r) << '\n';
    tally(r, report);
    if (progress && (w + 1) % 2000 == 0)
      *progress << "  " << (w + 1) << "/" << n << " instances\n" << std::flush;
  }
  for (auto& t : pool) t.join();
  out.flush();
  if (!out) throw std::runtime_error("write failure on " + opts.out_path);
  return report;
}

SweepReport summarize(const std::string& records_path, double sample_fraction) {
  std::ifstream in(records_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open records file: " + records_path);
  std::string line;
  if (!std::getline(in, line)) {
    SweepReport empty;
    return empty;
  }
  if (line.rfind("# ", 0) != 0) throw std::runtime_error(records_path + ": missing header");
  int m_lo = 0, m_hi = 0;
  if (std::sscanf(line.c_str(), "# unavoid %*s sweep m=[%d,%d]", &m_lo, &m_hi) != 2)
    throw std::runtime_error(records_path + ": unparseable header");

  SweepReport report;
  report.m_lo = m_lo;
  report.m_hi = m_hi;
  std::vector<SweepRecord> avoidable_records;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    SweepRecord r = parse_record(line, records_path + ":" + std::to_string(lineno));
    tally(r, report);
    if (r.avoidable) avoidable_records.push_back(std::move(r));
  }

  // Deterministic certificate sample.
  std::size_t want = avoidable_records.empty()
                         ? 0
                         : std::max<std::size_t>(
                               1, static_cast<std::size_t>(static_cast<double>(
                                      avoidable_records.size()) * sample_fraction));
  std::vector<std::size_t> idx(avoidable_records.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::mt19937 rng(0xC0FFEEu);
  std::shuffle(idx.begin(), idx.end(), rng);
  for (std::size_t i = 0; i < want && i < idx.size(); ++i) {
    const SweepRecord& r = avoidable_records[idx[i]];
    verify_record(r, records_path + " record m=" + std::to_string(r.m) + " x1=" +
                         std::to_string(r.x1) + " y1=" + std::to_string(r.y1));
  }
  return report;
}

}  // namespace unavoid
