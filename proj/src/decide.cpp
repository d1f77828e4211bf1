#include "unavoid/decide.hpp"

#include <algorithm>
#include <cstdint>

namespace unavoid {

const char* method_name(Method m) {
  switch (m) {
    case Method::WindowGraph: return "window-graph";
    case Method::PeriodSearch: return "period-search";
    case Method::Pattern: return "pattern";
    case Method::TheoremRef: return "theorem";
  }
  return "?";
}

Verdict Verdict::make_avoidable(PeriodicWord cert, Method how, const UniformSet& against) {
  if (!avoids_set(cert, against))
    throw std::logic_error("avoidable verdict with a certificate that does not avoid the set");
  Verdict v{Kind::Avoidable, std::move(cert), how, {}, 0};
  return v;
}

Verdict Verdict::window_unavoidable() {
  return Verdict{Kind::Unavoidable, std::nullopt, Method::WindowGraph, {}, 0};
}

Verdict Verdict::theorem_unavoidable(std::string name) {
  return Verdict{Kind::Unavoidable, std::nullopt, Method::TheoremRef, std::move(name), 0};
}

Verdict Verdict::make_unknown(long long bound_tried) {
  return Verdict{Kind::Unknown, std::nullopt, Method::PeriodSearch, {}, bound_tried};
}

std::string Verdict::str() const {
  switch (kind) {
    case Kind::Avoidable:
      return "Avoidable period " + std::to_string(certificate->period()) + ": " + certificate->str();
    case Kind::Unavoidable:
      return std::string("Unavoidable (") +
             (method == Method::TheoremRef ? theorem : method_name(method)) + ")";
    case Kind::Unknown:
      return "Unknown (period bound " + std::to_string(period_bound_tried) + " exhausted)";
  }
  return "?";
}

namespace {

std::optional<long long> checked_pow(long long base, long long exp, long long cap) {
  long long r = 1;
  for (long long i = 0; i < exp; ++i) {
    if (r > cap / base) return std::nullopt;
    r *= base;
  }
  return r;
}

}  // namespace

bool window_fits(const UniformSet& X, const WindowGraphConfig& cfg) {
  if (X.trivial()) return true;
  long long L = static_cast<long long>(X.max_length());
  auto n = checked_pow(X.alphabet().size(), L - 1, cfg.max_nodes);
  return n.has_value();
}

Verdict decide_exact(const UniformSet& X, const WindowGraphConfig& cfg) {
  if (X.trivial()) return Verdict::theorem_unavoidable("trivial");
  const long long k = X.alphabet().size();
  const long long L = static_cast<long long>(X.max_length());
  auto nodes = checked_pow(k, L - 1, cfg.max_nodes);
  if (!nodes)
    throw WindowCapExceeded("window graph needs more than " + std::to_string(cfg.max_nodes) +
                            " nodes");
  const long long n = *nodes;

  // Each word is probed against the low |x| digits of the base-k window
  // value u*k + c (newest letter in the lowest digit).
  struct Probe {
    long long divisor;
    int letter;
  };
  std::vector<std::vector<Probe>> probes;
  probes.reserve(X.size());
  for (const auto& x : X.words()) {
    std::vector<Probe> ps;
    long long div = 1;
    for (std::size_t r = 0; r < x.size(); ++r) {
      std::size_t j = x.size() - 1 - r;  // digit r holds position j of the suffix
      if (x.defined(j)) ps.push_back({div, x.at(j)});
      div *= k;
    }
    probes.push_back(std::move(ps));
  }
  auto edge_allowed = [&](long long window) {
    for (const auto& ps : probes) {
      bool compat = true;
      for (const auto& pr : ps) {
        if ((window / pr.divisor) % k != pr.letter) {
          compat = false;
          break;
        }
      }
      if (compat) return false;
    }
    return true;
  };

  // Tri-color DFS; the first edge into a gray node closes a cycle whose
  // edge labels spell the certificate.
  std::vector<std::uint8_t> color(static_cast<std::size_t>(n), 0);
  std::vector<long long> st_node;
  std::vector<std::int8_t> st_next, st_entry;
  for (long long start = 0; start < n; ++start) {
    if (color[static_cast<std::size_t>(start)] != 0) continue;
    st_node.assign(1, start);
    st_next.assign(1, 0);
    st_entry.assign(1, -1);
    color[static_cast<std::size_t>(start)] = 1;
    while (!st_node.empty()) {
      long long u = st_node.back();
      if (st_next.back() < k) {
        int c = st_next.back()++;
        long long window = u * k + c;
        if (!edge_allowed(window)) continue;
        long long v = window % n;
        std::uint8_t& cv = color[static_cast<std::size_t>(v)];
        if (cv == 1) {
          std::size_t pos = st_node.size() - 1;
          while (st_node[pos] != v) --pos;
          std::vector<std::int8_t> base;
          for (std::size_t i = pos + 1; i < st_node.size(); ++i) base.push_back(st_entry[i]);
          base.push_back(static_cast<std::int8_t>(c));
          return Verdict::make_avoidable(PeriodicWord(X.alphabet(), std::move(base)),
                                         Method::WindowGraph, X);
        }
        if (cv == 0) {
          cv = 1;
          st_node.push_back(v);
          st_next.push_back(0);
          st_entry.push_back(static_cast<std::int8_t>(c));
        }
      } else {
        color[static_cast<std::size_t>(u)] = 2;
        st_node.pop_back();
        st_next.pop_back();
        st_entry.pop_back();
      }
    }
  }
  return Verdict::window_unavoidable();
}

namespace {

// One forbidden simultaneous assignment: entries sorted by variable.
struct Forbidden {
  std::vector<std::pair<int, std::int8_t>> entries;
  bool operator==(const Forbidden&) const = default;
  bool operator<(const Forbidden& o) const { return entries < o.entries; }
};

// Compile the offset constraints for period p; false when some word rules
// out every assignment of this period (empty forbidden tuple).
bool compile_constraints(const UniformSet& X, int p, std::vector<Forbidden>& out) {
  out.clear();
  std::vector<std::pair<std::size_t, int>> defined;
  for (const auto& x : X.words()) {
    defined.clear();
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x.defined(j)) defined.emplace_back(j, x.at(j));
    if (defined.empty()) return false;
    for (int i = 0; i < p; ++i) {
      Forbidden f;
      bool conflict = false;
      for (auto [j, letter] : defined) {
        int var = static_cast<int>((static_cast<std::size_t>(i) + j) % static_cast<std::size_t>(p));
        auto it = std::find_if(f.entries.begin(), f.entries.end(),
                               [var](const auto& e) { return e.first == var; });
        if (it == f.entries.end()) {
          f.entries.emplace_back(var, static_cast<std::int8_t>(letter));
        } else if (it->second != letter) {
          conflict = true;  // two defined positions fold to one variable
          break;
        }
      }
      if (conflict) continue;
      std::sort(f.entries.begin(), f.entries.end());
      out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return true;
}

class PeriodSearch {
 public:
  PeriodSearch(const UniformSet& X, int p, int k)
      : p_(p), k_(k), full_(static_cast<std::uint32_t>((1u << k) - 1)) {
    feasible_ = compile_constraints(X, p, cons_);
    if (!feasible_) return;
    domain_.assign(static_cast<std::size_t>(p), full_);
    assigned_.assign(static_cast<std::size_t>(p), -1);
    matched_.assign(cons_.size(), 0);
    dead_.assign(cons_.size(), 0);
    watchers_.assign(static_cast<std::size_t>(p), {});
    for (std::size_t ci = 0; ci < cons_.size(); ++ci)
      for (std::size_t e = 0; e < cons_[ci].entries.size(); ++e)
        watchers_[static_cast<std::size_t>(cons_[ci].entries[e].first)].emplace_back(ci, e);
    // Unit tuples prune domains before any assignment.
    for (const auto& c : cons_) {
      if (c.entries.size() == 1) {
        auto [var, letter] = c.entries.front();
        domain_[static_cast<std::size_t>(var)] &= ~(1u << letter);
        if (domain_[static_cast<std::size_t>(var)] == 0) {
          feasible_ = false;
          return;
        }
      }
    }
  }

  std::optional<std::vector<std::int8_t>> solve() {
    if (!feasible_) return std::nullopt;
    if (!assign_from(0)) return std::nullopt;
    return assigned_;
  }

 private:
  enum class Op : std::uint8_t { DomainBit, Matched, Dead };
  struct Trail {
    Op op;
    int a;
    int b;
  };

  bool assign_from(int v) {
    if (v == p_) return true;
    std::uint32_t dom = domain_[static_cast<std::size_t>(v)];
    for (int c = 0; c < k_; ++c) {
      if (!(dom & (1u << c))) continue;
      std::size_t mark = trail_.size();
      if (set_letter(v, c) && assign_from(v + 1)) return true;
      assigned_[static_cast<std::size_t>(v)] = -1;
      undo_to(mark);
    }
    return false;
  }

  bool set_letter(int v, int c) {
    assigned_[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(c);
    for (auto [ci, pos] : watchers_[static_cast<std::size_t>(v)]) {
      const auto& con = cons_[ci];
      if (con.entries[pos].second == c) {
        ++matched_[ci];
        trail_.push_back({Op::Matched, static_cast<int>(ci), 0});
        if (dead_[ci] == 0) {
          std::size_t sz = con.entries.size();
          if (matched_[ci] == static_cast<int>(sz)) return false;
          if (matched_[ci] == static_cast<int>(sz) - 1) {
            for (const auto& [var, letter] : con.entries) {
              if (assigned_[static_cast<std::size_t>(var)] < 0) {
                std::uint32_t bit = 1u << letter;
                if (domain_[static_cast<std::size_t>(var)] & bit) {
                  domain_[static_cast<std::size_t>(var)] &= ~bit;
                  trail_.push_back({Op::DomainBit, var, letter});
                  if (domain_[static_cast<std::size_t>(var)] == 0) return false;
                }
                break;
              }
            }
          }
        }
      } else {
        ++dead_[ci];
        trail_.push_back({Op::Dead, static_cast<int>(ci), 0});
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const Trail& t = trail_.back();
      switch (t.op) {
        case Op::DomainBit: domain_[static_cast<std::size_t>(t.a)] |= 1u << t.b; break;
        case Op::Matched: --matched_[static_cast<std::size_t>(t.a)]; break;
        case Op::Dead: --dead_[static_cast<std::size_t>(t.a)]; break;
      }
      trail_.pop_back();
    }
  }

  int p_;
  int k_;
  std::uint32_t full_;
  bool feasible_ = true;
  std::vector<Forbidden> cons_;
  std::vector<std::uint32_t> domain_;
  std::vector<std::int8_t> assigned_;
  std::vector<int> matched_, dead_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> watchers_;
  std::vector<Trail> trail_;
};

}  // namespace

Verdict decide_bounded_period(const UniformSet& X, long long p_max) {
  if (p_max < 1) throw std::invalid_argument("decide_bounded_period: p_max must be positive");
  const int k = X.alphabet().size();
  for (long long p = 1; p <= p_max; ++p) {
    PeriodSearch search(X, static_cast<int>(p), k);
    if (auto sol = search.solve())
      return Verdict::make_avoidable(PeriodicWord(X.alphabet(), std::move(*sol)),
                                     Method::PeriodSearch, X);
  }
  return Verdict::make_unknown(p_max);
}

Verdict decide(const UniformSet& X, long long p_max, const WindowGraphConfig& cfg) {
  if (X.trivial()) return Verdict::theorem_unavoidable("trivial");
  if (window_fits(X, cfg)) return decide_exact(X, cfg);
  return decide_bounded_period(X, p_max);
}

}  // namespace unavoid
