#pragma once

// Checks the three equivalent conditions on every labeled graph of a given
// size, or on random samples:
//   c1  exhaustive wheel/antiwheel search (any hole length),
//   c2  wheel/antiwheel search restricted to at most seven vertices,
//   c3  classify() returns NotFree,
// and that every certificate classify() emits passes the verifier.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "wheelfree/generators.hpp"
#include "wheelfree/graph.hpp"
#include "wheelfree/io.hpp"
#include "wheelfree/oracle.hpp"
#include "wheelfree/recognizer.hpp"
#include "wheelfree/verify.hpp"

namespace wheelfree {

inline constexpr std::size_t max_enumeration_order = 7;

struct TheoremRecord {
  bool condition2 = false;                ///< small wheel or antiwheel found
  bool condition3 = false;                ///< classify said NotFree
  std::optional<bool> condition1;         ///< exhaustive wheel or antiwheel found, when run
  std::string verdict;
  bool certificate_ok = true;
  std::string certificate_reason;

  bool agree() const {
    return certificate_ok && condition2 == condition3 && (!condition1 || *condition1 == condition2);
  }
};

struct Disagreement {
  std::string graph6;
  bool condition2 = false;
  std::string verdict;
  std::optional<bool> condition1;
  std::string note;

  auto key() const { return std::tie(graph6, verdict, note); }
  bool operator<(const Disagreement& o) const { return key() < o.key(); }
  bool operator==(const Disagreement& o) const = default;
};

struct AgreementReport {
  std::uint64_t graphs_checked = 0;
  std::uint64_t condition1_checked = 0;
  std::uint64_t certificate_failures = 0;
  std::map<std::string, std::uint64_t> verdicts;
  std::vector<Disagreement> disagreements;

  bool ok() const { return disagreements.empty(); }

  void merge(const AgreementReport& o) {
    graphs_checked += o.graphs_checked;
    condition1_checked += o.condition1_checked;
    certificate_failures += o.certificate_failures;
    for (const auto& [k, v] : o.verdicts) verdicts[k] += v;
    disagreements.insert(disagreements.end(), o.disagreements.begin(), o.disagreements.end());
  }

  void add(const Graph& g, const TheoremRecord& r) {
    ++graphs_checked;
    if (r.condition1) ++condition1_checked;
    if (!r.certificate_ok) ++certificate_failures;
    ++verdicts[r.verdict];
    if (!r.agree())
      disagreements.push_back({serialize_graph6(g), r.condition2, r.verdict, r.condition1, r.certificate_reason});
  }

  bool operator==(const AgreementReport&) const = default;
};

inline TheoremRecord check_theorem(const Graph& g, bool run_condition1, std::size_t cap = default_exhaustive_cap) {
  if (run_condition1 && g.order() > cap) throw ExhaustiveCapExceeded(g.order(), cap);
  TheoremRecord r;
  r.condition2 = find_small_wheel(g).has_value() || find_small_antiwheel(g).has_value();
  if (run_condition1) r.condition1 = find_wheel_exhaustive(g, WheelSearch::either, cap).has_value();
  try {
    const Classification c = classify(g);
    r.condition3 = !c.is_free();
    r.verdict = std::string(c.verdict()) + (c.is_free() && c.complemented ? "/complement" : "");
    const auto v = verify_classification(g, c);
    r.certificate_ok = v.ok;
    r.certificate_reason = v.reason;
  } catch (const InternalInconsistency& e) {
    r.condition3 = true;
    r.verdict = "Inconsistent";
    r.certificate_ok = false;
    r.certificate_reason = e.what();
  }
  return r;
}

/// Labeled graph on n vertices whose edge set is given by mask, bit k set
/// for the k-th pair in the order (0,1), (0,2), (1,2), (0,3), ...
inline Graph labeled_graph(std::size_t n, std::uint64_t mask) {
  GraphBuilder gb(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1U) gb.add_edge(i, j);
  return std::move(gb).build();
}

inline std::uint64_t labeled_count(std::size_t n) {
  if (n > max_enumeration_order) throw std::invalid_argument("enumerate_labeled: n > 7, use sampling instead");
  return std::uint64_t{1} << (n * (n == 0 ? 0 : n - 1) / 2);
}

/// Calls visit(g) for every labeled graph on n vertices, in edge-bitmask order.
template <class Visit>
void enumerate_labeled(std::size_t n, Visit&& visit) {
  const std::uint64_t total = labeled_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) visit(labeled_graph(n, mask));
}

/// Splits [0, total) into chunks handed to `jobs` workers; each worker fills
/// its own report, merged at the end with disagreements sorted.
template <class Work>
AgreementReport parallel_reports(std::uint64_t total, unsigned jobs, Work&& work) {
  jobs = std::max(1U, jobs);
  const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(4096, total / (jobs * 8ULL) + 1));
  std::atomic<std::uint64_t> next{0};
  std::vector<AgreementReport> parts(jobs);
  auto worker = [&](unsigned id) {
    for (;;) {
      const std::uint64_t begin = next.fetch_add(chunk);
      if (begin >= total) break;
      const std::uint64_t end = std::min(total, begin + chunk);
      for (std::uint64_t i = begin; i < end; ++i) work(i, parts[id]);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
  }
  AgreementReport out;
  for (const auto& p : parts) out.merge(p);
  std::sort(out.disagreements.begin(), out.disagreements.end());
  return out;
}

/// Every labeled graph with 0 <= n <= max_n. Condition 1 runs on all of them.
inline AgreementReport run_exhaustive(std::size_t max_n, unsigned jobs = 1) {
  if (max_n > max_enumeration_order) throw std::invalid_argument("run_exhaustive: max_n > 7");
  AgreementReport out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    out.merge(parallel_reports(labeled_count(n), jobs, [n](std::uint64_t mask, AgreementReport& rep) {
      const Graph g = labeled_graph(n, mask);
      rep.add(g, check_theorem(g, true));
    }));
  }
  std::sort(out.disagreements.begin(), out.disagreements.end());
  return out;
}

/// count samples of G(n, p); sample i uses derive_seed(seed, i). Condition 1
/// runs when n <= cap.
inline AgreementReport run_sampled(std::size_t n, std::uint64_t count, double p, Seed seed, unsigned jobs = 1,
                                   std::size_t cap = default_exhaustive_cap) {
  const bool with_c1 = n <= cap;
  return parallel_reports(count, jobs, [&](std::uint64_t i, AgreementReport& rep) {
    const Graph g = gen_random(n, p, derive_seed(seed, i));
    rep.add(g, check_theorem(g, with_c1, cap));
  });
}

/// Externally supplied graphs (e.g. a canonical graph6 corpus).
inline AgreementReport run_corpus(const std::vector<Graph>& graphs, unsigned jobs = 1,
                                  std::size_t cap = default_exhaustive_cap) {
  return parallel_reports(graphs.size(), jobs, [&](std::uint64_t i, AgreementReport& rep) {
    const Graph& g = graphs[i];
    rep.add(g, check_theorem(g, g.order() <= cap, cap));
  });
}

}  // namespace wheelfree
