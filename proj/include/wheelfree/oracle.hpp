#pragma once

// Brute-force ground truth: hole enumeration, wheel/antiwheel search
// (bounded to holes of length <= 6, or unbounded under a size cap) and
// induced-subgraph detection for a fixed catalog of small patterns.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wheelfree/graph.hpp"

namespace wheelfree {

/// Chordless cycle on at least four vertices, listed in cyclic order.
struct Hole {
  std::vector<Vertex> cycle;
  bool operator==(const Hole&) const = default;
};

/// A hole plus a hub with at least three neighbors on it, living in g
/// (in_complement = false) or in the complement of g.
struct WheelWitness {
  Hole hole;
  Vertex hub = 0;
  bool in_complement = false;
  bool operator==(const WheelWitness&) const = default;
};

inline constexpr std::size_t default_exhaustive_cap = 16;

/// Longest hole a wheel on at most seven vertices can have.
inline constexpr std::size_t small_hole_max = 6;

class ExhaustiveCapExceeded : public std::runtime_error {
 public:
  ExhaustiveCapExceeded(std::size_t n, std::size_t cap)
      : std::runtime_error("exhaustive wheel search refused: n=" + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap)) {}
};

namespace detail {

// DFS over induced paths v0, v1, ..., vk with v0 the minimum vertex of the
// eventual hole. blocked holds every vertex adjacent to an interior path
// vertex (v1..v_{k-1}); such vertices would create a chord. A hole is
// emitted when the new vertex closes back to v0 and exceeds v1, which picks
// one of the two traversal directions.
template <class Visit>
class HoleSearch {
 public:
  HoleSearch(const Graph& g, std::size_t min_len, std::size_t max_len, Visit& visit)
      : g_(g), min_len_(min_len), max_len_(max_len), visit_(visit), words_(g.words()),
        blocked_((max_len + 1) * g.words(), 0), in_path_(g.order()) {}

  void run() {
    for (Vertex v0 = 0; v0 < g_.order() && !stop_; ++v0) {
      path_.assign(1, v0);
      in_path_.set(v0);
      std::fill(blocked_.begin(), blocked_.begin() + static_cast<std::ptrdiff_t>(words_), 0);
      extend(0);
      in_path_.reset(v0);
    }
  }

 private:
  void extend(std::size_t depth) {
    const Vertex v0 = path_.front();
    const Vertex last = path_.back();
    const std::uint64_t* blocked = blocked_.data() + depth * words_;
    auto row = g_.row(last);
    auto used = in_path_.words();
    const std::size_t len = path_.size();
    for (std::size_t i = 0; i < words_ && !stop_; ++i) {
      std::uint64_t cand = row[i] & ~blocked[i] & ~used[i];
      while (cand && !stop_) {
        const auto w = static_cast<Vertex>(i * word_bits + static_cast<std::size_t>(std::countr_zero(cand)));
        cand &= cand - 1;
        if (w < v0) continue;
        if (len >= 2 && g_.adjacent(w, v0)) {
          // closes a cycle of length len + 1 (a triangle when len == 2)
          if (len >= 3 && len + 1 >= min_len_ && w > path_[1]) {
            path_.push_back(w);
            if (!visit_(std::as_const(path_))) stop_ = true;
            path_.pop_back();
          }
          continue;
        }
        if (len + 1 >= max_len_) continue;
        std::uint64_t* next = blocked_.data() + (depth + 1) * words_;
        if (len == 1) {
          std::copy(blocked, blocked + words_, next);
        } else {
          auto lr = g_.row(last);
          for (std::size_t k = 0; k < words_; ++k) next[k] = blocked[k] | lr[k];
        }
        path_.push_back(w);
        in_path_.set(w);
        extend(depth + 1);
        in_path_.reset(w);
        path_.pop_back();
      }
    }
  }

  const Graph& g_;
  std::size_t min_len_;
  std::size_t max_len_;
  Visit& visit_;
  std::size_t words_;
  std::vector<std::uint64_t> blocked_;
  VertexMask in_path_;
  std::vector<Vertex> path_;
  bool stop_ = false;
};

}  // namespace detail

/// Calls visit(cycle) for every hole with min_len <= length <= max_len, once
/// per hole, in lexicographic order of the canonical form (rotation starting
/// at the least vertex, direction with the smaller second vertex). visit
/// returns false to stop early.
template <class Visit>
void for_each_hole(const Graph& g, std::size_t min_len, std::size_t max_len, Visit&& visit) {
  if (min_len < 4 || min_len > max_len) throw std::invalid_argument("for_each_hole: need 4 <= min_len <= max_len");
  max_len = std::min(max_len, g.order());
  if (min_len > max_len) return;
  detail::HoleSearch<std::remove_reference_t<Visit>> search(g, min_len, max_len, visit);
  search.run();
}

inline std::vector<Hole> find_holes(const Graph& g, std::size_t min_len, std::size_t max_len) {
  std::vector<Hole> out;
  for_each_hole(g, min_len, max_len, [&](const std::vector<Vertex>& c) {
    out.push_back(Hole{c});
    return true;
  });
  return out;
}

namespace detail {

inline std::optional<WheelWitness> first_wheel(const Graph& g, std::size_t max_len) {
  std::optional<WheelWitness> found;
  if (g.order() < 5) return found;
  VertexMask on_hole(g.order());
  for_each_hole(g, 4, max_len, [&](const std::vector<Vertex>& cycle) {
    for (Vertex v : cycle) on_hole.set(v);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!on_hole.test(v) && g.degree_in(v, on_hole) >= 3) {
        found = WheelWitness{Hole{cycle}, v, false};
        break;
      }
    }
    for (Vertex v : cycle) on_hole.reset(v);
    return !found.has_value();
  });
  return found;
}

}  // namespace detail

/// First wheel (in hole order, least hub) whose hole has length 4, 5 or 6;
/// such a wheel spans at most seven vertices.
inline std::optional<WheelWitness> find_small_wheel(const Graph& g) {
  return detail::first_wheel(g, small_hole_max);
}

inline std::optional<WheelWitness> find_small_antiwheel(const Graph& g) {
  auto w = find_small_wheel(complement(g));
  if (w) w->in_complement = true;
  return w;
}

enum class WheelSearch { wheel, antiwheel, either };

/// Wheel search over holes of every length. Exponential; refuses graphs
/// with more than cap vertices.
inline std::optional<WheelWitness> find_wheel_exhaustive(const Graph& g, WheelSearch which = WheelSearch::wheel,
                                                         std::size_t cap = default_exhaustive_cap) {
  if (g.order() > cap) throw ExhaustiveCapExceeded(g.order(), cap);
  if (which != WheelSearch::antiwheel) {
    if (auto w = detail::first_wheel(g, g.order())) return w;
  }
  if (which != WheelSearch::wheel) {
    if (auto w = detail::first_wheel(complement(g), g.order())) {
      w->in_complement = true;
      return w;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Fixed pattern catalog

enum class Pattern { F1, F2, coF1, coF2, two_K2, C4, C5, P5, C6, coC6 };

inline constexpr std::array all_patterns = {Pattern::F1, Pattern::F2, Pattern::coF1, Pattern::coF2, Pattern::two_K2,
                                            Pattern::C4, Pattern::C5, Pattern::P5,   Pattern::C6,   Pattern::coC6};

inline std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::F1: return "F1";
    case Pattern::F2: return "F2";
    case Pattern::coF1: return "co-F1";
    case Pattern::coF2: return "co-F2";
    case Pattern::two_K2: return "2K2";
    case Pattern::C4: return "C4";
    case Pattern::C5: return "C5";
    case Pattern::P5: return "P5";
    case Pattern::C6: return "C6";
    case Pattern::coC6: return "co-C6";
  }
  return "?";
}

inline Graph cycle_graph(std::size_t k) {
  GraphBuilder b(k);
  for (Vertex i = 0; i < k; ++i) b.add_edge(i, static_cast<Vertex>((i + 1) % k));
  return std::move(b).build();
}

inline Graph path_graph(std::size_t k) {
  GraphBuilder b(k);
  for (Vertex i = 0; i + 1 < k; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

/// F1/F2: the 4-hole 0-1-2-3 plus hub 4 adjacent to 0,1,2 (F1) or all four (F2).
inline Graph pattern_graph(Pattern p) {
  switch (p) {
    case Pattern::F1: return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}});
    case Pattern::F2: return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
    case Pattern::coF1: return complement(pattern_graph(Pattern::F1));
    case Pattern::coF2: return complement(pattern_graph(Pattern::F2));
    case Pattern::two_K2: return make_graph(4, {{0, 1}, {2, 3}});
    case Pattern::C4: return cycle_graph(4);
    case Pattern::C5: return cycle_graph(5);
    case Pattern::P5: return path_graph(5);
    case Pattern::C6: return cycle_graph(6);
    case Pattern::coC6: return complement(cycle_graph(6));
  }
  throw std::invalid_argument("unknown pattern");
}

namespace detail {

inline bool isomorphic_small(const Graph& a, const Graph& b) {
  const std::size_t k = a.order();
  if (b.order() != k || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> map(k);
  std::vector<bool> used(k, false);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == k) return true;
    for (Vertex t = 0; t < k; ++t) {
      if (used[t] || a.degree(static_cast<Vertex>(i)) != b.degree(t)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = a.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) == b.adjacent(t, map[j]);
      if (!ok) continue;
      used[t] = true;
      map[i] = t;
      if (place(i + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  return place(0);
}

}  // namespace detail

/// Lexicographically least vertex set of g inducing a copy of pattern, if any.
inline std::optional<VertexSet> contains_induced(const Graph& g, const Graph& pattern) {
  const std::size_t k = pattern.order();
  if (k > g.order()) return std::nullopt;
  if (k == 0) return VertexSet{};

  std::vector<std::size_t> want_degrees(k);
  std::size_t max_deg = 0;
  for (Vertex v = 0; v < k; ++v) {
    want_degrees[v] = pattern.degree(v);
    max_deg = std::max(max_deg, want_degrees[v]);
  }
  std::sort(want_degrees.begin(), want_degrees.end());
  const std::size_t want_edges = pattern.edge_count();

  VertexSet chosen;
  std::vector<std::size_t> local_deg(k, 0);
  std::size_t edges = 0;
  std::optional<VertexSet> found;

  std::function<void(Vertex)> choose = [&](Vertex start) {
    if (chosen.size() == k) {
      std::vector<std::size_t> degs(local_deg.begin(), local_deg.end());
      std::sort(degs.begin(), degs.end());
      if (degs == want_degrees && detail::isomorphic_small(induced(g, chosen).graph, pattern)) found = chosen;
      return;
    }
    for (Vertex v = start; v + (k - chosen.size()) <= g.order() && !found; ++v) {
      std::size_t added = 0;
      bool ok = true;
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (g.adjacent(v, chosen[i])) {
          ++added;
          if (local_deg[i] + 1 > max_deg) ok = false;
        }
      }
      if (!ok || added > max_deg || edges + added > want_edges) continue;
      for (std::size_t i = 0; i < chosen.size(); ++i)
        if (g.adjacent(v, chosen[i])) ++local_deg[i];
      local_deg[chosen.size()] = added;
      chosen.push_back(v);
      edges += added;
      choose(v + 1);
      edges -= added;
      chosen.pop_back();
      for (std::size_t i = 0; i < chosen.size(); ++i)
        if (g.adjacent(v, chosen[i])) --local_deg[i];
    }
  };
  choose(0);
  return found;
}

inline std::optional<VertexSet> contains_pattern(const Graph& g, Pattern p) {
  return contains_induced(g, pattern_graph(p));
}

}  // namespace wheelfree
