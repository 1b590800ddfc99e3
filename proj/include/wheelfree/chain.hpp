#pragma once

// Chain (2K2-free) bipartite graphs: 2-coloring, neighborhood nesting and
// the staircase partition X_1..X_h / Y_1..Y_h where X_i ~ Y_j iff i+j <= h+1.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wheelfree/graph.hpp"

namespace wheelfree {

struct Bipartition {
  VertexSet X;
  VertexSet Y;
  bool operator==(const Bipartition&) const = default;
};

/// Either a 2-coloring or an odd cycle proving none exists.
struct BipartitionResult {
  std::optional<Bipartition> parts;
  std::vector<Vertex> odd_cycle;

  explicit operator bool() const { return parts.has_value(); }
  const Bipartition& operator*() const { return *parts; }
  const Bipartition* operator->() const { return &*parts; }
};

struct ChainDecomposition {
  std::size_t h = 0;
  std::vector<VertexSet> xparts;
  std::vector<VertexSet> yparts;
};

/// BFS 2-coloring; in each component the least vertex goes to X.
inline BipartitionResult bipartition(const Graph& g) {
  const std::size_t n = g.order();
  constexpr int uncolored = -1;
  std::vector<int> color(n, uncolored);
  std::vector<Vertex> parent(n, 0);
  std::vector<std::size_t> depth(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != uncolored) continue;
    color[s] = 0;
    parent[s] = s;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex v : g.neighbors(u)) {
        if (color[v] == uncolored) {
          color[v] = 1 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          // walk both tree paths up to their meeting point
          std::vector<Vertex> left{u};
          std::vector<Vertex> right{v};
          Vertex a = u;
          Vertex b = v;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          return {std::nullopt, std::move(left)};
        }
      }
    }
  }
  Bipartition b;
  for (Vertex v = 0; v < n; ++v) (color[v] == 0 ? b.X : b.Y).push_back(v);
  return {std::move(b), {}};
}

inline bool is_valid_bipartition(const Graph& g, const Bipartition& b) {
  if (b.X.size() + b.Y.size() != g.order() || !in_range(g, b.X) || !in_range(g, b.Y)) return false;
  VertexMask seen(g.order());
  for (const auto* side : {&b.X, &b.Y})
    for (Vertex v : *side) {
      if (seen.test(v)) return false;
      seen.set(v);
    }
  return is_stable(g, b.X) && is_stable(g, b.Y);
}

namespace detail {

inline void require_valid(const Graph& g, const Bipartition& b, const char* who) {
  if (!is_valid_bipartition(g, b)) throw std::invalid_argument(std::string(who) + ": invalid bipartition");
}

/// side sorted by degree descending (ties by index).
inline std::vector<Vertex> by_degree_desc(const Graph& g, const VertexSet& side) {
  std::vector<Vertex> order(side.begin(), side.end());
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

}  // namespace detail

/// First pair on one side whose neighborhoods are incomparable, if any.
inline std::optional<std::pair<Vertex, Vertex>> incomparable_pair(const Graph& g, const VertexSet& side) {
  auto order = detail::by_degree_desc(g, side);
  for (std::size_t i = 1; i < order.size(); ++i)
    if (!is_subset(g.row(order[i]), g.row(order[i - 1]))) return std::pair{order[i - 1], order[i]};
  return std::nullopt;
}

/// Same-side neighborhoods are totally ordered by inclusion.
inline bool is_chain(const Graph& g, const Bipartition& b) {
  detail::require_valid(g, b, "is_chain");
  return !incomparable_pair(g, b.X).has_value();
}

namespace detail {

// Groups side by equal neighborhoods, largest neighborhood first. Assumes
// the neighborhoods are nested.
inline std::vector<VertexSet> nested_groups(const Graph& g, const VertexSet& side) {
  std::vector<VertexSet> groups;
  auto order = by_degree_desc(g, side);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || g.degree(order[i]) != g.degree(order[i - 1])) groups.emplace_back();
    groups.back().push_back(order[i]);
  }
  for (auto& grp : groups) std::sort(grp.begin(), grp.end());
  return groups;
}

}  // namespace detail

/// Brute-force check of the staircase rule over every cross pair.
inline bool satisfies_staircase(const Graph& g, const ChainDecomposition& d) {
  if (d.h == 0 || d.xparts.size() != d.h || d.yparts.size() != d.h) return false;
  for (std::size_t i = 0; i < d.h; ++i) {
    if (d.xparts[i].empty() || d.yparts[i].empty()) return false;
    for (std::size_t j = 0; j < d.h; ++j) {
      const bool want = (i + 1) + (j + 1) <= d.h + 1;
      for (Vertex x : d.xparts[i])
        for (Vertex y : d.yparts[j])
          if (g.adjacent(x, y) != want) return false;
    }
  }
  return true;
}

/// Staircase partition of a connected chain bipartite graph; nullopt when
/// the neighborhoods are not nested. Refuses disconnected graphs and empty sides.
inline std::optional<ChainDecomposition> chain_decomposition(const Graph& g, const Bipartition& b) {
  detail::require_valid(g, b, "chain_decomposition");
  if (!is_connected(g)) throw std::invalid_argument("chain_decomposition: graph is disconnected");
  if (b.X.empty() || b.Y.empty()) throw std::invalid_argument("chain_decomposition: empty side");
  if (!is_chain(g, b)) return std::nullopt;

  ChainDecomposition d;
  d.xparts = detail::nested_groups(g, b.X);
  d.yparts = detail::nested_groups(g, b.Y);
  d.h = d.xparts.size();
  if (d.yparts.size() != d.h || !satisfies_staircase(g, d))
    throw std::logic_error("chain_decomposition: X and Y staircases disagree");
  return d;
}

/// (x in X complete to Y, y in Y complete to X), least indices.
inline std::pair<Vertex, Vertex> dominating_vertices(const Graph& g, const Bipartition& b) {
  detail::require_valid(g, b, "dominating_vertices");
  if (b.X.empty() || b.Y.empty()) throw std::invalid_argument("dominating_vertices: empty side");
  if (!is_connected(g) || !is_chain(g, b))
    throw std::invalid_argument("dominating_vertices: graph is not a connected chain bipartite graph");
  auto pick = [&](const VertexSet& side, std::size_t other) {
    for (Vertex v : side)
      if (g.degree(v) == other) return v;
    throw std::logic_error("dominating_vertices: no dominating vertex in a chain graph");
  };
  return {pick(b.X, b.Y.size()), pick(b.Y, b.X.size())};
}

}  // namespace wheelfree
