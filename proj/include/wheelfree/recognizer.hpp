#pragma once

// Structural recognition of (wheel, antiwheel)-free graphs: G or its
// complement is a 5-hole, a 6-hole, a split graph, or a member of class A,
// B or C. Each recognizer verifies its candidate before returning it, so a
// returned decomposition is always valid.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wheelfree/chain.hpp"
#include "wheelfree/classification.hpp"
#include "wheelfree/graph.hpp"
#include "wheelfree/oracle.hpp"
#include "wheelfree/verify.hpp"

namespace wheelfree {

/// Raised when neither a structural certificate nor a small wheel/antiwheel
/// exists. That would contradict the characterization; it must never fire.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Maximum number of complement components for which class C bipartitions are enumerated.
inline constexpr std::size_t class_c_component_limit = 12;

/// g is exactly a chordless k-cycle.
inline bool is_k_hole(const Graph& g, std::size_t k) {
  if (g.order() != k || k < 3) return false;
  for (Vertex v = 0; v < k; ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

/// Walks a 2-regular connected graph from vertex 0 towards its smaller neighbor.
inline std::vector<Vertex> cycle_order(const Graph& g) {
  std::vector<Vertex> out;
  if (g.order() == 0) return out;
  Vertex prev = 0;
  Vertex cur = g.neighbors(0).front();
  out.push_back(0);
  while (cur != 0) {
    out.push_back(cur);
    auto nb = g.neighbors(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return out;
}

/// Degree-sequence split test: with d_1 >= ... >= d_n and m = max{i : d_i >= i-1},
/// g is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i; the top-m vertices form the clique.
inline std::optional<SplitPartition> split_partition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  std::size_t m = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (g.degree(order[i - 1]) + 1 >= i) m = i;

  std::uint64_t head = 0;
  std::uint64_t tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[i]);
  if (head != static_cast<std::uint64_t>(m) * (m == 0 ? 0 : m - 1) + tail) return std::nullopt;

  SplitPartition p;
  p.clique.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
  p.stable.assign(order.begin() + static_cast<std::ptrdiff_t>(m), order.end());
  std::sort(p.clique.begin(), p.clique.end());
  std::sort(p.stable.begin(), p.stable.end());
  if (check_split(g, p)) return p;

  // The threshold vertex (d_m = m-1) may belong on the stable side.
  const VertexMask cm = VertexMask::of(n, p.clique);
  for (Vertex v : p.clique) {
    if (g.degree_in(v, cm) + 1 == p.clique.size()) continue;
    SplitPartition fixed = p;
    fixed.clique.erase(std::find(fixed.clique.begin(), fixed.clique.end(), v));
    fixed.stable.insert(std::lower_bound(fixed.stable.begin(), fixed.stable.end(), v), v);
    if (check_split(g, fixed)) return fixed;
    break;
  }
  throw InternalInconsistency("split_partition: degree test passed but no valid partition was found");
}

inline std::optional<ClassADecomposition> recognize_class_a(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 6) return std::nullopt;
  for (Vertex a = 0; a < n; ++a) {
    if (g.degree(a) != 2) continue;
    const auto na = g.neighbors(a);
    for (Vertex b : na) {
      if (g.degree(b) != 2) continue;
      const Vertex d = na[0] == b ? na[1] : na[0];
      const auto nb = g.neighbors(b);
      const Vertex c = nb[0] == a ? nb[1] : nb[0];
      if (c == d || !g.adjacent(c, d) || g.adjacent(a, c) || g.adjacent(b, d)) continue;

      ClassADecomposition dec{a, b, c, d, 0, {}};
      std::vector<Vertex> others;
      for (Vertex v = 0; v < n; ++v) {
        if (v == a || v == b || v == c || v == d) continue;
        (g.adjacent(v, c) && g.adjacent(v, d) ? dec.X : others).push_back(v);
      }
      if (others.size() != 1 || dec.X.empty()) continue;
      dec.e = others.front();
      if (check_class_a(g, dec)) return dec;
    }
  }
  return std::nullopt;
}

namespace detail {

// Class B with a fixed Z: the remaining non-isolated vertices must form a
// connected chain bipartite graph with both sides of size >= 2. With a
// forced (u, v) pair, those two must be the dominating vertices.
inline std::optional<ClassBDecomposition> class_b_with(const Graph& g, const VertexSet& core, const VertexSet& Z,
                                                       const VertexSet& W,
                                                       std::optional<std::pair<Vertex, Vertex>> forced) {
  if (core.size() < 4) return std::nullopt;
  const auto sub = induced(g, core);
  if (!is_connected(sub.graph)) return std::nullopt;
  const auto bip = bipartition(sub.graph);
  if (!bip || bip->X.size() < 2 || bip->Y.size() < 2) return std::nullopt;
  if (!is_chain(sub.graph, *bip)) return std::nullopt;

  auto lift = [&](const VertexSet& local) {
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(sub.to_parent[v]);
    std::sort(out.begin(), out.end());
    return out;
  };
  ClassBDecomposition dec{lift(bip->X), lift(bip->Y), Z, W, 0, 0};
  if (forced) {
    auto [u, v] = *forced;
    if (std::binary_search(dec.Y.begin(), dec.Y.end(), u)) std::swap(u, v);
    if (!std::binary_search(dec.X.begin(), dec.X.end(), u) || !std::binary_search(dec.Y.begin(), dec.Y.end(), v))
      return std::nullopt;
    dec.x = u;
    dec.y = v;
  } else {
    auto [lx, ly] = dominating_vertices(sub.graph, *bip);
    dec.x = sub.to_parent[lx];
    dec.y = sub.to_parent[ly];
  }
  if (!check_class_b(g, dec)) return std::nullopt;
  return dec;
}

}  // namespace detail

inline std::optional<ClassBDecomposition> recognize_class_b(const Graph& g) {
  const std::size_t n = g.order();
  VertexSet W;
  VertexSet rest;
  for (Vertex v = 0; v < n; ++v) (g.degree(v) == 0 ? W : rest).push_back(v);
  if (rest.size() < 4) return std::nullopt;

  if (auto dec = detail::class_b_with(g, rest, {}, W, std::nullopt)) return dec;

  // Z != ∅: every z sees exactly an adjacent pair {x, y}.
  std::map<std::pair<Vertex, Vertex>, VertexSet> groups;
  for (Vertex v : rest) {
    if (g.degree(v) != 2) continue;
    const auto nb = g.neighbors(v);
    if (g.adjacent(nb[0], nb[1])) groups[{nb[0], nb[1]}].push_back(v);
  }
  for (const auto& [pair, Z] : groups) {
    VertexSet core;
    std::set_difference(rest.begin(), rest.end(), Z.begin(), Z.end(), std::back_inserter(core));
    if (auto dec = detail::class_b_with(g, core, Z, W, pair)) return dec;
  }
  return std::nullopt;
}

inline std::optional<ClassCDecomposition> recognize_class_c(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 4) return std::nullopt;
  // A vertex seeing everything would send >= 2 edges into the other clique.
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) + 1 == n) return std::nullopt;

  const Graph co = complement(g);
  const auto bip = bipartition(co);
  if (!bip) return std::nullopt;
  const auto comps = connected_components(co);
  if (comps.size() > class_c_component_limit) return std::nullopt;

  std::vector<bool> in_x(n, false);
  for (Vertex v : bip->X) in_x[v] = true;

  // Flipping component 0 only swaps X and Y, so it stays fixed.
  const std::uint64_t combos = std::uint64_t{1} << (comps.size() - 1);
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    ClassCDecomposition dec;
    std::vector<bool> side = in_x;
    for (std::size_t c = 1; c < comps.size(); ++c)
      if ((mask >> (c - 1)) & 1U)
        for (Vertex v : comps[c]) side[v] = !side[v];
    for (Vertex v = 0; v < n; ++v) (side[v] ? dec.X : dec.Y).push_back(v);
    if (dec.X.size() < 2 || dec.Y.size() < 2) continue;

    const VertexMask ymask = VertexMask::of(n, dec.Y);
    std::vector<Edge> cross;
    for (Vertex u : dec.X) {
      if (g.degree_in(u, ymask) == 0) continue;
      for (Vertex v : g.neighbors(u))
        if (ymask.test(v)) cross.emplace_back(u, v);
      if (cross.size() > 2) break;
    }
    if (cross.size() != 2) continue;
    dec.m1 = cross[0];
    dec.m2 = cross[1];
    if (check_class_c(g, dec)) return dec;
  }
  return std::nullopt;
}

namespace detail {

inline std::optional<Certificate> structural(const Graph& g, bool try_split) {
  if (is_k_hole(g, 5)) return FiveHole{cycle_order(g)};
  if (is_k_hole(g, 6)) return SixHole{cycle_order(g)};
  if (try_split)
    if (auto s = split_partition(g)) return *s;
  if (auto a = recognize_class_a(g)) return *a;
  if (auto b = recognize_class_b(g)) return *b;
  if (auto c = recognize_class_c(g)) return *c;
  return std::nullopt;
}

}  // namespace detail

/// Structural verdict on g, then on its complement (split is not retried
/// there: the complement of a split graph is split). Falls back to a small
/// wheel or antiwheel witness.
inline Classification classify(const Graph& g) {
  if (auto c = detail::structural(g, true)) return {std::move(*c), false};
  const Graph co = complement(g);
  if (auto c = detail::structural(co, false)) return {std::move(*c), true};
  if (auto w = find_small_wheel(g)) return {std::move(*w), false};
  if (auto w = find_small_wheel(co)) {
    w->in_complement = true;
    return {std::move(*w), false};
  }
  throw InternalInconsistency("classify: no structural certificate and no small wheel or antiwheel");
}

}  // namespace wheelfree
