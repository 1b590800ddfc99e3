#pragma once

// Immutable simple undirected graph stored as n bit-rows, plus the set
// predicates (complete/anticomplete, clique/stable) the rest of the library
// is written in terms of.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wheelfree {

using Vertex = std::uint32_t;

/// Sorted list of distinct vertices of some graph.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t word_bits = 64;

inline std::size_t words_for(std::size_t n) { return (n + word_bits - 1) / word_bits; }

/// Fixed-width bitset over {0..n-1}. Used for vertex masks and adjacency rows.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(std::size_t n) : n_(n), words_(words_for(n), 0) {}

  static VertexMask of(std::size_t n, std::span<const Vertex> vs) {
    VertexMask m(n);
    for (Vertex v : vs) m.set(v);
    return m;
  }

  static VertexMask full(std::size_t n) {
    VertexMask m(n);
    for (std::size_t i = 0; i < m.words_.size(); ++i) m.words_[i] = ~std::uint64_t{0};
    m.trim();
    return m;
  }

  std::size_t universe() const { return n_; }
  bool test(Vertex v) const { return (words_[v / word_bits] >> (v % word_bits)) & 1U; }
  void set(Vertex v) { words_[v / word_bits] |= std::uint64_t{1} << (v % word_bits); }
  void reset(Vertex v) { words_[v / word_bits] &= ~(std::uint64_t{1} << (v % word_bits)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  VertexSet to_set() const {
    VertexSet out;
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        fn(static_cast<Vertex>(i * word_bits + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  VertexMask& operator|=(const VertexMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexMask& operator&=(const VertexMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexMask& subtract(const VertexMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  bool operator==(const VertexMask&) const = default;

 private:
  void trim() {
    if (n_ % word_bits != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (n_ % word_bits)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::size_t popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

/// a ⊆ b, word-wise.
inline bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

class GraphBuilder;

class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / word_bits] >> (v % word_bits)) & 1U;
  }
  std::size_t degree(Vertex u) const { return degree_[u]; }

  /// Adjacency row of u as raw words (bit v set iff u ~ v).
  std::span<const std::uint64_t> row(Vertex u) const {
    return {bits_.data() + u * words_, words_};
  }
  std::size_t words() const { return words_; }

  VertexMask neighborhood(Vertex u) const {
    VertexMask m(n_);
    auto r = row(u);
    std::copy(r.begin(), r.end(), m.words().begin());
    return m;
  }
  VertexSet neighbors(Vertex u) const { return neighborhood(u).to_set(); }

  /// Number of neighbors of u inside mask.
  std::size_t degree_in(Vertex u, const VertexMask& mask) const {
    return popcount_and(row(u), mask.words());
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  /// Bytes held by the adjacency representation.
  std::size_t memory_bytes() const {
    return bits_.capacity() * sizeof(std::uint64_t) + degree_.capacity() * sizeof(std::uint32_t);
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> degree_;
};

/// Mutable staging area for a Graph. add_edge validates; build() freezes.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

  std::size_t order() const { return n_; }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                  std::to_string(v) + " with n=" + std::to_string(n_));
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    set(u, v);
    set(v, u);
    return *this;
  }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / word_bits] >> (v % word_bits)) & 1U;
  }

  Graph build() && {
    Graph g;
    g.n_ = n_;
    g.words_ = words_;
    g.bits_ = std::move(bits_);
    g.degree_.assign(n_, 0);
    std::size_t twice_m = 0;
    for (std::size_t u = 0; u < n_; ++u) {
      std::size_t d = 0;
      for (std::size_t i = 0; i < words_; ++i)
        d += static_cast<std::size_t>(std::popcount(g.bits_[u * words_ + i]));
      g.degree_[u] = static_cast<std::uint32_t>(d);
      twice_m += d;
    }
    g.m_ = twice_m / 2;
    return g;
  }

 private:
  friend Graph complement(const Graph& g);

  void set(Vertex u, Vertex v) { bits_[u * words_ + v / word_bits] |= std::uint64_t{1} << (v % word_bits); }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Builds a graph with exactly the given edges; duplicates collapse.
/// Throws std::invalid_argument on loops or out-of-range endpoints.
inline Graph make_graph(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  const VertexMask all = VertexMask::full(n);
  for (Vertex u = 0; u < n; ++u) {
    auto src = g.row(u);
    auto full = all.words();
    for (std::size_t i = 0; i < src.size(); ++i) b.bits_[u * b.words_ + i] = ~src[i] & full[i];
    b.bits_[u * b.words_ + u / word_bits] &= ~(std::uint64_t{1} << (u % word_bits));
  }
  return std::move(b).build();
}

/// Induced subgraph on s; vertex i of the result is s[i] of g.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

inline InducedSubgraph induced(const Graph& g, std::span<const Vertex> s) {
  GraphBuilder b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.order()) throw std::invalid_argument("induced: vertex out of range");
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return {std::move(b).build(), std::vector<Vertex>(s.begin(), s.end())};
}

/// Same graph with vertex v renamed perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("relabel: permutation size mismatch");
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

enum class SetRelation { complete, anticomplete, mixed };

inline bool in_range(const Graph& g, std::span<const Vertex> s) {
  return std::all_of(s.begin(), s.end(), [&](Vertex v) { return v < g.order(); });
}

/// Every vertex of a adjacent to every vertex of b (vacuously true if either is empty).
inline bool is_complete_to(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  const VertexMask mb = VertexMask::of(g.order(), b);
  const std::size_t need = mb.count();
  return std::all_of(a.begin(), a.end(), [&](Vertex u) { return g.degree_in(u, mb) == need; });
}

inline bool is_anticomplete_to(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  const VertexMask mb = VertexMask::of(g.order(), b);
  return std::all_of(a.begin(), a.end(), [&](Vertex u) { return g.degree_in(u, mb) == 0; });
}

/// Relation between disjoint sets a and b. Empty sets are reported as complete.
inline SetRelation set_relation(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  const VertexMask ma = VertexMask::of(g.order(), a);
  for (Vertex v : b)
    if (ma.test(v)) throw std::invalid_argument("set_relation: sets overlap at vertex " + std::to_string(v));
  if (is_complete_to(g, a, b)) return SetRelation::complete;
  if (is_anticomplete_to(g, a, b)) return SetRelation::anticomplete;
  return SetRelation::mixed;
}

inline bool is_clique(const Graph& g, std::span<const Vertex> s) {
  const VertexMask ms = VertexMask::of(g.order(), s);
  const std::size_t k = ms.count();
  return std::all_of(s.begin(), s.end(), [&](Vertex u) { return g.degree_in(u, ms) + 1 == k; });
}

inline bool is_stable(const Graph& g, std::span<const Vertex> s) {
  const VertexMask ms = VertexMask::of(g.order(), s);
  return std::all_of(s.begin(), s.end(), [&](Vertex u) { return g.degree_in(u, ms) == 0; });
}

/// True iff cycle lists ≥4 distinct in-range vertices forming a chordless cycle in that order.
inline bool is_chordless_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k < 4 || !in_range(g, cycle)) return false;
  VertexSet sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

/// Connected components, each sorted, ordered by minimum vertex.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  VertexMask unseen = VertexMask::full(n);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (!unseen.test(s)) continue;
    VertexSet comp;
    unseen.reset(s);
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      auto r = g.row(u);
      auto w = unseen.words();
      for (std::size_t i = 0; i < w.size(); ++i) {
        std::uint64_t hit = r[i] & w[i];
        w[i] &= ~hit;
        while (hit) {
          stack.push_back(static_cast<Vertex>(i * word_bits + static_cast<std::size_t>(std::countr_zero(hit))));
          hit &= hit - 1;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

/// Complement of s within {0..n-1}.
inline VertexSet set_complement(std::size_t n, std::span<const Vertex> s) {
  VertexMask m = VertexMask::full(n);
  for (Vertex v : s) m.reset(v);
  return m.to_set();
}

}  // namespace wheelfree
