#pragma once

// Deterministic constructors for each structural class plus random graphs.
// Roles are laid out in index order; use shuffled() to hide the layout.

#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wheelfree/graph.hpp"

namespace wheelfree {

using Seed = std::uint64_t;

/// splitmix64 finalizer; spreads (base, index) into independent stream seeds.
inline Seed derive_seed(Seed base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace detail {

// mt19937_64 output is fixed by the standard; the distributions are not,
// so coins and bounded draws are done by hand.
class Rng {
 public:
  explicit Rng(Seed s) : engine_(s) {}
  bool coin(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t r;
    do r = engine_();
    while (r >= limit);
    return r % bound;
  }

 private:
  std::mt19937_64 engine_;
};

inline void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
}

}  // namespace detail

enum class ApexMode { none, c, d };

/// a=0, b=1, c=2, d=3, e=4, X = 5..5+x_size-1.
inline Graph gen_class_a(std::size_t x_size, ApexMode e_mode) {
  if (x_size == 0) throw std::invalid_argument("gen_class_a: X must be non-empty");
  constexpr Vertex a = 0, b = 1, c = 2, d = 3, e = 4;
  const std::size_t n = 5 + x_size;
  GraphBuilder gb(n);
  gb.add_edge(a, b).add_edge(b, c).add_edge(c, d).add_edge(d, a);
  for (Vertex x = 5; x < n; ++x) {
    gb.add_edge(x, c).add_edge(x, d).add_edge(x, e);
    for (Vertex x2 = x + 1; x2 < n; ++x2) gb.add_edge(x, x2);
  }
  if (e_mode == ApexMode::c) gb.add_edge(e, c);
  if (e_mode == ApexMode::d) gb.add_edge(e, d);
  return std::move(gb).build();
}

namespace detail {

inline std::size_t checked_sum(std::span<const std::size_t> sizes, std::size_t h, const char* who) {
  if (h == 0 || sizes.size() != h) throw std::invalid_argument(std::string(who) + ": need h >= 1 block sizes per side");
  std::size_t total = 0;
  for (auto s : sizes) {
    if (s == 0) throw std::invalid_argument(std::string(who) + ": block sizes must be positive");
    total += s;
  }
  return total;
}

inline void add_staircase(GraphBuilder& gb, std::size_t h, std::span<const std::size_t> x_sizes,
                          std::span<const std::size_t> y_sizes, Vertex x_base, Vertex y_base) {
  Vertex xs = x_base;
  for (std::size_t i = 0; i < h; ++i) {
    Vertex ys = y_base;
    for (std::size_t j = 0; j < h; ++j) {
      if (i + j + 2 <= h + 1)
        for (Vertex x = xs; x < xs + x_sizes[i]; ++x)
          for (Vertex y = ys; y < ys + y_sizes[j]; ++y) gb.add_edge(x, y);
      ys += static_cast<Vertex>(y_sizes[j]);
    }
    xs += static_cast<Vertex>(x_sizes[i]);
  }
}

}  // namespace detail

/// Staircase graph: X blocks first, then Y blocks; X_i ~ Y_j iff i+j <= h+1.
inline Graph gen_chain(std::size_t h, std::span<const std::size_t> x_sizes, std::span<const std::size_t> y_sizes) {
  const std::size_t nx = detail::checked_sum(x_sizes, h, "gen_chain");
  const std::size_t ny = detail::checked_sum(y_sizes, h, "gen_chain");
  GraphBuilder gb(nx + ny);
  detail::add_staircase(gb, h, x_sizes, y_sizes, 0, static_cast<Vertex>(nx));
  return std::move(gb).build();
}

/// Staircase X ∪ Y, then z_size vertices seeing exactly {x, y} where
/// x = first vertex of X_1 and y = first vertex of Y_1, then w_size isolated vertices.
inline Graph gen_class_b(std::size_t h, std::span<const std::size_t> x_sizes, std::span<const std::size_t> y_sizes,
                         std::size_t z_size, std::size_t w_size) {
  const std::size_t nx = detail::checked_sum(x_sizes, h, "gen_class_b");
  const std::size_t ny = detail::checked_sum(y_sizes, h, "gen_class_b");
  if (nx < 2 || ny < 2) throw std::invalid_argument("gen_class_b: |X| and |Y| must be at least 2");
  GraphBuilder gb(nx + ny + z_size + w_size);
  detail::add_staircase(gb, h, x_sizes, y_sizes, 0, static_cast<Vertex>(nx));
  const Vertex x = 0;
  const auto y = static_cast<Vertex>(nx);
  for (std::size_t k = 0; k < z_size; ++k) {
    const auto z = static_cast<Vertex>(nx + ny + k);
    gb.add_edge(z, x).add_edge(z, y);
  }
  return std::move(gb).build();
}

/// Cliques {0..x_size-1} and {x_size..}, cross edges (0, x_size) and (1, x_size+1).
inline Graph gen_class_c(std::size_t x_size, std::size_t y_size) {
  if (x_size < 2 || y_size < 2) throw std::invalid_argument("gen_class_c: both cliques need at least 2 vertices");
  const std::size_t n = x_size + y_size;
  GraphBuilder gb(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if ((u < x_size) == (v < x_size)) gb.add_edge(u, v);
  gb.add_edge(0, static_cast<Vertex>(x_size)).add_edge(1, static_cast<Vertex>(x_size + 1));
  return std::move(gb).build();
}

/// Each vertex joins the clique with probability p; clique-stable edges are p-coins.
inline Graph gen_split(std::size_t n, double p, Seed seed) {
  detail::require_probability(p);
  detail::Rng rng(seed);
  std::vector<bool> in_clique(n);
  for (std::size_t v = 0; v < n; ++v) in_clique[v] = rng.coin(p);
  GraphBuilder gb(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (in_clique[u] && in_clique[v]) gb.add_edge(u, v);
      else if ((in_clique[u] || in_clique[v]) && rng.coin(p)) gb.add_edge(u, v);
    }
  return std::move(gb).build();
}

/// Erdős–Rényi G(n, p).
inline Graph gen_random(std::size_t n, double p, Seed seed) {
  detail::require_probability(p);
  detail::Rng rng(seed);
  GraphBuilder gb(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.coin(p)) gb.add_edge(u, v);
  return std::move(gb).build();
}

/// Uniform random permutation of {0..n-1} (Fisher-Yates).
inline std::vector<Vertex> random_permutation(std::size_t n, Seed seed) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  detail::Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return perm;
}

inline Graph shuffled(const Graph& g, Seed seed) { return relabel(g, random_permutation(g.order(), seed)); }

}  // namespace wheelfree
