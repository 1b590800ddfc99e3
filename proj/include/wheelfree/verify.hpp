#pragma once

// Certificate checker. Re-derives every invariant of a certificate from the
// graph using only the graph-core predicates; shares no code with the
// recognizers.

#include <algorithm>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <variant>

#include "wheelfree/classification.hpp"
#include "wheelfree/graph.hpp"

namespace wheelfree {

struct VerifyResult {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
  static VerifyResult pass() { return {}; }
  static VerifyResult fail(std::string why) { return {false, std::move(why)}; }
};

namespace detail {

#define WHEELFREE_REQUIRE(cond, why) \
  do {                               \
    if (!(cond)) return VerifyResult::fail(why); \
  } while (false)

/// The given sets are pairwise disjoint, in range and cover {0..n-1}.
inline VerifyResult check_partition(std::size_t n, std::initializer_list<const VertexSet*> parts) {
  std::vector<bool> seen(n, false);
  std::size_t total = 0;
  for (const VertexSet* p : parts) {
    for (Vertex v : *p) {
      WHEELFREE_REQUIRE(v < n, "vertex " + std::to_string(v) + " out of range");
      WHEELFREE_REQUIRE(!seen[v], "vertex " + std::to_string(v) + " appears in two parts");
      seen[v] = true;
      ++total;
    }
  }
  WHEELFREE_REQUIRE(total == n, "parts do not cover every vertex");
  return VerifyResult::pass();
}

inline VerifyResult check_cycle_certificate(const Graph& host, const std::vector<Vertex>& cycle, std::size_t k) {
  WHEELFREE_REQUIRE(host.order() == k, "graph does not have " + std::to_string(k) + " vertices");
  WHEELFREE_REQUIRE(cycle.size() == k, "cycle does not list " + std::to_string(k) + " vertices");
  WHEELFREE_REQUIRE(is_chordless_cycle(host, cycle), "listed cycle is not a chordless cycle");
  return VerifyResult::pass();
}

}  // namespace detail

inline VerifyResult check_split(const Graph& host, const SplitPartition& s) {
  if (auto r = detail::check_partition(host.order(), {&s.clique, &s.stable}); !r) return r;
  WHEELFREE_REQUIRE(is_clique(host, s.clique), "clique part is not a clique");
  WHEELFREE_REQUIRE(is_stable(host, s.stable), "stable part is not a stable set");
  return VerifyResult::pass();
}

inline VerifyResult check_class_a(const Graph& host, const ClassADecomposition& dec) {
  const VertexSet roles{dec.a, dec.b, dec.c, dec.d, dec.e};
  VertexSet sorted_roles = roles;
  std::sort(sorted_roles.begin(), sorted_roles.end());
  WHEELFREE_REQUIRE(std::adjacent_find(sorted_roles.begin(), sorted_roles.end()) == sorted_roles.end(),
                    "roles a..e are not distinct");
  if (auto r = detail::check_partition(host.order(), {&sorted_roles, &dec.X}); !r) return r;
  WHEELFREE_REQUIRE(is_chordless_cycle(host, VertexSet{dec.a, dec.b, dec.c, dec.d}),
                    "a-b-c-d is not a 4-hole with edges ab, bc, cd, da");
  WHEELFREE_REQUIRE(!dec.X.empty(), "X is empty");
  WHEELFREE_REQUIRE(is_clique(host, dec.X), "X is not a clique");
  const VertexSet cd{std::min(dec.c, dec.d), std::max(dec.c, dec.d)};
  const VertexSet ab{std::min(dec.a, dec.b), std::max(dec.a, dec.b)};
  WHEELFREE_REQUIRE(is_complete_to(host, dec.X, cd), "X is not complete to {c,d}");
  WHEELFREE_REQUIRE(is_anticomplete_to(host, dec.X, ab), "X is not anticomplete to {a,b}");
  const VertexSet e{dec.e};
  WHEELFREE_REQUIRE(is_complete_to(host, e, dec.X), "e is not complete to X");
  WHEELFREE_REQUIRE(is_anticomplete_to(host, e, ab), "e is not anticomplete to {a,b}");
  WHEELFREE_REQUIRE(!(host.adjacent(dec.e, dec.c) && host.adjacent(dec.e, dec.d)), "e is adjacent to both c and d");
  return VerifyResult::pass();
}

inline VerifyResult check_class_b(const Graph& host, const ClassBDecomposition& dec) {
  if (auto r = detail::check_partition(host.order(), {&dec.X, &dec.Y, &dec.Z, &dec.W}); !r) return r;
  for (const auto* s : {&dec.X, &dec.Y, &dec.Z, &dec.W})
    WHEELFREE_REQUIRE(is_stable(host, *s), "a part of X, Y, Z, W is not stable");
  WHEELFREE_REQUIRE(dec.X.size() >= 2 && dec.Y.size() >= 2, "|X| < 2 or |Y| < 2");
  WHEELFREE_REQUIRE(std::find(dec.X.begin(), dec.X.end(), dec.x) != dec.X.end(), "x is not in X");
  WHEELFREE_REQUIRE(std::find(dec.Y.begin(), dec.Y.end(), dec.y) != dec.Y.end(), "y is not in Y");

  VertexSet xy(dec.X);
  xy.insert(xy.end(), dec.Y.begin(), dec.Y.end());
  std::sort(xy.begin(), xy.end());
  WHEELFREE_REQUIRE(connected_components(induced(host, xy).graph).size() == 1, "X ∪ Y is not connected");

  const VertexMask ymask = VertexMask::of(host.order(), dec.Y);
  for (std::size_t i = 0; i < dec.X.size(); ++i) {
    const VertexMask ni = [&] {
      VertexMask m = host.neighborhood(dec.X[i]);
      m &= ymask;
      return m;
    }();
    for (std::size_t j = i + 1; j < dec.X.size(); ++j) {
      VertexMask nj = host.neighborhood(dec.X[j]);
      nj &= ymask;
      WHEELFREE_REQUIRE(is_subset(ni.words(), nj.words()) || is_subset(nj.words(), ni.words()),
                        "neighborhoods of " + std::to_string(dec.X[i]) + " and " + std::to_string(dec.X[j]) +
                            " in Y are not nested");
    }
  }

  VertexSet xyz(xy);
  xyz.insert(xyz.end(), dec.Z.begin(), dec.Z.end());
  WHEELFREE_REQUIRE(is_anticomplete_to(host, dec.W, xyz), "W is not anticomplete to X ∪ Y ∪ Z");
  WHEELFREE_REQUIRE(is_complete_to(host, VertexSet{dec.x}, dec.Y), "x is not complete to Y");
  WHEELFREE_REQUIRE(is_complete_to(host, VertexSet{dec.y}, dec.X), "y is not complete to X");
  const VertexSet special{std::min(dec.x, dec.y), std::max(dec.x, dec.y)};
  VertexSet rest;
  std::set_difference(xy.begin(), xy.end(), special.begin(), special.end(), std::back_inserter(rest));
  WHEELFREE_REQUIRE(is_complete_to(host, dec.Z, special), "Z is not complete to {x,y}");
  WHEELFREE_REQUIRE(is_anticomplete_to(host, dec.Z, rest), "Z is not anticomplete to (X ∪ Y) minus {x,y}");
  return VerifyResult::pass();
}

inline VerifyResult check_class_c(const Graph& host, const ClassCDecomposition& dec) {
  if (auto r = detail::check_partition(host.order(), {&dec.X, &dec.Y}); !r) return r;
  WHEELFREE_REQUIRE(dec.X.size() >= 2 && dec.Y.size() >= 2, "a clique has fewer than 2 vertices");
  WHEELFREE_REQUIRE(is_clique(host, dec.X), "X is not a clique");
  WHEELFREE_REQUIRE(is_clique(host, dec.Y), "Y is not a clique");

  std::set<Edge> cross;
  for (Vertex u : dec.X)
    for (Vertex v : dec.Y)
      if (host.adjacent(u, v)) cross.emplace(u, v);
  WHEELFREE_REQUIRE(cross.size() == 2, "cross edges != 2 (found " + std::to_string(cross.size()) + ")");
  auto oriented = [&](Edge e) {
    return std::find(dec.X.begin(), dec.X.end(), e.first) != dec.X.end() ? e : Edge{e.second, e.first};
  };
  const std::set<Edge> claimed{oriented(dec.m1), oriented(dec.m2)};
  WHEELFREE_REQUIRE(claimed == cross, "listed matching differs from the cross edges");
  WHEELFREE_REQUIRE(dec.m1.first != dec.m2.first && dec.m1.first != dec.m2.second &&
                        dec.m1.second != dec.m2.first && dec.m1.second != dec.m2.second,
                    "cross edges share an endpoint");
  return VerifyResult::pass();
}

/// g is the input graph; the witness picks its own host via in_complement.
inline VerifyResult check_wheel_witness(const Graph& g, const WheelWitness& w) {
  const Graph host = w.in_complement ? complement(g) : g;
  const auto& cycle = w.hole.cycle;
  WHEELFREE_REQUIRE(is_chordless_cycle(host, cycle), "witness hole is not a hole of the host graph");
  WHEELFREE_REQUIRE(w.hub < host.order(), "hub out of range");
  WHEELFREE_REQUIRE(std::find(cycle.begin(), cycle.end(), w.hub) == cycle.end(), "hub lies on the hole");
  std::size_t on_hole = 0;
  for (Vertex v : cycle) on_hole += host.adjacent(w.hub, v) ? 1 : 0;
  WHEELFREE_REQUIRE(on_hole >= 3, "hub has only " + std::to_string(on_hole) + " neighbors on the hole");
  return VerifyResult::pass();
}

#undef WHEELFREE_REQUIRE

inline VerifyResult verify_certificate(const Graph& host, const Certificate& cert) {
  return std::visit(
      [&](const auto& c) -> VerifyResult {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, FiveHole>) return detail::check_cycle_certificate(host, c.cycle, 5);
        else if constexpr (std::is_same_v<T, SixHole>) return detail::check_cycle_certificate(host, c.cycle, 6);
        else if constexpr (std::is_same_v<T, SplitPartition>) return check_split(host, c);
        else if constexpr (std::is_same_v<T, ClassADecomposition>) return check_class_a(host, c);
        else if constexpr (std::is_same_v<T, ClassBDecomposition>) return check_class_b(host, c);
        else if constexpr (std::is_same_v<T, ClassCDecomposition>) return check_class_c(host, c);
        else return check_wheel_witness(host, c);
      },
      cert);
}

/// Accepts any valid certificate for g, not only the one classify would emit.
inline VerifyResult verify_classification(const Graph& g, const Classification& c) {
  if (!c.is_free()) return check_wheel_witness(g, std::get<WheelWitness>(c.certificate));
  if (c.complemented) return verify_certificate(complement(g), c.certificate);
  return verify_certificate(g, c.certificate);
}

}  // namespace wheelfree
