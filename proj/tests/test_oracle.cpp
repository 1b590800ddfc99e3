#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

#include "support/brute_force.hpp"
#include "wheelfree/generators.hpp"
#include "wheelfree/io.hpp"
#include "wheelfree/oracle.hpp"
#include "wheelfree/verify.hpp"

using namespace wheelfree;
namespace bf = wheelfree::testing;

namespace {

Graph petersen() {
  return make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},   // outer
                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},   // inner pentagram
                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

// C_k on 0..k-1 plus vertex k adjacent to the listed cycle vertices.
Graph cycle_plus_hub(std::size_t k, std::initializer_list<Vertex> hub_nbrs) {
  GraphBuilder b(k + 1);
  for (Vertex i = 0; i < k; ++i) b.add_edge(i, static_cast<Vertex>((i + 1) % k));
  for (Vertex v : hub_nbrs) b.add_edge(static_cast<Vertex>(k), v);
  return std::move(b).build();
}

std::uint32_t mask_of(const std::vector<Vertex>& vs) {
  std::uint32_t m = 0;
  for (Vertex v : vs) m |= 1U << v;
  return m;
}

}  // namespace

TEST(FindHoles, Examples) {
  const auto c5 = find_holes(cycle_graph(5), 4, 6);
  ASSERT_EQ(c5.size(), 1u);
  EXPECT_EQ(c5[0].cycle.size(), 5u);

  EXPECT_TRUE(find_holes(complement(make_graph(4, {})), 4, 6).empty());
}

TEST(FindHoles, PetersenFiveHolesMatchBruteForce) {
  const Graph g = petersen();
  const auto oracle = bf::hole_sets(bf::to_matrix(g), 5, 5);
  ASSERT_EQ(oracle.size(), 12u);
  const auto holes = find_holes(g, 5, 5);
  EXPECT_EQ(holes.size(), 12u);
  std::vector<std::uint32_t> found;
  for (const auto& h : holes) found.push_back(mask_of(h.cycle));
  std::sort(found.begin(), found.end());
  auto expected = oracle;
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(found, expected);
}

TEST(FindHoles, CanonicalFormAndOrder) {
  const Graph g = gen_random(11, 0.35, 99);
  const auto holes = find_holes(g, 4, 11);
  for (const auto& h : holes) {
    EXPECT_TRUE(is_chordless_cycle(g, h.cycle));
    EXPECT_EQ(h.cycle.front(), *std::min_element(h.cycle.begin(), h.cycle.end()));
    EXPECT_LT(h.cycle[1], h.cycle.back());
  }
  EXPECT_TRUE(std::is_sorted(holes.begin(), holes.end(),
                             [](const Hole& a, const Hole& b) { return a.cycle < b.cycle; }));
}

TEST(FindHoles, MatchesSubsetEnumeration) {
  for (Seed s = 0; s < 150; ++s) {
    const Graph g = gen_random(4 + s % 7, 0.45, s);
    auto expected = bf::hole_sets(bf::to_matrix(g), 4, static_cast<int>(g.order()));
    std::vector<std::uint32_t> found;
    for (const auto& h : find_holes(g, 4, g.order())) found.push_back(mask_of(h.cycle));
    std::sort(found.begin(), found.end());
    std::sort(expected.begin(), expected.end());
    // a vertex set induces at most one cycle, so sets identify holes
    EXPECT_EQ(found, expected) << "seed " << s;
  }
}

TEST(FindHoles, RejectsBadRange) {
  EXPECT_THROW(find_holes(cycle_graph(5), 3, 6), std::invalid_argument);
  EXPECT_THROW(find_holes(cycle_graph(5), 6, 5), std::invalid_argument);
}

TEST(SmallWheel, F1) {
  const auto w = find_small_wheel(pattern_graph(Pattern::F1));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->hole.cycle, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(w->hub, 4u);
  EXPECT_FALSE(w->in_complement);
}

TEST(SmallWheel, C6HasNoWheel) { EXPECT_FALSE(find_small_wheel(cycle_graph(6))); }

TEST(SmallWheel, C6WithApex) {
  const auto w = find_small_wheel(cycle_plus_hub(6, {0, 1, 2, 3, 4, 5}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->hub, 6u);
  EXPECT_TRUE(check_wheel_witness(cycle_plus_hub(6, {0, 1, 2, 3, 4, 5}), *w));
}

TEST(SmallAntiwheel, Examples) {
  const auto a = find_small_antiwheel(pattern_graph(Pattern::coF1));
  ASSERT_TRUE(a);
  EXPECT_TRUE(a->in_complement);
  EXPECT_TRUE(check_wheel_witness(pattern_graph(Pattern::coF1), *a));

  EXPECT_FALSE(find_small_antiwheel(cycle_graph(5)));

  const Graph c7 = cycle_graph(7);
  ASSERT_TRUE(bf::has_wheel(bf::complement_matrix(bf::to_matrix(c7)), 6));
  const auto w7 = find_small_antiwheel(c7);
  ASSERT_TRUE(w7);
  EXPECT_TRUE(check_wheel_witness(c7, *w7));
}

TEST(ExhaustiveWheel, LongHoleOnlyVisibleToExhaustiveSearch) {
  // hub 8 sees three consecutive vertices of an 8-cycle: every hole has length 8
  const Graph g = cycle_plus_hub(8, {0, 1, 2});
  const auto holes = bf::hole_sets(bf::to_matrix(g), 4, 9);
  ASSERT_FALSE(holes.empty());
  for (auto h : holes) { EXPECT_EQ(std::popcount(h), 8); }

  const auto w = find_wheel_exhaustive(g);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->hole.cycle.size(), 8u);
  EXPECT_TRUE(check_wheel_witness(g, *w));
  EXPECT_FALSE(find_small_wheel(g));
}

TEST(ExhaustiveWheel, CliqueHasNone) {
  EXPECT_FALSE(find_wheel_exhaustive(complement(make_graph(5, {})), WheelSearch::either));
}

TEST(ExhaustiveWheel, CapRefusal) {
  const Graph g = gen_random(17, 0.5, 1);
  EXPECT_THROW(find_wheel_exhaustive(g), ExhaustiveCapExceeded);
  EXPECT_NO_THROW(find_wheel_exhaustive(g, WheelSearch::wheel, 17));
}

TEST(WheelSearch, WitnessesVerifyIndependently) {
  for (Seed s = 0; s < 400; ++s) {
    const Graph g = gen_random(5 + s % 8, 0.5, s);
    for (const auto& w : {find_small_wheel(g), find_small_antiwheel(g),
                          find_wheel_exhaustive(g, WheelSearch::either)}) {
      if (w) {
        EXPECT_TRUE(check_wheel_witness(g, *w)) << serialize_graph6(g);
      }
    }
  }
}

TEST(WheelSearch, AgreesWithBruteForce) {
  for (Seed s = 0; s < 400; ++s) {
    const Graph g = gen_random(5 + s % 6, 0.3 + 0.1 * static_cast<double>(s % 5), s);
    const auto m = bf::to_matrix(g);
    EXPECT_EQ(find_small_wheel(g).has_value(), bf::has_wheel(m, 6));
    EXPECT_EQ(find_small_antiwheel(g).has_value(), bf::has_wheel(bf::complement_matrix(m), 6));
    EXPECT_EQ(find_wheel_exhaustive(g).has_value(), bf::has_wheel(m, static_cast<int>(g.order())));
  }
}

TEST(WheelSearch, Properties) {
  for (Seed s = 0; s < 300; ++s) {
    const Graph g = gen_random(4 + s % 9, 0.5, s);
    // complement duality
    EXPECT_EQ(find_small_antiwheel(g).has_value(), find_small_wheel(complement(g)).has_value());
    // bounded search finds a subset of what the exhaustive one finds
    if (find_small_wheel(g)) { EXPECT_TRUE(find_wheel_exhaustive(g)); }
    // on at most seven vertices both searches see the same holes that matter
    if (g.order() <= 7) {
      EXPECT_EQ(find_small_wheel(g).has_value(), find_wheel_exhaustive(g).has_value());
    }
  }
}

TEST(Patterns, CatalogDefinitions) {
  const Graph f1 = pattern_graph(Pattern::F1);
  const Graph f2 = pattern_graph(Pattern::F2);
  EXPECT_TRUE(is_chordless_cycle(f1, VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(f1.degree(4), 3u);
  EXPECT_EQ(f2.degree(4), 4u);
  EXPECT_EQ(pattern_graph(Pattern::coC6), complement(cycle_graph(6)));
  EXPECT_EQ(pattern_graph(Pattern::two_K2).edge_count(), 2u);
  EXPECT_EQ(pattern_graph(Pattern::P5).edge_count(), 4u);
}

TEST(ContainsPattern, Examples) {
  EXPECT_EQ(contains_pattern(cycle_graph(4), Pattern::C4), (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(contains_pattern(path_graph(5), Pattern::two_K2), (VertexSet{0, 1, 3, 4}));
  const Graph split = gen_split(9, 0.5, 4);
  EXPECT_FALSE(contains_pattern(split, Pattern::C5));
  EXPECT_FALSE(contains_pattern(cycle_graph(5), Pattern::C6));
}

TEST(ContainsPattern, WitnessInducesPattern) {
  for (Seed s = 0; s < 100; ++s) {
    const Graph g = gen_random(8, 0.5, s);
    for (Pattern p : all_patterns) {
      if (auto vs = contains_pattern(g, p)) {
        EXPECT_TRUE(std::is_sorted(vs->begin(), vs->end()));
        const Graph sub = induced(g, *vs).graph;
        const Graph pat = pattern_graph(p);
        EXPECT_EQ(sub.edge_count(), pat.edge_count());
      }
    }
  }
}

TEST(ContainsPattern, WheelPatternsImplySmallWheel) {
  for (Seed s = 0; s < 200; ++s) {
    const Graph g = gen_random(7, 0.5, s);
    const bool f = contains_pattern(g, Pattern::F1) || contains_pattern(g, Pattern::F2);
    if (f) { EXPECT_TRUE(find_small_wheel(g)); }
  }
}
