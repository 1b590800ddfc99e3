#include <gtest/gtest.h>

#include "support/brute_force.hpp"
#include "wheelfree/chain.hpp"
#include "wheelfree/generators.hpp"
#include "wheelfree/io.hpp"
#include "wheelfree/oracle.hpp"

using namespace wheelfree;
namespace bf = wheelfree::testing;

using Sizes = std::vector<std::size_t>;

TEST(GenClassC, TwoByTwoIsFourCycle) {
  const Graph g = gen_class_c(2, 2);
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(is_chordless_cycle(g, VertexSet{0, 1, 3, 2}));
}

TEST(GenClassC, CliquesAndCrossEdges) {
  const Graph g = gen_class_c(5, 4);
  EXPECT_TRUE(is_clique(g, VertexSet{0, 1, 2, 3, 4}));
  EXPECT_TRUE(is_clique(g, VertexSet{5, 6, 7, 8}));
  EXPECT_EQ(g.edge_count(), 10u + 6u + 2u);
  EXPECT_TRUE(g.adjacent(0, 5));
  EXPECT_TRUE(g.adjacent(1, 6));
}

TEST(GenSplit, AlwaysSplit) {
  for (Seed s = 0; s < 1000; ++s) {
    const Graph g = gen_split(1 + s % 10, 0.1 + 0.1 * static_cast<double>(s % 9), s);
    ASSERT_TRUE(bf::is_split_brute(g)) << "seed " << s << " " << serialize_graph6(g);
  }
}

TEST(GenChain, StaircaseShape) {
  const Sizes ones{1, 1, 1};
  const Graph g = gen_chain(3, ones, ones);
  // X = {0,1,2}, Y = {3,4,5}: X_i ~ Y_j iff i + j <= 4
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(g.degree(0), 3u);
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.degree(2), 1u);
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_FALSE(g.adjacent(2, 4));
}

TEST(GenClassB, StaircaseIsChain) {
  const Graph g = gen_class_b(2, Sizes{1, 2}, Sizes{2, 1}, 0, 0);
  const auto b = bipartition(g);
  ASSERT_TRUE(b);
  EXPECT_TRUE(is_chain(g, *b));
  EXPECT_FALSE(contains_pattern(g, Pattern::two_K2));
}

TEST(GenClassB, LayoutOfZAndW) {
  const Graph g = gen_class_b(2, Sizes{1, 1}, Sizes{1, 1}, 2, 1);
  EXPECT_EQ(g.order(), 7u);
  EXPECT_EQ(g.neighbors(4), (VertexSet{0, 2}));
  EXPECT_EQ(g.neighbors(5), (VertexSet{0, 2}));
  EXPECT_EQ(g.degree(6), 0u);
}

TEST(GenClassA, Layout) {
  const Graph g = gen_class_a(2, ApexMode::d);
  EXPECT_EQ(g.order(), 7u);
  EXPECT_TRUE(is_chordless_cycle(g, VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(g.neighbors(4), (VertexSet{3, 5, 6}));
  EXPECT_TRUE(g.adjacent(5, 6));
}

TEST(GenRandom, ExtremeProbabilities) {
  EXPECT_EQ(gen_random(20, 0.0, 3).edge_count(), 0u);
  EXPECT_EQ(gen_random(20, 1.0, 3).edge_count(), 190u);
}

TEST(Generators, Deterministic) {
  for (Seed s = 0; s < 20; ++s) {
    EXPECT_EQ(serialize_graph6(gen_random(30, 0.3, s)), serialize_graph6(gen_random(30, 0.3, s)));
    EXPECT_EQ(serialize_graph6(gen_split(30, 0.3, s)), serialize_graph6(gen_split(30, 0.3, s)));
    EXPECT_EQ(random_permutation(30, s), random_permutation(30, s));
  }
  EXPECT_NE(serialize_graph6(gen_random(30, 0.5, 1)), serialize_graph6(gen_random(30, 0.5, 2)));
}

TEST(Generators, PermutationIsBijection) {
  for (Seed s = 0; s < 50; ++s) {
    auto perm = random_permutation(17, s);
    std::sort(perm.begin(), perm.end());
    for (Vertex v = 0; v < 17; ++v) { EXPECT_EQ(perm[v], v); }
  }
}

TEST(Generators, ShufflePreservesDegreeMultiset) {
  const Graph g = gen_random(25, 0.4, 8);
  const Graph h = shuffled(g, 9);
  std::vector<std::size_t> a, b;
  for (Vertex v = 0; v < 25; ++v) {
    a.push_back(g.degree(v));
    b.push_back(h.degree(v));
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
  EXPECT_EQ(g.edge_count(), h.edge_count());
}

TEST(Generators, SeedDerivation) {
  EXPECT_EQ(derive_seed(1, 2), derive_seed(1, 2));
  EXPECT_NE(derive_seed(1, 2), derive_seed(1, 3));
  EXPECT_NE(derive_seed(1, 2), derive_seed(2, 2));
}

TEST(Generators, Errors) {
  EXPECT_THROW(gen_class_a(0, ApexMode::none), std::invalid_argument);
  EXPECT_THROW(gen_class_c(1, 3), std::invalid_argument);
  EXPECT_THROW(gen_chain(2, Sizes{1}, Sizes{1, 1}), std::invalid_argument);
  EXPECT_THROW(gen_chain(2, Sizes{1, 0}, Sizes{1, 1}), std::invalid_argument);
  EXPECT_THROW(gen_chain(0, Sizes{}, Sizes{}), std::invalid_argument);
  EXPECT_THROW(gen_class_b(1, Sizes{1}, Sizes{3}, 0, 0), std::invalid_argument);
  EXPECT_THROW(gen_random(5, 1.5, 0), std::invalid_argument);
  EXPECT_THROW(gen_split(5, -0.1, 0), std::invalid_argument);
}

// generated members of each class have no wheel or antiwheel at all
TEST(Generators, ClassMembersAreFree) {
  for (Seed s = 0; s < 40; ++s) {
    const std::vector<Graph> graphs{
        gen_class_a(1 + s % 3, static_cast<ApexMode>(s % 3)),
        gen_class_b(2, Sizes{1, 1 + s % 2}, Sizes{1 + s % 2, 1}, s % 3, s % 2),
        gen_class_c(2 + s % 3, 2 + s % 2),
        gen_split(2 + s % 10, 0.5, s),
    };
    for (const Graph& g : graphs) {
      EXPECT_FALSE(bf::has_wheel_or_antiwheel(g, static_cast<int>(g.order()))) << serialize_graph6(g);
    }
  }
}
