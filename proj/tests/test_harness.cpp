#include <gtest/gtest.h>

#include <set>

#include "wheelfree/harness.hpp"

using namespace wheelfree;

TEST(Enumerate, Counts) {
  EXPECT_EQ(labeled_count(0), 1u);
  EXPECT_EQ(labeled_count(1), 1u);
  EXPECT_EQ(labeled_count(3), 8u);
  EXPECT_EQ(labeled_count(4), 64u);
  EXPECT_EQ(labeled_count(7), 1u << 21);
  EXPECT_THROW(labeled_count(8), std::invalid_argument);

  std::size_t seen = 0;
  enumerate_labeled(4, [&](const Graph& g) {
    EXPECT_EQ(g.order(), 4u);
    ++seen;
  });
  EXPECT_EQ(seen, 64u);
}

TEST(Enumerate, MaskBitOrder) {
  EXPECT_EQ(labeled_graph(3, 0b001), make_graph(3, {{0, 1}}));
  EXPECT_EQ(labeled_graph(3, 0b010), make_graph(3, {{0, 2}}));
  EXPECT_EQ(labeled_graph(3, 0b100), make_graph(3, {{1, 2}}));
  EXPECT_EQ(labeled_graph(4, 0b001000), make_graph(4, {{0, 3}}));
}

TEST(Enumerate, AllGraphsDistinct) {
  std::set<std::string> codes;
  enumerate_labeled(5, [&](const Graph& g) { codes.insert(serialize_graph6(g)); });
  EXPECT_EQ(codes.size(), labeled_count(5));
}

TEST(CheckTheorem, Examples) {
  const auto c5 = check_theorem(cycle_graph(5), true);
  EXPECT_FALSE(c5.condition2);
  EXPECT_FALSE(c5.condition3);
  EXPECT_EQ(c5.condition1, false);
  EXPECT_EQ(c5.verdict, "FiveHole");
  EXPECT_TRUE(c5.agree());

  const auto f1 = check_theorem(pattern_graph(Pattern::F1), true);
  EXPECT_TRUE(f1.condition2);
  EXPECT_TRUE(f1.condition3);
  EXPECT_EQ(f1.condition1, true);
  EXPECT_EQ(f1.verdict, "NotFree");
  EXPECT_TRUE(f1.agree());

  const auto co = check_theorem(complement(cycle_graph(6)), false);
  EXPECT_EQ(co.verdict, "SixHole/complement");
  EXPECT_FALSE(co.condition1);
}

TEST(CheckTheorem, CapEnforced) {
  EXPECT_THROW(check_theorem(gen_random(17, 0.5, 0), true), ExhaustiveCapExceeded);
  EXPECT_NO_THROW(check_theorem(gen_random(17, 0.5, 0), false));
}

TEST(Report, AgreementDetection) {
  TheoremRecord r;
  r.condition2 = true;
  r.condition3 = false;
  r.verdict = "Split";
  AgreementReport rep;
  rep.add(cycle_graph(4), r);
  EXPECT_FALSE(rep.ok());
  ASSERT_EQ(rep.disagreements.size(), 1u);
  EXPECT_EQ(rep.disagreements[0].graph6, serialize_graph6(cycle_graph(4)));

  TheoremRecord bad_cert;
  bad_cert.verdict = "Split";
  bad_cert.certificate_ok = false;
  EXPECT_FALSE(bad_cert.agree());
}

TEST(RunExhaustive, UpToSix) {
  const auto rep = run_exhaustive(6);
  std::uint64_t expected = 0;
  for (std::size_t n = 0; n <= 6; ++n) expected += labeled_count(n);
  EXPECT_EQ(rep.graphs_checked, expected);
  EXPECT_EQ(rep.condition1_checked, expected);
  EXPECT_EQ(rep.certificate_failures, 0u);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.verdicts.at("FiveHole"), 12u);  // 4!/2 labeled 5-cycles
  EXPECT_THROW(run_exhaustive(8), std::invalid_argument);
}

TEST(RunSampled, ZeroCountAndDeterminism) {
  const auto empty = run_sampled(9, 0, 0.5, 1);
  EXPECT_EQ(empty.graphs_checked, 0u);
  EXPECT_TRUE(empty.ok());

  const auto one = run_sampled(9, 200, 0.5, 42, 1);
  const auto three = run_sampled(9, 200, 0.5, 42, 3);
  EXPECT_EQ(one, three);
  EXPECT_EQ(one.graphs_checked, 200u);
  EXPECT_EQ(one.condition1_checked, 200u);
  EXPECT_TRUE(one.ok());

  const auto big = run_sampled(18, 5, 0.5, 1);
  EXPECT_EQ(big.condition1_checked, 0u);
}

TEST(RunCorpus, MixedOrders) {
  const std::vector<Graph> graphs{cycle_graph(5), cycle_graph(6), pattern_graph(Pattern::F2), gen_random(20, 0.5, 3)};
  const auto rep = run_corpus(graphs, 2);
  EXPECT_EQ(rep.graphs_checked, 4u);
  EXPECT_EQ(rep.condition1_checked, 3u);
  EXPECT_TRUE(rep.ok());
}
