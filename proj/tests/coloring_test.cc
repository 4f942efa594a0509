#include <random>

#include "gtest/gtest.h"
#include "oddminor/coloring.h"
#include "oddminor/errors.h"
#include "oddminor/generate.h"
#include "corpus.h"
#include "oracles.h"

namespace oddminor {
namespace {

QuotientGraph quotient_of(const Graph& g) { return build_quotient(g, compute_partition(g)); }

TEST(ColorExactTest, Examples) {
  EXPECT_EQ(color_exact(generate(GraphSpec::complete(4))).palette, 4);
  EXPECT_EQ(color_exact(generate(GraphSpec::cycle(5))).palette, 3);
  EXPECT_EQ(color_exact(Graph(0)).palette, 0);
}

TEST(ColorExactTest, PetersenNeedsThree) {
  const Graph petersen = generate(GraphSpec::petersen());
  EXPECT_EQ(oracle::chromatic_number(petersen), 3);
  const Coloring c = color_exact(petersen);
  EXPECT_EQ(c.palette, 3);
  EXPECT_TRUE(verify_coloring(petersen, c).passed());
}

TEST(ColorExactTest, MatchesBruteForceUpToSevenVertices) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const double p = static_cast<double>(rng() % 101) / 100.0;
    const Graph g = generate(GraphSpec::gnp(n, p), rng());
    const Coloring c = color_exact(g);
    EXPECT_TRUE(verify_coloring(g, c).passed());
    EXPECT_EQ(c.palette, oracle::chromatic_number(g)) << "trial " << trial;
  }
}

TEST(ColorExactTest, NodeBudgetIsEnforced) {
  // C5: clique bound 2 and greedy 3, so the search must run.
  ExactColoringBudget budget;
  budget.max_nodes = 1;
  EXPECT_THROW(color_exact(generate(GraphSpec::cycle(5)), budget), ResourceError);
}

TEST(ColorHeuristicTest, Examples) {
  EXPECT_EQ(color_heuristic(Graph(5)).palette, 1);
  EXPECT_EQ(color_heuristic(generate(GraphSpec::complete(4))).palette, 4);
  const Coloring c5 = color_heuristic(generate(GraphSpec::cycle(5)));
  EXPECT_EQ(c5.colors, (std::vector<int>{0, 1, 0, 1, 2}));
  EXPECT_EQ(c5.palette, 3);
}

TEST(ColorHeuristicTest, ProperAndNeverBelowChi) {
  for (const auto& [name, g] : testing::full_corpus()) {
    const Coloring c = color_heuristic(g);
    EXPECT_TRUE(verify_coloring(g, c).passed()) << name;
    if (g.num_vertices() <= 12) EXPECT_GE(c.palette, color_exact(g).palette) << name;
  }
}

TEST(ComposeColoringTest, FiveCycle) {
  const Graph c5 = generate(GraphSpec::cycle(5));
  const QuotientGraph q = quotient_of(c5);
  const Coloring c_h = color_exact(q.h);
  ASSERT_EQ(c_h.palette, 2);
  const Coloring c = compose_coloring(q, c_h);
  EXPECT_LE(c.palette, 4);
  EXPECT_TRUE(verify_coloring(c5, c).passed());
}

TEST(ComposeColoringTest, EdgelessCompactsToOneColour) {
  const Graph g(3);
  const QuotientGraph q = quotient_of(g);
  const Coloring c = compose_coloring(q, color_exact(q.h));
  EXPECT_EQ(c.colors, (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(c.palette, 1);
}

TEST(ComposeColoringTest, CompleteFive) {
  const Graph k5 = generate(GraphSpec::complete(5));
  const QuotientGraph q = quotient_of(k5);
  const Coloring c_h = color_exact(q.h);
  ASSERT_EQ(c_h.palette, 3);
  const Coloring c = compose_coloring(q, c_h);
  EXPECT_GE(c.palette, 5);
  EXPECT_LE(c.palette, 6);
  EXPECT_TRUE(verify_coloring(k5, c).passed());
}

TEST(ComposeColoringTest, FlatteningRule) {
  const Graph k5 = generate(GraphSpec::complete(5));
  const QuotientGraph q = quotient_of(k5);
  // Parts [{0|1}, {2|3}, {4}] with c_H = (2, 0, 1): raw colours 4,5,0,1,2.
  const Coloring c = compose_coloring(q, Coloring::from_colors({2, 0, 1}));
  EXPECT_EQ(compact(Coloring::from_colors({4, 5, 0, 1, 2})).colors, (std::vector<int>{3, 4, 0, 1, 2}));
  EXPECT_EQ(c.colors, (std::vector<int>{3, 4, 0, 1, 2}));
}

TEST(ComposeColoringTest, RejectsImproperQuotientColouring) {
  const QuotientGraph q = quotient_of(generate(GraphSpec::complete(5)));
  EXPECT_THROW(compose_coloring(q, Coloring::from_colors({0, 0, 1})), ContractError);
  EXPECT_THROW(compose_coloring(q, Coloring::from_colors({0, 1})), ContractError);
}

TEST(ComposeColoringTest, CorpusBoundAndProperness) {
  for (const auto& [name, g] : testing::full_corpus()) {
    const QuotientGraph q = quotient_of(g);
    const Coloring c_h = q.h.num_vertices() <= 16 ? color_exact(q.h) : color_heuristic(q.h);
    const Coloring c = compose_coloring(q, c_h);
    EXPECT_TRUE(verify_coloring(g, c).passed()) << name;
    EXPECT_LE(c.palette, 2 * c_h.palette) << name;
    // Per-part colourings are the stored sides.
    for (const Part& part : q.partition.parts) {
      for (Vertex a : part.sides.side_a)
        for (Vertex b : part.sides.side_b) EXPECT_NE(c.colors[a], c.colors[b]) << name;
    }
    if (g.num_vertices() <= 12) EXPECT_LE(color_exact(g).palette, 2 * color_exact(q.h).palette) << name;
  }
}

TEST(VerifyColoringTest, Examples) {
  const Graph k4 = generate(GraphSpec::complete(4));
  EXPECT_TRUE(verify_coloring(k4, color_exact(k4)).passed());
  const auto report = verify_coloring(k4, Coloring::from_colors({0, 0, 0, 0}));
  EXPECT_EQ(report.failures().size(), 6u);
  EXPECT_FALSE(verify_coloring(k4, Coloring::from_colors({0, 1, 2})).passed());
  EXPECT_FALSE(verify_coloring(k4, Coloring::from_colors({0, 1, -1, 3})).passed());
  Coloring wrong_palette = Coloring::from_colors({0, 1, 2, 3});
  wrong_palette.palette = 2;
  EXPECT_FALSE(verify_coloring(k4, wrong_palette).passed());
}

TEST(ColoringTextTest, RoundTripAndErrors) {
  const Coloring c = color_exact(generate(GraphSpec::petersen()));
  EXPECT_EQ(parse_coloring(serialize_coloring(c)), c);
  EXPECT_EQ(serialize_coloring(Coloring::from_colors({0, 1})), "palette 2\n0 0\n1 1\n");
  EXPECT_THROW(parse_coloring("0 0\n"), ParseError);
  EXPECT_THROW(parse_coloring("palette 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_coloring("palette 1\n0 -1\n"), ParseError);
}

}  // namespace
}  // namespace oddminor
