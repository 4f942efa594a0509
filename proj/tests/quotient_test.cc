#include "gtest/gtest.h"
#include "oddminor/errors.h"
#include "oddminor/generate.h"
#include "oddminor/quotient.h"
#include "corpus.h"
#include "oracles.h"

namespace oddminor {
namespace {

QuotientGraph quotient_of(const Graph& g) { return build_quotient(g, compute_partition(g)); }

TEST(BuildQuotientTest, FiveCycle) {
  const Graph c5 = generate(GraphSpec::cycle(5));
  const QuotientGraph q = quotient_of(c5);
  EXPECT_EQ(q.h, generate(GraphSpec::complete(2)));
  ASSERT_EQ(q.witnesses.size(), 1u);
  EXPECT_EQ(q.witness(0, 1), (WitnessTriple{2, 4, 3}));
  EXPECT_EQ(q.witness(1, 0), (WitnessTriple{2, 4, 3}));
}

TEST(BuildQuotientTest, CompleteFive) {
  const QuotientGraph q = quotient_of(generate(GraphSpec::complete(5)));
  EXPECT_EQ(q.h, generate(GraphSpec::complete(3)));
  EXPECT_EQ(q.witness(0, 1), (WitnessTriple{0, 1, 2}));
  EXPECT_EQ(q.witness(0, 2), (WitnessTriple{0, 1, 4}));
  EXPECT_EQ(q.witness(1, 2), (WitnessTriple{2, 3, 4}));
}

TEST(BuildQuotientTest, EdgelessGraph) {
  const QuotientGraph q = quotient_of(Graph(3));
  EXPECT_EQ(q.h, Graph(3));
  EXPECT_TRUE(q.witnesses.empty());
  EXPECT_THROW(q.witness(0, 1), ContractError);
}

TEST(BuildQuotientTest, RejectsUnverifiedPartition) {
  const Graph c4 = generate(GraphSpec::cycle(4));
  try {
    build_quotient(c4, make_partition(c4, {{0, 1}, {2, 3}}));
    FAIL() << "expected StructuralError";
  } catch (const StructuralError& e) {
    EXPECT_NE(std::string(e.what()).find("parts 0 and 1"), std::string::npos);
  }
}

TEST(ContractionCheckTest, Examples) {
  const Graph c5 = generate(GraphSpec::cycle(5));
  QuotientGraph q = quotient_of(c5);
  EXPECT_TRUE(contraction_check(c5, q).passed());
  q.h = Graph(2);
  EXPECT_FALSE(contraction_check(c5, q).passed());
  const Graph k5 = generate(GraphSpec::complete(5));
  EXPECT_TRUE(contraction_check(k5, quotient_of(k5)).passed());
}

TEST(QuotientPropertyTest, CorpusWitnessesAndContraction) {
  for (const auto& [name, g] : testing::full_corpus()) {
    const QuotientGraph q = quotient_of(g);
    EXPECT_EQ(static_cast<std::size_t>(q.h.num_vertices()), q.partition.size()) << name;
    EXPECT_EQ(q.witnesses.size(), q.h.num_edges()) << name;
    EXPECT_TRUE(contraction_check(g, q).passed()) << name;
    EXPECT_TRUE(verify_witnesses(g, q).passed()) << name;
    // Re-check each stored triple against G by hand.
    for (const auto& [ij, w] : q.witnesses) {
      const Part& lo = q.partition.parts[ij.u];
      EXPECT_TRUE(lo.sides.side_a.contains(w.u1)) << name;
      EXPECT_TRUE(lo.sides.side_b.contains(w.u2)) << name;
      EXPECT_TRUE(q.partition.parts[ij.v].members.contains(w.v)) << name;
      EXPECT_TRUE(g.has_edge(w.u1, w.v) && g.has_edge(w.u2, w.v)) << name;
    }
  }
}

TEST(QuotientPropertyTest, BipartiteGraphsHaveEdgelessQuotient) {
  for (const auto& [name, g] : testing::full_corpus()) {
    if (g.num_vertices() > 12 || !oracle::bipartite(g, VertexSet::range(g.num_vertices()).ids())) continue;
    const QuotientGraph q = quotient_of(g);
    EXPECT_EQ(q.h.num_edges(), 0u) << name;
    EXPECT_EQ(q.partition.size(), connected_components(g, VertexSet::range(g.num_vertices())).size()) << name;
  }
}

TEST(QuotientTextTest, RoundTrip) {
  const Graph k5 = generate(GraphSpec::complete(5));
  const QuotientGraph q = quotient_of(k5);
  const std::string text = serialize_quotient(q);
  EXPECT_EQ(text, "3\n0 1\n0 2\n1 2\nw 0 1 : 0 1 2\nw 0 2 : 0 1 4\nw 1 2 : 2 3 4\n");
  const QuotientGraph back = parse_quotient(text, q.partition);
  EXPECT_EQ(back.h, q.h);
  EXPECT_EQ(back.witnesses, q.witnesses);
  EXPECT_THROW(parse_quotient("3\n0 1\nw 0 1 : 0 1\n", q.partition), ParseError);
  EXPECT_THROW(parse_quotient("2\n0 1\n", q.partition), ParseError);
  try {
    parse_quotient("3\nw 0 1 : 0 1 2\n\n0 9\n", q.partition);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(QuotientTextTest, CorruptedWitnessIsCaught) {
  const Graph k5 = generate(GraphSpec::complete(5));
  QuotientGraph q = quotient_of(k5);
  q.witnesses[{0, 1}] = {0, 2, 1};
  EXPECT_FALSE(verify_witnesses(k5, q).passed());
}

}  // namespace
}  // namespace oddminor
