#include "gtest/gtest.h"
#include "oddminor/errors.h"
#include "oddminor/generate.h"
#include "oddminor/lifting.h"
#include "corpus.h"

namespace oddminor {
namespace {

QuotientGraph quotient_of(const Graph& g) { return build_quotient(g, compute_partition(g)); }

ExpansionCertificate singletons(int t) {
  ExpansionCertificate cert;
  for (int s = 0; s < t; ++s) cert.trees.push_back({{s}, {}});
  for (int s = 0; s < t; ++s)
    for (int r = s + 1; r < t; ++r) cert.connectors[{s, r}] = {s, r};
  return cert;
}

/// c restricted to each part reproduces its stored sides, up to a flip.
void expect_side_coherent(const QuotientGraph& q, const ExpansionCertificate& cert_h, const LiftedTrees& lifted) {
  for (const Tree& tree_h : cert_h.trees) {
    for (int i : tree_h.vertices) {
      const TwoSides& sides = q.partition.parts[i].sides;
      const int a = lifted.color.at(sides.side_a.front());
      for (Vertex x : sides.side_a) EXPECT_EQ(lifted.color.at(x), a) << "part " << i;
      for (Vertex x : sides.side_b) EXPECT_EQ(lifted.color.at(x), 3 - a) << "part " << i;
    }
  }
}

TEST(LiftExpansionTest, CompleteFive) {
  const Graph k5 = generate(GraphSpec::complete(5));
  const QuotientGraph q = quotient_of(k5);
  const OddExpansionCertificate cert = lift_expansion(k5, q, singletons(3));
  ASSERT_EQ(cert.t(), 3);
  EXPECT_EQ(cert.base.trees[0].vertices, (VertexSet{0, 1}));
  EXPECT_EQ(cert.base.trees[1].vertices, (VertexSet{2, 3}));
  EXPECT_EQ(cert.base.trees[2].vertices, (VertexSet{4}));
  EXPECT_EQ(cert.base.connectors.size(), 3u);
  EXPECT_TRUE(verify_odd_expansion(k5, cert).passed());
}

TEST(LiftExpansionTest, FiveCycle) {
  const Graph c5 = generate(GraphSpec::cycle(5));
  const QuotientGraph q = quotient_of(c5);
  const OddExpansionCertificate cert = lift_expansion(c5, q, singletons(2));
  EXPECT_EQ(cert.base.trees[0].vertices, (VertexSet{0, 1, 2, 4}));
  EXPECT_EQ(cert.base.trees[1].vertices, (VertexSet{3}));
  const Edge conn = cert.base.connectors.at({0, 1});
  EXPECT_EQ(conn.v, 3);
  EXPECT_TRUE(conn.u == 2 || conn.u == 4);
  EXPECT_EQ(cert.parity.at(conn.u), cert.parity.at(3));
  EXPECT_EQ(cert.parity.at(0), 1);
  EXPECT_TRUE(verify_odd_expansion(c5, cert).passed());
}

TEST(LiftExpansionTest, HigherPartInFirstTree) {
  // Tree labels reversed against part order: connector must still run from
  // T_0 to T_1.
  const Graph k5 = generate(GraphSpec::complete(5));
  const QuotientGraph q = quotient_of(k5);
  ExpansionCertificate cert_h;
  cert_h.trees = {{{2}, {}}, {{1}, {}}, {{0}, {}}};
  cert_h.connectors = {{{0, 1}, {2, 1}}, {{0, 2}, {2, 0}}, {{1, 2}, {1, 0}}};
  ASSERT_TRUE(verify_expansion(q.h, cert_h).passed());
  const OddExpansionCertificate cert = lift_expansion(k5, q, cert_h);
  EXPECT_TRUE(verify_odd_expansion(k5, cert).passed()) << verify_odd_expansion(k5, cert).to_string();
  EXPECT_EQ(cert.base.trees[0].vertices, (VertexSet{4}));
}

TEST(LiftExpansionTest, RejectsInvalidQuotientCertificate) {
  const Graph k5 = generate(GraphSpec::complete(5));
  const QuotientGraph q = quotient_of(k5);
  ExpansionCertificate bad = singletons(3);
  bad.connectors.erase({1, 2});
  EXPECT_THROW(lift_expansion(k5, q, bad), ContractError);
  EXPECT_THROW(lift_expansion(k5, q, singletons(4)), ContractError);
  const Graph c4 = generate(GraphSpec::cycle(4));
  EXPECT_THROW(lift_expansion(c4, quotient_of(c4), singletons(2)), ContractError);
}

TEST(LiftExpansionTest, CorpusSoundnessAndStructure) {
  int lifted_count = 0;
  for (const auto& [name, g] : testing::full_corpus()) {
    if (g.num_vertices() > 9) continue;
    const QuotientGraph q = quotient_of(g);
    for (int t = 2; t <= 4; ++t) {
      const auto cert_h = find_expansion(q.h, t);
      if (!cert_h) continue;
      SCOPED_TRACE(name + " t=" + std::to_string(t));
      const LiftedTrees trees = lift_trees(g, q, *cert_h);
      expect_side_coherent(q, *cert_h, trees);
      std::vector<int> owner(g.num_vertices(), -1);
      for (std::size_t s = 0; s < trees.trees.size(); ++s) {
        const Tree& tree = trees.trees[s];
        EXPECT_EQ(tree.edges.size() + 1, tree.vertices.size());
        for (Vertex x : tree.vertices) {
          EXPECT_EQ(owner[x], -1);
          owner[x] = static_cast<int>(s);
        }
        for (const Edge& e : tree.edges) {
          EXPECT_TRUE(g.has_edge(e.u, e.v));
          EXPECT_NE(trees.color.at(e.u), trees.color.at(e.v));
        }
        // Restricted to a part, the tree edges span it.
        for (int i : cert_h->trees[s].vertices) {
          const VertexSet& part = q.partition.parts[i].members;
          std::size_t inside = 0;
          for (const Edge& e : tree.edges) inside += part.contains(e.u) && part.contains(e.v);
          EXPECT_EQ(inside + 1, part.size());
        }
      }
      const OddExpansionCertificate cert = lift_expansion(g, q, *cert_h);
      EXPECT_TRUE(verify_odd_expansion(g, cert).passed());
      ++lifted_count;
    }
  }
  EXPECT_GT(lifted_count, 50);
}

TEST(ReductionReportTest, CompleteFive) {
  const ReductionReport r = reduction_report(generate(GraphSpec::complete(5)), 3);
  ASSERT_TRUE(r.lifted.has_value());
  EXPECT_TRUE(r.lifted_check.passed());
  EXPECT_TRUE(r.passed());
  EXPECT_NE(render_report(r).find("lifted odd K3-expansion in G: PASS"), std::string::npos);
}

TEST(ReductionReportTest, FourCycle) {
  const ReductionReport r = reduction_report(generate(GraphSpec::cycle(4)), 3);
  EXPECT_EQ(r.quotient.h.num_vertices(), 1);
  EXPECT_FALSE(r.quotient_expansion.has_value());
  ASSERT_TRUE(r.composed.has_value());
  EXPECT_LE(r.composed->palette, 2);
  EXPECT_TRUE(r.passed());
}

TEST(ReductionReportTest, FiveCycle) {
  const ReductionReport r = reduction_report(generate(GraphSpec::cycle(5)), 3);
  EXPECT_EQ(r.quotient.h, generate(GraphSpec::complete(2)));
  EXPECT_FALSE(r.quotient_expansion.has_value());
  ASSERT_TRUE(r.quotient_coloring.has_value());
  EXPECT_EQ(r.quotient_coloring->palette, 2);
  ASSERT_TRUE(r.composed.has_value());
  EXPECT_LE(r.composed->palette, 4);
  EXPECT_GE(r.composed->palette, color_exact(generate(GraphSpec::cycle(5))).palette);
  EXPECT_TRUE(r.passed());
}

TEST(ReductionReportTest, BudgetOverrun) {
  ReductionBudgets budgets;
  budgets.minors.max_assignments = 2;
  EXPECT_THROW(reduction_report(generate(GraphSpec::complete(5)), 3, budgets), ResourceError);
}

}  // namespace
}  // namespace oddminor
