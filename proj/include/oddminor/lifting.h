#ifndef ODDMINOR_LIFTING_H_
#define ODDMINOR_LIFTING_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddminor/bcp_partition.h"
#include "oddminor/coloring.h"
#include "oddminor/graph.h"
#include "oddminor/minors.h"
#include "oddminor/quotient.h"
#include "oddminor/report.h"

namespace oddminor {

/// Trees of G obtained by expanding each tree of a quotient expansion, plus
/// the 2-colouring that pieces together their proper colourings.
struct LiftedTrees {
  std::vector<Tree> trees;
  std::map<Vertex, int> color;  // values in {1, 2}
};

/// For each tree T_s of cert_h: a lowest-id-rooted breadth-first spanning
/// tree of G[X_i] for every part i in T_s, joined by the lexicographically
/// least G-edge for every tree edge ij of T_s. Each lifted tree is coloured
/// from its root (lowest id of its lowest part) with colour 1.
/// Throws ContractError unless cert_h passes verify_expansion on q.h.
LiftedTrees lift_trees(const Graph& g, const QuotientGraph& q, const ExpansionCertificate& cert_h);

/// Lifts a K_t-expansion of the quotient to an odd K_t-expansion of G,
/// choosing for every tree pair the monochromatic edge u_r v of the stored
/// witness. Aborts if the result would not verify.
OddExpansionCertificate lift_expansion(const Graph& g, const QuotientGraph& q, const ExpansionCertificate& cert_h);

struct ReductionBudgets {
  ExactColoringBudget coloring;
  MinorSearchBudget minors;
};

/// Everything the pipeline computes for one graph and one t.
struct ReductionReport {
  int t = 0;
  BcpPartition partition;
  VerificationReport partition_check;
  QuotientGraph quotient;
  std::optional<ExpansionCertificate> quotient_expansion;
  std::optional<OddExpansionCertificate> lifted;
  VerificationReport lifted_check;
  std::optional<Coloring> quotient_coloring;  // exact, only when no expansion
  std::optional<Coloring> composed;
  VerificationReport composed_check;

  bool passed() const;
};

/// Partition, quotient, and K_t search in the quotient. A found expansion is
/// lifted and verified as an odd K_t-expansion of G; otherwise the quotient
/// is coloured exactly and the composed colouring of G is verified.
/// Throws ResourceError when a budget is exceeded.
ReductionReport reduction_report(const Graph& g, int t, const ReductionBudgets& budgets = {});

std::string render_report(const ReductionReport& report);

}  // namespace oddminor

#endif  // ODDMINOR_LIFTING_H_
