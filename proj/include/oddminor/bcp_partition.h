#ifndef ODDMINOR_BCP_PARTITION_H_
#define ODDMINOR_BCP_PARTITION_H_

#include <string>
#include <string_view>
#include <vector>

#include "oddminor/graph.h"
#include "oddminor/report.h"

namespace oddminor {

/// One part X_i of the partition together with its bipartition {A; B}.
struct Part {
  VertexSet members;
  TwoSides sides;

  bool operator==(const Part&) const = default;
};

/// Ordered partition of V(G) into parts that each induce a connected
/// bipartite subgraph. Between two parts i < j joined by an edge there is a
/// vertex of part j adjacent to both sides of part i.
struct BcpPartition {
  std::vector<Part> parts;

  std::size_t size() const { return parts.size(); }
  bool operator==(const BcpPartition&) const = default;
};

/// Extracts parts one at a time. Each part is seeded at the lowest unused
/// vertex and grown in rounds: a round snapshots the unused vertices adjacent
/// to the part, visits them in ascending id, and absorbs each one whose
/// neighbours inside the part all lie on one side (it joins the other side).
/// Rounds repeat until one absorbs nothing; the part is then inclusion-wise
/// maximal among bipartite connected subsets of the unused vertices.
BcpPartition compute_partition(const Graph& g);

/// Builds a partition from member lists, deriving each part's canonical
/// sides. Throws StructuralError if a part is empty, disconnected, or not
/// bipartite. Disjointness and coverage are left to verify_partition.
BcpPartition make_partition(const Graph& g, const std::vector<VertexSet>& members);

/// Checks coverage and disjointness, each part's connectivity and stored
/// bipartition, and the witness-triple property for every pair i < j of
/// parts joined by at least one edge.
VerificationReport verify_partition(const Graph& g, const BcpPartition& p);

/// part_of[v] = index of the part containing v, -1 if uncovered.
std::vector<int> part_index(const BcpPartition& p, int num_vertices);

/// One line per part: "i: A=0,2 B=1,4".
std::string serialize_partition(const BcpPartition& p);
/// Inverse of serialize_partition. Throws ParseError.
BcpPartition parse_partition(std::string_view text);

}  // namespace oddminor

#endif  // ODDMINOR_BCP_PARTITION_H_
