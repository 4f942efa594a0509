#ifndef ODDMINOR_QUOTIENT_H_
#define ODDMINOR_QUOTIENT_H_

#include <map>
#include <string>
#include <string_view>

#include "oddminor/bcp_partition.h"
#include "oddminor/graph.h"
#include "oddminor/report.h"

namespace oddminor {

/// For an edge {i, j}, i < j, of the quotient: u1 on side A and u2 on side B
/// of part i, v in part j, with u1v and u2v both edges of G.
struct WitnessTriple {
  Vertex u1 = 0;
  Vertex u2 = 0;
  Vertex v = 0;

  auto operator<=>(const WitnessTriple&) const = default;
};

/// Graph H on part indices: {i, j} is an edge iff some edge of G joins
/// part i and part j. Each edge carries one witness triple.
struct QuotientGraph {
  Graph h;
  std::map<Edge, WitnessTriple> witnesses;  // keyed by {i, j} with i < j
  BcpPartition partition;

  /// Witness for the H-edge {i, j} in either orientation.
  const WitnessTriple& witness(int i, int j) const;
};

/// Requires verify_partition(g, p) to pass; otherwise throws StructuralError
/// naming the first failed property. The stored witness for {i, j} is the
/// lexicographically least (v, u1, u2).
QuotientGraph build_quotient(const Graph& g, BcpPartition p);

/// PASS iff q.h equals the contraction of each part of q.partition to a
/// single vertex (loops and parallel edges dropped).
VerificationReport contraction_check(const Graph& g, const QuotientGraph& q);

/// Re-checks every stored witness against G and requires exactly one witness
/// per H-edge.
VerificationReport verify_witnesses(const Graph& g, const QuotientGraph& q);

/// H in edge-list format followed by one "w i j : u1 u2 v" line per edge.
std::string serialize_quotient(const QuotientGraph& q);
/// Reads the serialize_quotient form; the partition is supplied separately
/// because it is not part of the text. Throws ParseError.
QuotientGraph parse_quotient(std::string_view text, BcpPartition partition);

}  // namespace oddminor

#endif  // ODDMINOR_QUOTIENT_H_
