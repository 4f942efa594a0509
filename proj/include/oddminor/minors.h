#ifndef ODDMINOR_MINORS_H_
#define ODDMINOR_MINORS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "oddminor/graph.h"
#include "oddminor/report.h"

namespace oddminor {

/// A tree given by its vertex set and edge set.
struct Tree {
  VertexSet vertices;
  std::vector<Edge> edges;

  bool operator==(const Tree&) const = default;
};

/// Vertex-disjoint trees T_0..T_{t-1} and, for every pair s < s', one edge
/// with its first endpoint in T_s and its second in T_{s'}.
struct ExpansionCertificate {
  std::vector<Tree> trees;
  std::map<std::pair<int, int>, Edge> connectors;

  int t() const { return static_cast<int>(trees.size()); }
  bool operator==(const ExpansionCertificate&) const = default;
};

/// An expansion plus a colouring c: tree vertices -> {1, 2} under which
/// every tree edge is bichromatic and every connector monochromatic.
struct OddExpansionCertificate {
  ExpansionCertificate base;
  std::map<Vertex, int> parity;

  int t() const { return base.t(); }
  bool operator==(const OddExpansionCertificate&) const = default;
};

VerificationReport verify_expansion(const Graph& g, const ExpansionCertificate& cert);
VerificationReport verify_odd_expansion(const Graph& g, const OddExpansionCertificate& cert);

/// Cap on the branch-set enumeration, measured as (t + 1)^n.
struct MinorSearchBudget {
  std::uint64_t max_assignments = 100'000'000;
};

/// Exhaustive search for a K_t-expansion. Branch sets are enumerated as maps
/// vertex -> {unused, 0..t-1} in lexicographic order (unused first), with
/// labels introduced in increasing order. The first assignment whose classes
/// are connected and pairwise adjacent is returned with lowest-id-rooted
/// breadth-first trees and the lexicographically least connector per pair.
/// Throws ConfigError for t < 1 and ResourceError when (t + 1)^n exceeds
/// the budget.
std::optional<ExpansionCertificate> find_expansion(const Graph& g, int t, const MinorSearchBudget& budget = {});

/// As find_expansion, and for each admissible assignment searches the
/// colourings of the branch sets: every colouring under which each branch
/// set is connected through bichromatic edges, up to one global flip. This
/// covers every spanning tree of every branch set, so NotFound is exact.
std::optional<OddExpansionCertificate> find_odd_expansion(const Graph& g, int t,
                                                          const MinorSearchBudget& budget = {});

/// Text form, documented in docs/formats.md:
///   expansion <t> | odd-expansion <t>
///   T <s>: <vertices> / <u>-<v> ...
///   conn <s> <s'> : <u> <v>
///   parity <v> : <1|2>
std::string serialize_certificate(const ExpansionCertificate& cert);
std::string serialize_certificate(const OddExpansionCertificate& cert);

using AnyCertificate = std::variant<ExpansionCertificate, OddExpansionCertificate>;
/// Throws ParseError.
AnyCertificate parse_certificate(std::string_view text);

}  // namespace oddminor

#endif  // ODDMINOR_MINORS_H_
