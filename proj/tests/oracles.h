#ifndef ODDMINOR_TESTS_ORACLES_H_
#define ODDMINOR_TESTS_ORACLES_H_

// Brute-force reference answers for small graphs. Nothing here calls into
// the search, partition, or colouring code under test.

#include <vector>

#include "oddminor/graph.h"

namespace oddminor::oracle {

/// Plain adjacency-matrix copy of a graph.
std::vector<std::vector<bool>> matrix(const Graph& g);

/// Connectivity of g[s] by repeated relaxation (no queue, no library call).
bool connected(const Graph& g, const std::vector<Vertex>& s);

/// g[s] has a proper 2-colouring, by trying all 2^|s| assignments.
bool bipartite(const Graph& g, const std::vector<Vertex>& s);

/// Smallest k admitting a proper k-colouring, by trying all k^n maps.
int chromatic_number(const Graph& g);

/// True iff no S with part < S <= available (strict superset) induces a
/// connected bipartite subgraph.
bool maximal_bipartite_connected(const Graph& g, const std::vector<Vertex>& part,
                                 const std::vector<Vertex>& available);

/// Some v in `hi` has neighbours on both sides of `lo`, by scanning all
/// triples (u1, u2, v).
bool witness_exists(const Graph& g, const std::vector<Vertex>& lo_a, const std::vector<Vertex>& lo_b,
                    const std::vector<Vertex>& hi);

/// K_t minor by trying every map vertex -> {unused, 1..t}.
bool has_minor(const Graph& g, int t);

/// Odd K_t minor by trying every map vertex -> {unused} + {1..t} x {1, 2}:
/// each class must be connected through bichromatic edges and every pair
/// of classes must share a monochromatic edge.
bool has_odd_minor(const Graph& g, int t);

}  // namespace oddminor::oracle

#endif  // ODDMINOR_TESTS_ORACLES_H_
