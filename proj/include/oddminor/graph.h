#ifndef ODDMINOR_GRAPH_H_
#define ODDMINOR_GRAPH_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace oddminor {

using Vertex = int;

/// An unordered pair as written; Graph::edges() always yields u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge normalized() const { return u < v ? *this : Edge{v, u}; }
  auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  static VertexSet range(int n);

  bool contains(Vertex v) const;
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  Vertex front() const { return ids_.front(); }
  Vertex back() const { return ids_.back(); }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<Vertex>& ids() const { return ids_; }

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> ids_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built;
/// neighbor lists are kept in ascending order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Duplicate edges collapse. Throws StructuralError on a self-loop or an
  /// endpoint outside 0..n-1.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const { return num_edges_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

/// The two colour classes of a connected bipartite induced subgraph.
/// Canonical form: the lowest id of the queried set lies in side_a.
struct TwoSides {
  VertexSet side_a;
  VertexSet side_b;

  bool operator==(const TwoSides&) const = default;
};

/// An odd closed walk v0 v1 ... v(k-1) (back to v0), k odd, using only
/// edges inside the queried set. The search returns a simple cycle.
struct OddCycleWitness {
  std::vector<Vertex> cycle;
};

using BipartitionResult = std::variant<TwoSides, OddCycleWitness>;

/// Canonical bipartition of g[s], or an odd cycle inside s. Throws
/// StructuralError when s is empty, out of range, or g[s] is disconnected.
BipartitionResult bipartition_of(const Graph& g, const VertexSet& s);

/// Components of g[s], ordered by their minimum vertex id.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g, const VertexSet& s);

/// Subgraph induced by s, with vertices relabelled 0..|s|-1 in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

std::string to_string(const VertexSet& s, char separator = ' ');

}  // namespace oddminor

#endif  // ODDMINOR_GRAPH_H_
