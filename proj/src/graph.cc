#include "oddminor/graph.h"

#include <algorithm>
#include <deque>
#include <iostream>
#include <sstream>

#include "oddminor/errors.h"
#include "oddminor/report.h"

namespace oddminor {

ParseError::ParseError(Kind kind, int line, const std::string& what)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      kind_(kind),
      line_(line) {}

void panic(std::string_view message) {
  std::cerr << "oddminor: internal invariant violated: " << message << std::endl;
  std::abort();
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& f : other.failures_) failures_.push_back(prefix + f);
}

std::string VerificationReport::to_string() const {
  if (passed()) return "PASS";
  std::string out = "FAIL";
  for (const auto& f : failures_) out += "\n  - " + f;
  return out;
}

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(int n) {
  VertexSet s;
  s.ids_.resize(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) s.ids_[i] = i;
  return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

Graph::Graph(int n) : adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw StructuralError("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw StructuralError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                            " outside vertex range 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw StructuralError("self-loop at vertex " + std::to_string(e.u));
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    num_edges_ += nbrs.size();
  }
  num_edges_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= num_vertices()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

namespace {

std::vector<char> membership(const Graph& g, const VertexSet& s) {
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= g.num_vertices()) {
      throw StructuralError("vertex " + std::to_string(v) + " is not in the graph");
    }
    in[v] = 1;
  }
  return in;
}

}  // namespace

BipartitionResult bipartition_of(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw StructuralError("bipartition of an empty vertex set");
  const auto in = membership(g, s);
  const int n = g.num_vertices();
  std::vector<int> side(n, -1), parent(n, -1), depth(n, 0);

  const Vertex root = s.front();
  side[root] = 0;
  std::deque<Vertex> queue{root};
  std::size_t reached = 1;
  std::vector<Edge> conflicts;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (!in[y]) continue;
      if (side[y] < 0) {
        side[y] = 1 - side[x];
        parent[y] = x;
        depth[y] = depth[x] + 1;
        ++reached;
        queue.push_back(y);
      } else if (side[y] == side[x] && conflicts.empty()) {
        conflicts.push_back({x, y});
      }
    }
  }
  if (reached != s.size()) throw StructuralError("induced subgraph is disconnected");

  if (!conflicts.empty()) {
    // Both tree paths from the conflict edge climb to their lowest common
    // ancestor; equal-parity depths make the resulting cycle odd.
    Vertex x = conflicts.front().u;
    Vertex y = conflicts.front().v;
    std::vector<Vertex> left{x}, right{y};
    while (depth[x] > depth[y]) left.push_back(x = parent[x]);
    while (depth[y] > depth[x]) right.push_back(y = parent[y]);
    while (x != y) {
      left.push_back(x = parent[x]);
      right.push_back(y = parent[y]);
    }
    right.pop_back();
    OddCycleWitness witness;
    witness.cycle.assign(left.rbegin(), left.rend());
    witness.cycle.insert(witness.cycle.end(), right.begin(), right.end());
    return witness;
  }

  std::vector<Vertex> a, b;
  for (Vertex v : s) (side[v] == 0 ? a : b).push_back(v);
  return TwoSides{VertexSet(std::move(a)), VertexSet(std::move(b))};
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s) {
  const auto in = membership(g, s);
  std::vector<char> seen(in.size(), 0);
  std::vector<VertexSet> out;
  for (Vertex start : s) {
    if (seen[start]) continue;
    std::vector<Vertex> comp{start};
    seen[start] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (Vertex y : g.neighbors(comp[k])) {
        if (in[y] && !seen[y]) {
          seen[y] = 1;
          comp.push_back(y);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g, const VertexSet& s) {
  return !s.empty() && connected_components(g, s).size() == 1;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<int> index(static_cast<std::size_t>(g.num_vertices()), -1);
  int k = 0;
  for (Vertex v : s) index[v] = k++;
  std::vector<Edge> edges;
  for (Vertex u : s) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && index[v] >= 0) edges.push_back({index[u], index[v]});
    }
  }
  return Graph(k, edges);
}

std::string to_string(const VertexSet& s, char separator) {
  std::ostringstream os;
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << separator;
    os << v;
    first = false;
  }
  return os.str();
}

}  // namespace oddminor
