#include "oddminor/lifting.h"

#include <sstream>

#include "oddminor/errors.h"

namespace oddminor {

namespace {

/// Lowest-id-rooted breadth-first spanning tree of the connected set g[s].
std::vector<Edge> bfs_spanning_edges(const Graph& g, const VertexSet& s) {
  std::vector<Edge> edges;
  std::vector<Vertex> queue{s.front()};
  std::vector<char> seen(g.num_vertices(), 0);
  seen[s.front()] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (Vertex y : g.neighbors(queue[k])) {
      if (!seen[y] && s.contains(y)) {
        seen[y] = 1;
        edges.push_back(Edge{queue[k], y}.normalized());
        queue.push_back(y);
      }
    }
  }
  if (queue.size() != s.size()) panic("part of a verified partition is disconnected");
  return edges;
}

Edge least_cross_edge(const Graph& g, const VertexSet& from, const VertexSet& to) {
  for (Vertex x : from) {
    for (Vertex y : g.neighbors(x)) {
      if (to.contains(y)) return Edge{x, y};
    }
  }
  panic("adjacent quotient vertices without a joining edge in G");
}

}  // namespace

LiftedTrees lift_trees(const Graph& g, const QuotientGraph& q, const ExpansionCertificate& cert_h) {
  const auto check = verify_expansion(q.h, cert_h);
  if (!check.passed()) throw ContractError("quotient expansion fails verification: " + check.failures().front());

  LiftedTrees out;
  for (const Tree& tree_h : cert_h.trees) {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    for (int i : tree_h.vertices) {
      const VertexSet& part = q.partition.parts[i].members;
      vertices.insert(vertices.end(), part.begin(), part.end());
      const auto inner = bfs_spanning_edges(g, part);
      edges.insert(edges.end(), inner.begin(), inner.end());
    }
    for (const Edge& ij : tree_h.edges) {
      const Edge e = ij.normalized();
      edges.push_back(
          least_cross_edge(g, q.partition.parts[e.u].members, q.partition.parts[e.v].members).normalized());
    }

    Tree tree{VertexSet(vertices), std::move(edges)};
    // Colour by walking the tree from the lowest vertex of its lowest part.
    std::map<Vertex, std::vector<Vertex>> adjacency;
    for (const Edge& e : tree.edges) {
      adjacency[e.u].push_back(e.v);
      adjacency[e.v].push_back(e.u);
    }
    const Vertex root = q.partition.parts[tree_h.vertices.front()].members.front();
    out.color[root] = 1;
    std::vector<Vertex> queue{root};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (Vertex y : adjacency[queue[k]]) {
        if (out.color.emplace(y, 3 - out.color[queue[k]]).second) queue.push_back(y);
      }
    }
    if (queue.size() != tree.vertices.size()) panic("lifted tree is not spanning");
    out.trees.push_back(std::move(tree));
  }
  return out;
}

OddExpansionCertificate lift_expansion(const Graph& g, const QuotientGraph& q, const ExpansionCertificate& cert_h) {
  LiftedTrees lifted = lift_trees(g, q, cert_h);

  OddExpansionCertificate cert;
  for (const auto& [key, e_h] : cert_h.connectors) {
    const auto [s, s2] = key;
    const bool lower_in_s = std::min(e_h.u, e_h.v) == (cert_h.trees[s].vertices.contains(e_h.u) ? e_h.u : e_h.v);
    const WitnessTriple& w = q.witness(e_h.u, e_h.v);
    const int c1 = lifted.color.at(w.u1);
    const int c2 = lifted.color.at(w.u2);
    if (c1 == c2) panic("witness vertices on opposite sides of a part share a tree colour");
    const int cv = lifted.color.at(w.v);
    const Vertex ur = c1 == cv ? w.u1 : w.u2;
    cert.base.connectors.emplace(key, lower_in_s ? Edge{ur, w.v} : Edge{w.v, ur});
  }
  cert.base.trees = std::move(lifted.trees);
  cert.parity = std::move(lifted.color);

  const auto check = verify_odd_expansion(g, cert);
  if (!check.passed()) panic("lifted certificate fails verification: " + check.to_string());
  return cert;
}

bool ReductionReport::passed() const {
  if (!partition_check.passed()) return false;
  if (lifted) return lifted_check.passed();
  return composed && composed_check.passed();
}

ReductionReport reduction_report(const Graph& g, int t, const ReductionBudgets& budgets) {
  ReductionReport r;
  r.t = t;
  r.partition = compute_partition(g);
  r.partition_check = verify_partition(g, r.partition);
  r.quotient = build_quotient(g, r.partition);
  r.quotient_expansion = find_expansion(r.quotient.h, t, budgets.minors);
  if (r.quotient_expansion) {
    r.lifted = lift_expansion(g, r.quotient, *r.quotient_expansion);
    r.lifted_check = verify_odd_expansion(g, *r.lifted);
  } else {
    r.quotient_coloring = color_exact(r.quotient.h, budgets.coloring);
    r.composed = compose_coloring(r.quotient, *r.quotient_coloring);
    r.composed_check = verify_coloring(g, *r.composed);
  }
  return r;
}

std::string render_report(const ReductionReport& r) {
  std::ostringstream os;
  const std::string kt = "K" + std::to_string(r.t);
  os << "partition: " << r.partition.size() << " parts, " << r.partition_check.to_string() << '\n'
     << serialize_partition(r.partition) << "quotient:\n"
     << serialize_quotient(r.quotient);
  if (r.quotient_expansion) {
    os << kt << "-expansion in H: found\n"
       << serialize_certificate(*r.quotient_expansion) << "lifted odd " << kt << "-expansion in G: "
       << r.lifted_check.to_string() << '\n'
       << serialize_certificate(*r.lifted);
  } else {
    os << kt << "-expansion in H: not found (H is " << kt << "-expansion-free)\n"
       << "chi(H): " << r.quotient_coloring->palette << '\n'
       << "composed palette: " << r.composed->palette << " (bound 2*chi(H) = " << 2 * r.quotient_coloring->palette
       << ")\n"
       << "composed colouring: " << r.composed_check.to_string() << '\n'
       << serialize_coloring(*r.composed);
  }
  return os.str();
}

}  // namespace oddminor
