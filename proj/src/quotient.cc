#include "oddminor/quotient.h"

#include <array>
#include <optional>
#include <set>
#include <sstream>

#include "oddminor/errors.h"
#include "oddminor/graph_io.h"
#include "text_util.h"

namespace oddminor {

const WitnessTriple& QuotientGraph::witness(int i, int j) const {
  const auto it = witnesses.find(Edge{i, j}.normalized());
  if (it == witnesses.end()) {
    throw ContractError("no quotient edge between parts " + std::to_string(i) + " and " + std::to_string(j));
  }
  return it->second;
}

QuotientGraph build_quotient(const Graph& g, BcpPartition p) {
  const auto check = verify_partition(g, p);
  if (!check.passed()) throw StructuralError("partition fails verification: " + check.failures().front());

  const int k = static_cast<int>(p.size());
  const auto owner = part_index(p, g.num_vertices());
  std::set<Edge> cross;
  for (const Edge& e : g.edges()) {
    if (owner[e.u] != owner[e.v]) cross.insert(Edge{owner[e.u], owner[e.v]}.normalized());
  }

  QuotientGraph q;
  q.h = Graph(k, std::vector<Edge>(cross.begin(), cross.end()));
  for (const Edge& ij : cross) {
    const TwoSides& sides = p.parts[ij.u].sides;
    bool found = false;
    for (Vertex v : p.parts[ij.v].members) {
      Vertex u1 = -1, u2 = -1;
      for (Vertex u : g.neighbors(v)) {
        if (u1 < 0 && sides.side_a.contains(u)) u1 = u;
        if (u2 < 0 && sides.side_b.contains(u)) u2 = u;
      }
      if (u1 >= 0 && u2 >= 0) {
        q.witnesses.emplace(ij, WitnessTriple{u1, u2, v});
        found = true;
        break;
      }
    }
    if (!found) panic("verified partition lacks a witness for parts " + std::to_string(ij.u) + "," + std::to_string(ij.v));
  }
  q.partition = std::move(p);
  return q;
}

VerificationReport contraction_check(const Graph& g, const QuotientGraph& q) {
  VerificationReport report;
  const int k = static_cast<int>(q.partition.size());
  if (q.h.num_vertices() != k) {
    report.fail("H has " + std::to_string(q.h.num_vertices()) + " vertices but the partition has " +
                std::to_string(k) + " parts");
    return report;
  }
  std::vector<int> owner(g.num_vertices(), -1);
  for (int i = 0; i < k; ++i) {
    for (Vertex v : q.partition.parts[i].members) {
      if (v < 0 || v >= g.num_vertices() || owner[v] >= 0) {
        report.fail("partition is not a partition of V(G) at vertex " + std::to_string(v));
        return report;
      }
      owner[v] = i;
    }
  }
  std::vector<Edge> contracted;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (owner[u] < 0) {
      report.fail("vertex " + std::to_string(u) + " is in no part");
      return report;
    }
    for (Vertex v : g.neighbors(u)) {
      if (owner[u] != owner[v]) contracted.push_back({owner[u], owner[v]});
    }
  }
  const Graph expected(k, contracted);
  for (const Edge& e : expected.edges()) {
    if (!q.h.has_edge(e.u, e.v)) report.fail("H misses edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  for (const Edge& e : q.h.edges()) {
    if (!expected.has_edge(e.u, e.v)) report.fail("H has spurious edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  return report;
}

VerificationReport verify_witnesses(const Graph& g, const QuotientGraph& q) {
  VerificationReport report;
  const auto h_edges = q.h.edges();
  if (h_edges.size() != q.witnesses.size()) {
    report.fail("expected " + std::to_string(h_edges.size()) + " witnesses, found " + std::to_string(q.witnesses.size()));
  }
  for (const Edge& e : h_edges) {
    const std::string name = "witness " + std::to_string(e.u) + "-" + std::to_string(e.v);
    const auto it = q.witnesses.find(e);
    if (it == q.witnesses.end()) {
      report.fail(name + " missing");
      continue;
    }
    if (static_cast<std::size_t>(e.v) >= q.partition.size()) {
      report.fail(name + " refers to an unknown part");
      continue;
    }
    const auto& [u1, u2, v] = it->second;
    const TwoSides& lo = q.partition.parts[e.u].sides;
    const bool opposite = (lo.side_a.contains(u1) && lo.side_b.contains(u2)) ||
                          (lo.side_b.contains(u1) && lo.side_a.contains(u2));
    if (!opposite) report.fail(name + ": u1, u2 are not on opposite sides of part " + std::to_string(e.u));
    if (!q.partition.parts[e.v].members.contains(v)) report.fail(name + ": v is not in part " + std::to_string(e.v));
    if (!g.has_edge(u1, v) || !g.has_edge(u2, v)) report.fail(name + ": u1v or u2v is not an edge of G");
  }
  return report;
}

std::string serialize_quotient(const QuotientGraph& q) {
  std::ostringstream os;
  os << render_graph(q.h, GraphFormat::kEdgeList);
  for (const auto& [e, w] : q.witnesses) {
    os << "w " << e.u << ' ' << e.v << " : " << w.u1 << ' ' << w.u2 << ' ' << w.v << '\n';
  }
  return os.str();
}

QuotientGraph parse_quotient(std::string_view text, BcpPartition partition) {
  using Kind = ParseError::Kind;
  std::string graph_text;
  QuotientGraph q;
  int copied = 0;
  for (const auto& [number, content] : text::lines(text)) {
    if (content.front() != 'w') {
      // Pad so the edge-list parser reports the original line numbers.
      graph_text.append(static_cast<std::size_t>(number - 1 - copied), '\n');
      graph_text.append(content).push_back('\n');
      copied = number;
      continue;
    }
    const auto w = text::words(content);
    std::array<std::optional<long long>, 5> ids;
    const bool shape = w.size() == 7 && w[0] == "w" && w[3] == ":";
    if (shape) {
      ids = {text::to_int(w[1]), text::to_int(w[2]), text::to_int(w[4]), text::to_int(w[5]), text::to_int(w[6])};
    }
    for (const auto& id : ids) {
      if (!shape || !id || *id < 0 || *id > 1'000'000'000) {
        throw ParseError(Kind::kMalformed, number, "expected 'w i j : u1 u2 v'");
      }
    }
    const Edge key = Edge{static_cast<int>(*ids[0]), static_cast<int>(*ids[1])}.normalized();
    const WitnessTriple triple{static_cast<int>(*ids[2]), static_cast<int>(*ids[3]), static_cast<int>(*ids[4])};
    if (!q.witnesses.emplace(key, triple).second) throw ParseError(Kind::kMalformed, number, "duplicate witness");
  }
  q.h = parse_graph(graph_text, GraphFormat::kEdgeList);
  if (static_cast<std::size_t>(q.h.num_vertices()) != partition.size()) {
    throw ParseError(Kind::kRange, 0, "quotient vertex count does not match the number of parts");
  }
  q.partition = std::move(partition);
  return q;
}

}  // namespace oddminor
