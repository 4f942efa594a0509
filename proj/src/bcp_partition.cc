#include "oddminor/bcp_partition.h"

#include <array>
#include <sstream>

#include "oddminor/errors.h"
#include "text_util.h"

namespace oddminor {

BcpPartition compute_partition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<char> used(n, 0);
  std::vector<int> side(n, -1);
  // seen[s][x]: neighbours of x on side s of the part being grown.
  std::array<std::vector<int>, 2> seen{std::vector<int>(n, 0), std::vector<int>(n, 0)};

  BcpPartition out;
  for (Vertex seed = 0; seed < n; ++seed) {
    if (used[seed]) continue;
    std::vector<Vertex> members;
    auto absorb = [&](Vertex x, int s) {
      used[x] = 1;
      side[x] = s;
      members.push_back(x);
      for (Vertex y : g.neighbors(x)) ++seen[s][y];
    };
    absorb(seed, 0);

    std::vector<Vertex> frontier;
    for (bool grew = true; grew;) {
      grew = false;
      frontier.clear();
      for (Vertex x = seed + 1; x < n; ++x) {
        if (!used[x] && (seen[0][x] > 0 || seen[1][x] > 0)) frontier.push_back(x);
      }
      for (Vertex x : frontier) {
        const bool sees_a = seen[0][x] > 0;
        const bool sees_b = seen[1][x] > 0;
        if (sees_a != sees_b) {
          absorb(x, sees_a ? 1 : 0);
          grew = true;
        }
      }
    }

    std::vector<Vertex> a, b;
    for (Vertex x : members) {
      (side[x] == 0 ? a : b).push_back(x);
      for (Vertex y : g.neighbors(x)) seen[side[x]][y] = 0;
    }
    Part part;
    part.members = VertexSet(members);
    part.sides = {VertexSet(std::move(a)), VertexSet(std::move(b))};
    out.parts.push_back(std::move(part));
  }
  return out;
}

BcpPartition make_partition(const Graph& g, const std::vector<VertexSet>& members) {
  BcpPartition out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto result = bipartition_of(g, members[i]);
    const auto* sides = std::get_if<TwoSides>(&result);
    if (sides == nullptr) throw StructuralError("part " + std::to_string(i) + " is not bipartite");
    out.parts.push_back({members[i], *sides});
  }
  return out;
}

std::vector<int> part_index(const BcpPartition& p, int num_vertices) {
  std::vector<int> index(static_cast<std::size_t>(num_vertices), -1);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (Vertex v : p.parts[i].members) {
      if (v >= 0 && v < num_vertices && index[v] < 0) index[v] = static_cast<int>(i);
    }
  }
  return index;
}

VerificationReport verify_partition(const Graph& g, const BcpPartition& p) {
  VerificationReport report;
  const int n = g.num_vertices();

  std::vector<int> hits(n, 0);
  bool ids_ok = true;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i].members.empty()) report.fail("part " + std::to_string(i) + " is empty");
    for (Vertex v : p.parts[i].members) {
      if (v < 0 || v >= n) {
        report.fail("part " + std::to_string(i) + " contains unknown vertex " + std::to_string(v));
        ids_ok = false;
      } else {
        ++hits[v];
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (hits[v] == 0) report.fail("coverage: vertex " + std::to_string(v) + " is in no part");
    if (hits[v] > 1) report.fail("disjointness: vertex " + std::to_string(v) + " is in " + std::to_string(hits[v]) + " parts");
  }
  if (!ids_ok) return report;

  bool parts_ok = true;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const Part& part = p.parts[i];
    const std::string name = "part " + std::to_string(i);
    if (part.members.empty()) continue;
    if (!is_connected(g, part.members)) {
      report.fail(name + " does not induce a connected subgraph");
      parts_ok = false;
      continue;
    }
    std::vector<Vertex> joined(part.sides.side_a.begin(), part.sides.side_a.end());
    joined.insert(joined.end(), part.sides.side_b.begin(), part.sides.side_b.end());
    if (joined.size() != part.members.size() || VertexSet(joined) != part.members) {
      report.fail(name + ": sides do not split the members");
      parts_ok = false;
      continue;
    }
    for (const VertexSet* s : {&part.sides.side_a, &part.sides.side_b}) {
      for (Vertex x : *s) {
        for (Vertex y : g.neighbors(x)) {
          if (x < y && s->contains(y)) {
            report.fail(name + ": edge " + std::to_string(x) + "-" + std::to_string(y) + " inside one side");
            parts_ok = false;
          }
        }
      }
    }
    if (!part.sides.side_a.contains(part.members.front())) {
      report.fail(name + ": lowest vertex is not on side A");
    }
  }
  if (!parts_ok || !report.passed()) return report;

  const auto owner = part_index(p, n);
  const std::size_t k = p.parts.size();
  std::vector<char> adjacent(k * k, 0);
  for (const Edge& e : g.edges()) {
    const auto i = static_cast<std::size_t>(owner[e.u]);
    const auto j = static_cast<std::size_t>(owner[e.v]);
    if (i != j) adjacent[std::min(i, j) * k + std::max(i, j)] = 1;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const TwoSides& sides = p.parts[i].sides;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!adjacent[i * k + j]) continue;
      bool found = false;
      for (Vertex v : p.parts[j].members) {
        bool sees_a = false, sees_b = false;
        for (Vertex u : g.neighbors(v)) {
          sees_a = sees_a || sides.side_a.contains(u);
          sees_b = sees_b || sides.side_b.contains(u);
        }
        if (sees_a && sees_b) {
          found = true;
          break;
        }
      }
      if (!found) {
        report.fail("parts " + std::to_string(i) + " and " + std::to_string(j) +
                    ": joined by an edge but no vertex of part " + std::to_string(j) +
                    " sees both sides of part " + std::to_string(i));
      }
    }
  }
  return report;
}

std::string serialize_partition(const BcpPartition& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    os << i << ": A=" << to_string(p.parts[i].sides.side_a, ',') << " B=" << to_string(p.parts[i].sides.side_b, ',')
       << '\n';
  }
  return os.str();
}

BcpPartition parse_partition(std::string_view text) {
  using Kind = ParseError::Kind;
  BcpPartition out;
  for (const auto& [number, content] : text::lines(text)) {
    if (content.front() == '#') continue;
    const auto w = text::words(content);
    const auto index = w.size() == 3 && w[0].ends_with(':') ? text::to_int(w[0].substr(0, w[0].size() - 1)) : std::nullopt;
    if (!index || !w[1].starts_with("A=") || !w[2].starts_with("B=")) {
      throw ParseError(Kind::kMalformed, number, "expected 'i: A=<ids> B=<ids>'");
    }
    if (*index != static_cast<long long>(out.parts.size())) {
      throw ParseError(Kind::kMalformed, number, "part index out of sequence");
    }
    const auto a = text::int_list(w[1].substr(2));
    const auto b = text::int_list(w[2].substr(2));
    if (!a || !b) throw ParseError(Kind::kMalformed, number, "bad vertex list");
    std::vector<Vertex> all(a->begin(), a->end());
    all.insert(all.end(), b->begin(), b->end());
    out.parts.push_back({VertexSet(all), {VertexSet(*a), VertexSet(*b)}});
  }
  return out;
}

}  // namespace oddminor
