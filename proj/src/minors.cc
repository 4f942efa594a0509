#include "oddminor/minors.h"

#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

#include "oddminor/errors.h"
#include "text_util.h"

namespace oddminor {

namespace {

std::string pair_name(int s, int s2) { return std::to_string(s) + "-" + std::to_string(s2); }

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

/// First violated clause of one tree, or empty.
std::string check_tree(const Graph& g, const Tree& tree) {
  if (tree.vertices.empty()) return "has no vertices";
  for (Vertex v : tree.vertices) {
    if (v < 0 || v >= g.num_vertices()) return "contains unknown vertex " + std::to_string(v);
  }
  if (tree.edges.size() + 1 != tree.vertices.size()) {
    return "has " + std::to_string(tree.edges.size()) + " edges for " + std::to_string(tree.vertices.size()) +
           " vertices";
  }
  std::vector<int> parent(tree.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto slot = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(tree.vertices.begin(), tree.vertices.end(), v) - tree.vertices.begin());
  };
  for (const Edge& e : tree.edges) {
    const std::string name = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
    if (!tree.vertices.contains(e.u) || !tree.vertices.contains(e.v)) return name + " leaves the tree";
    if (!g.has_edge(e.u, e.v)) return name + " is not an edge of G";
    const int a = find_root(parent, slot(e.u));
    const int b = find_root(parent, slot(e.v));
    if (a == b) return name + " closes a cycle";
    parent[a] = b;
  }
  return {};
}

}  // namespace

VerificationReport verify_expansion(const Graph& g, const ExpansionCertificate& cert) {
  VerificationReport report;
  const int t = cert.t();
  if (t == 0) {
    report.fail("certificate has no trees");
    return report;
  }
  std::vector<int> owner(g.num_vertices(), -1);
  for (int s = 0; s < t; ++s) {
    const Tree& tree = cert.trees[s];
    if (const auto problem = check_tree(g, tree); !problem.empty()) {
      report.fail("tree " + std::to_string(s) + " " + problem);
      continue;
    }
    for (Vertex v : tree.vertices) {
      if (owner[v] >= 0) {
        report.fail("tree " + std::to_string(s) + " shares vertex " + std::to_string(v) + " with tree " +
                    std::to_string(owner[v]));
        break;
      }
      owner[v] = s;
    }
  }
  for (const auto& [key, edge] : cert.connectors) {
    if (key.first < 0 || key.first >= key.second || key.second >= t) {
      report.fail("connector for invalid tree pair " + pair_name(key.first, key.second));
    }
  }
  for (int s = 0; s < t; ++s) {
    for (int s2 = s + 1; s2 < t; ++s2) {
      const std::string name = "connector " + pair_name(s, s2);
      const auto it = cert.connectors.find({s, s2});
      if (it == cert.connectors.end()) {
        report.fail(name + " is missing");
        continue;
      }
      const Edge e = it->second;
      if (!g.has_edge(e.u, e.v)) {
        report.fail(name + " (" + std::to_string(e.u) + "-" + std::to_string(e.v) + ") is not an edge of G");
        continue;
      }
      const auto& ts = cert.trees[s].vertices;
      const auto& ts2 = cert.trees[s2].vertices;
      const bool forward = ts.contains(e.u) && ts2.contains(e.v);
      const bool backward = ts.contains(e.v) && ts2.contains(e.u);
      if (!forward && !backward) {
        const bool in_s = ts.contains(e.u) || ts.contains(e.v);
        report.fail(name + ": endpoint not in T_" + std::to_string(in_s ? s2 : s));
      }
    }
  }
  return report;
}

VerificationReport verify_odd_expansion(const Graph& g, const OddExpansionCertificate& cert) {
  VerificationReport report = verify_expansion(g, cert.base);
  if (!report.passed()) return report;

  auto color = [&](Vertex v) {
    const auto it = cert.parity.find(v);
    return it == cert.parity.end() ? 0 : it->second;
  };
  for (const Tree& tree : cert.base.trees) {
    for (Vertex v : tree.vertices) {
      const int c = color(v);
      if (c != 1 && c != 2) report.fail("parity of vertex " + std::to_string(v) + " is not 1 or 2");
    }
  }
  for (const auto& [v, c] : cert.parity) {
    bool in_tree = false;
    for (const Tree& tree : cert.base.trees) in_tree = in_tree || tree.vertices.contains(v);
    if (!in_tree) report.fail("parity assigned to vertex " + std::to_string(v) + " outside every tree");
  }
  if (!report.passed()) return report;

  for (int s = 0; s < cert.t(); ++s) {
    for (const Edge& e : cert.base.trees[s].edges) {
      if (color(e.u) == color(e.v)) {
        report.fail("tree " + std::to_string(s) + " edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                    " is monochromatic");
      }
    }
  }
  for (const auto& [key, e] : cert.base.connectors) {
    if (color(e.u) != color(e.v)) {
      report.fail("connector " + pair_name(key.first, key.second) + " has colours (" + std::to_string(color(e.u)) +
                  "," + std::to_string(color(e.v)) + "), not monochromatic");
    }
  }
  return report;
}

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

class MaskGraph {
 public:
  explicit MaskGraph(const Graph& g) : adj_(g.num_vertices(), 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= bit(e.v);
      adj_[e.v] |= bit(e.u);
    }
  }

  Mask neighborhood(Mask set) const {
    Mask out = 0;
    for (Mask rest = set; rest != 0; rest &= rest - 1) out |= adj_[std::countr_zero(rest)];
    return out;
  }

  /// Connectivity of `set` using only edges between `set` and itself whose
  /// endpoints differ on `color_two` when `bichromatic` is set.
  bool connected(Mask set, Mask color_two = 0, bool bichromatic = false) const {
    if (set == 0) return false;
    Mask reached = set & (~set + 1);
    Mask frontier = reached;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask rest = frontier; rest != 0; rest &= rest - 1) {
        const Vertex x = std::countr_zero(rest);
        Mask step = adj_[x] & set;
        if (bichromatic) step &= (color_two & bit(x)) ? ~color_two : color_two;
        next |= step;
      }
      frontier = next & ~reached;
      reached |= next;
    }
    return reached == set;
  }

  Mask adj(Vertex v) const { return adj_[v]; }

 private:
  std::vector<Mask> adj_;
};

std::uint64_t saturating_power(std::uint64_t base, int exponent) {
  std::uint64_t out = 1;
  for (int k = 0; k < exponent; ++k) {
    if (out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

void check_search(const Graph& g, int t, const MinorSearchBudget& budget) {
  if (t < 1) throw ConfigError("t must be a positive integer");
  const std::uint64_t size = saturating_power(static_cast<std::uint64_t>(t) + 1, g.num_vertices());
  if (g.num_vertices() > 64 || size > budget.max_assignments) {
    throw ResourceError("minor search over (t+1)^n = " + std::to_string(t + 1) + "^" +
                        std::to_string(g.num_vertices()) + " assignments exceeds the budget of " +
                        std::to_string(budget.max_assignments));
  }
}

/// Enumerates branch-set assignments whose classes are nonempty, connected,
/// and pairwise adjacent. The visitor returns true to stop.
class BranchSetEnumerator {
 public:
  using Visitor = std::function<bool(const std::vector<Mask>&)>;

  BranchSetEnumerator(const MaskGraph& g, int n, int t) : g_(g), n_(n), t_(t), classes_(t, 0) {}

  void run(const Visitor& visit) {
    visit_ = &visit;
    descend(0, 0);
  }

 private:
  bool descend(int v, int introduced) {
    if (t_ - introduced > n_ - v) return false;
    if (!viable(v, introduced)) return false;
    if (v == n_) return admissible() && (*visit_)(classes_);
    if (descend(v + 1, introduced)) return true;
    for (int label = 0; label < std::min(introduced + 1, t_); ++label) {
      classes_[label] |= bit(v);
      const bool stop = descend(v + 1, std::max(introduced, label + 1));
      classes_[label] &= ~bit(v);
      if (stop) return true;
    }
    return false;
  }

  /// A class with no neighbour among the undecided vertices is final; a
  /// final class must already be connected and adjacent to other final ones.
  bool viable(int v, int introduced) const {
    const Mask undecided = v >= 64 ? 0 : ~Mask{0} << v;
    Mask final_classes = 0;
    for (int s = 0; s < introduced; ++s) {
      if ((g_.neighborhood(classes_[s]) & undecided) != 0) continue;
      if (!g_.connected(classes_[s])) return false;
      for (int s2 = 0; s2 < s; ++s2) {
        if ((final_classes & bit(s2)) && (g_.neighborhood(classes_[s2]) & classes_[s]) == 0) return false;
      }
      final_classes |= bit(s);
    }
    return true;
  }

  bool admissible() const {
    for (int s = 0; s < t_; ++s) {
      if (!g_.connected(classes_[s])) return false;
    }
    for (int s = 0; s < t_; ++s) {
      const Mask reach = g_.neighborhood(classes_[s]);
      for (int s2 = s + 1; s2 < t_; ++s2) {
        if ((reach & classes_[s2]) == 0) return false;
      }
    }
    return true;
  }

  const MaskGraph& g_;
  int n_;
  int t_;
  std::vector<Mask> classes_;
  const Visitor* visit_ = nullptr;
};

std::vector<Vertex> members(Mask set) {
  std::vector<Vertex> out;
  for (Mask rest = set; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
  return out;
}

/// Breadth-first tree rooted at the lowest vertex, restricted to edges that
/// are bichromatic under color_two when `bichromatic` is set.
Tree bfs_tree(const MaskGraph& g, Mask set, Mask color_two = 0, bool bichromatic = false) {
  const auto ids = members(set);
  std::vector<Edge> edges;
  Mask reached = bit(ids.front());
  std::vector<Vertex> queue{ids.front()};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Vertex x = queue[k];
    Mask step = g.adj(x) & set & ~reached;
    if (bichromatic) step &= (color_two & bit(x)) ? ~color_two : color_two;
    for (Vertex y : members(step)) {
      reached |= bit(y);
      edges.push_back(Edge{x, y}.normalized());
      queue.push_back(y);
    }
  }
  return {VertexSet(ids), std::move(edges)};
}

/// Least (u, v) with u in `from`, v in `to`, uv an edge, and (when `same` is
/// given) u, v on the same side of color_two.
std::optional<Edge> least_connector(const MaskGraph& g, Mask from, Mask to, const Mask* color_two = nullptr) {
  for (Vertex u : members(from)) {
    Mask candidates = g.adj(u) & to;
    if (color_two != nullptr) candidates &= (*color_two & bit(u)) ? *color_two : ~*color_two;
    if (candidates != 0) return Edge{u, std::countr_zero(candidates)};
  }
  return std::nullopt;
}

}  // namespace

std::optional<ExpansionCertificate> find_expansion(const Graph& g, int t, const MinorSearchBudget& budget) {
  if (t >= 1 && t > g.num_vertices()) return std::nullopt;
  check_search(g, t, budget);
  const MaskGraph mg(g);
  std::optional<ExpansionCertificate> found;
  BranchSetEnumerator(mg, g.num_vertices(), t).run([&](const std::vector<Mask>& classes) {
    ExpansionCertificate cert;
    for (Mask c : classes) cert.trees.push_back(bfs_tree(mg, c));
    for (int s = 0; s < t; ++s) {
      for (int s2 = s + 1; s2 < t; ++s2) {
        const auto e = least_connector(mg, classes[s], classes[s2]);
        if (!e) panic("admissible branch sets without a connector");
        cert.connectors.emplace(std::pair{s, s2}, *e);
      }
    }
    found = std::move(cert);
    return true;
  });
  return found;
}

namespace {

/// Colourings of one branch set, as the mask of colour-2 vertices, under
/// which the set stays connected through bichromatic edges. The lowest
/// vertex has colour 1 in every listed colouring.
std::vector<Mask> tree_colorings(const MaskGraph& g, Mask set) {
  const auto ids = members(set);
  std::vector<Mask> out;
  const std::uint64_t count = std::uint64_t{1} << (ids.size() - 1);
  for (std::uint64_t code = 0; code < count; ++code) {
    Mask two = 0;
    for (std::size_t k = 1; k < ids.size(); ++k) {
      if (code & (std::uint64_t{1} << (k - 1))) two |= bit(ids[k]);
    }
    if (g.connected(set, two, true)) out.push_back(two);
  }
  return out;
}

class ParitySearch {
 public:
  ParitySearch(const MaskGraph& g, const std::vector<Mask>& classes) : g_(g), classes_(classes) {
    for (Mask c : classes) options_.push_back(tree_colorings(g, c));
    chosen_.resize(classes.size());
  }

  /// Colour-2 masks per class, or empty when no consistent choice exists.
  std::vector<Mask> run() {
    if (descend(0)) return chosen_;
    return {};
  }

 private:
  bool descend(std::size_t s) {
    if (s == classes_.size()) return true;
    for (Mask two : options_[s]) {
      // Class 0 fixes the global flip.
      for (int flip = 0; flip < (s == 0 ? 1 : 2); ++flip) {
        chosen_[s] = flip ? (classes_[s] & ~two) : two;
        if (consistent(s) && descend(s + 1)) return true;
      }
    }
    return false;
  }

  bool consistent(std::size_t s) const {
    const Mask two = chosen_[s];
    const Mask one = classes_[s] & ~two;
    for (std::size_t r = 0; r < s; ++r) {
      const Mask r_two = chosen_[r];
      const Mask r_one = classes_[r] & ~r_two;
      if ((g_.neighborhood(r_one) & one) == 0 && (g_.neighborhood(r_two) & two) == 0) return false;
    }
    return true;
  }

  const MaskGraph& g_;
  const std::vector<Mask>& classes_;
  std::vector<std::vector<Mask>> options_;
  std::vector<Mask> chosen_;
};

}  // namespace

std::optional<OddExpansionCertificate> find_odd_expansion(const Graph& g, int t, const MinorSearchBudget& budget) {
  if (t >= 1 && t > g.num_vertices()) return std::nullopt;
  check_search(g, t, budget);
  const MaskGraph mg(g);
  std::optional<OddExpansionCertificate> found;
  BranchSetEnumerator(mg, g.num_vertices(), t).run([&](const std::vector<Mask>& classes) {
    const auto two = ParitySearch(mg, classes).run();
    if (two.empty()) return false;
    OddExpansionCertificate cert;
    for (int s = 0; s < t; ++s) {
      cert.base.trees.push_back(bfs_tree(mg, classes[s], two[s], true));
      for (Vertex v : members(classes[s])) cert.parity[v] = (two[s] & bit(v)) ? 2 : 1;
    }
    Mask all_two = 0;
    for (Mask m : two) all_two |= m;
    for (int s = 0; s < t; ++s) {
      for (int s2 = s + 1; s2 < t; ++s2) {
        const auto e = least_connector(mg, classes[s], classes[s2], &all_two);
        if (!e) panic("parity search accepted a pair without a monochromatic connector");
        cert.base.connectors.emplace(std::pair{s, s2}, *e);
      }
    }
    found = std::move(cert);
    return true;
  });
  return found;
}

namespace {

void write_trees(std::ostringstream& os, const ExpansionCertificate& cert) {
  for (int s = 0; s < cert.t(); ++s) {
    const Tree& tree = cert.trees[s];
    os << "T " << s << ": " << to_string(tree.vertices) << " /";
    for (const Edge& e : tree.edges) os << ' ' << e.u << '-' << e.v;
    os << '\n';
  }
  for (const auto& [key, e] : cert.connectors) {
    os << "conn " << key.first << ' ' << key.second << " : " << e.u << ' ' << e.v << '\n';
  }
}

}  // namespace

std::string serialize_certificate(const ExpansionCertificate& cert) {
  std::ostringstream os;
  os << "expansion " << cert.t() << '\n';
  write_trees(os, cert);
  return os.str();
}

std::string serialize_certificate(const OddExpansionCertificate& cert) {
  std::ostringstream os;
  os << "odd-expansion " << cert.t() << '\n';
  write_trees(os, cert.base);
  for (const auto& [v, c] : cert.parity) os << "parity " << v << " : " << c << '\n';
  return os.str();
}

AnyCertificate parse_certificate(std::string_view text) {
  using Kind = ParseError::Kind;
  std::optional<long long> t;
  bool odd = false;
  OddExpansionCertificate cert;
  auto vertex = [](std::string_view word, int line) {
    const auto v = text::to_int<int>(word);
    if (!v || *v < 0) throw ParseError(Kind::kMalformed, line, "bad vertex id '" + std::string(word) + "'");
    return *v;
  };
  auto label = [&](std::string_view word, int line) {
    const auto s = text::to_int<int>(word);
    if (!s || *s < 0 || *s >= *t) throw ParseError(Kind::kRange, line, "tree label '" + std::string(word) + "' out of range");
    return *s;
  };

  for (const auto& [number, content] : text::lines(text)) {
    if (content.front() == '#') continue;
    const auto w = text::words(content);
    if (!t) {
      if (w.size() != 2 || (w[0] != "expansion" && w[0] != "odd-expansion")) {
        throw ParseError(Kind::kMalformed, number, "expected 'expansion <t>' or 'odd-expansion <t>'");
      }
      odd = w[0] == "odd-expansion";
      t = text::to_int(w[1]);
      if (!t || *t < 0 || *t > 64) throw ParseError(Kind::kMalformed, number, "bad tree count");
      continue;
    }
    if (w[0] == "T") {
      if (w.size() < 3 || !w[1].ends_with(':')) throw ParseError(Kind::kMalformed, number, "expected 'T <s>: ...'");
      const int s = label(w[1].substr(0, w[1].size() - 1), number);
      if (s != static_cast<int>(cert.base.trees.size())) throw ParseError(Kind::kMalformed, number, "trees out of order");
      Tree tree;
      std::vector<Vertex> ids;
      std::size_t k = 2;
      for (; k < w.size() && w[k] != "/"; ++k) ids.push_back(vertex(w[k], number));
      if (k == w.size()) throw ParseError(Kind::kMalformed, number, "missing '/' between vertices and edges");
      for (++k; k < w.size(); ++k) {
        const auto dash = w[k].find('-');
        if (dash == std::string_view::npos) throw ParseError(Kind::kMalformed, number, "expected edge 'u-v'");
        tree.edges.push_back({vertex(w[k].substr(0, dash), number), vertex(w[k].substr(dash + 1), number)});
      }
      tree.vertices = VertexSet(ids);
      if (tree.vertices.size() != ids.size()) throw ParseError(Kind::kMalformed, number, "repeated vertex in tree");
      cert.base.trees.push_back(std::move(tree));
    } else if (w[0] == "conn") {
      if (w.size() != 6 || w[3] != ":") throw ParseError(Kind::kMalformed, number, "expected 'conn s s' : u v'");
      int s = label(w[1], number), s2 = label(w[2], number);
      Edge e{vertex(w[4], number), vertex(w[5], number)};
      if (s == s2) throw ParseError(Kind::kMalformed, number, "connector joins a tree to itself");
      if (s > s2) {
        std::swap(s, s2);
        std::swap(e.u, e.v);
      }
      if (!cert.base.connectors.emplace(std::pair{s, s2}, e).second) {
        throw ParseError(Kind::kMalformed, number, "duplicate connector");
      }
    } else if (w[0] == "parity" && odd) {
      if (w.size() != 4 || w[2] != ":") throw ParseError(Kind::kMalformed, number, "expected 'parity v : c'");
      const int c = vertex(w[3], number);
      if (c != 1 && c != 2) throw ParseError(Kind::kMalformed, number, "parity must be 1 or 2");
      if (!cert.parity.emplace(vertex(w[1], number), c).second) throw ParseError(Kind::kMalformed, number, "duplicate parity");
    } else {
      throw ParseError(Kind::kMalformed, number, "unexpected line '" + std::string(content) + "'");
    }
  }
  if (!t) throw ParseError(Kind::kMalformed, 1, "missing certificate header");
  if (static_cast<long long>(cert.base.trees.size()) != *t) {
    throw ParseError(Kind::kMalformed, 0, "header declares " + std::to_string(*t) + " trees, found " +
                                              std::to_string(cert.base.trees.size()));
  }
  if (odd) return cert;
  return cert.base;
}

}  // namespace oddminor
