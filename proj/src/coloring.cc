#include "oddminor/coloring.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "oddminor/errors.h"
#include "text_util.h"

namespace oddminor {

Coloring Coloring::from_colors(std::vector<int> colors) {
  std::set<int> distinct;
  for (int c : colors) {
    if (c >= 0) distinct.insert(c);
  }
  Coloring out;
  out.colors = std::move(colors);
  out.palette = static_cast<int>(distinct.size());
  return out;
}

namespace {

/// Incremental DSATUR bookkeeping shared by the greedy and exact colourers.
class SaturationState {
 public:
  explicit SaturationState(const Graph& g)
      : g_(g),
        color_(g.num_vertices(), -1),
        saturation_(g.num_vertices(), 0),
        counts_(static_cast<std::size_t>(g.num_vertices()) * g.num_vertices(), 0) {}

  /// Uncoloured vertex of maximum saturation, ties by degree then id.
  Vertex select() const {
    Vertex best = -1;
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (color_[v] >= 0) continue;
      if (best < 0 || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best))) {
        best = v;
      }
    }
    return best;
  }

  bool is_free(Vertex v, int c) const { return count(v, c) == 0; }

  void assign(Vertex v, int c) {
    color_[v] = c;
    for (Vertex y : g_.neighbors(v)) {
      if (count(y, c)++ == 0) ++saturation_[y];
    }
  }

  void unassign(Vertex v) {
    const int c = color_[v];
    color_[v] = -1;
    for (Vertex y : g_.neighbors(v)) {
      if (--count(y, c) == 0) --saturation_[y];
    }
  }

  const std::vector<int>& colors() const { return color_; }

 private:
  int& count(Vertex v, int c) { return counts_[static_cast<std::size_t>(v) * g_.num_vertices() + c]; }
  int count(Vertex v, int c) const { return counts_[static_cast<std::size_t>(v) * g_.num_vertices() + c]; }

  const Graph& g_;
  std::vector<int> color_;
  std::vector<int> saturation_;
  std::vector<int> counts_;  // counts_[v][c]: neighbours of v coloured c
};

/// Size of the largest clique found by greedy extension from each vertex.
int greedy_clique_size(const Graph& g) {
  int best = g.num_vertices() > 0 ? 1 : 0;
  for (Vertex start = 0; start < g.num_vertices(); ++start) {
    std::vector<Vertex> candidates = g.neighbors(start);
    int size = 1;
    while (!candidates.empty()) {
      const auto pick = std::max_element(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
        return g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a > b);
      });
      const Vertex v = *pick;
      ++size;
      std::erase_if(candidates, [&](Vertex u) { return u == v || !g.has_edge(u, v); });
    }
    best = std::max(best, size);
  }
  return best;
}

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, const ExactColoringBudget& budget, Coloring upper, int lower)
      : g_(g), budget_(budget), state_(g), best_(std::move(upper)), lower_(lower) {}

  Coloring run() {
    start_ = std::chrono::steady_clock::now();
    if (best_.palette > lower_) search(0, 0);
    return best_;
  }

 private:
  void search(int colored, int used) {
    if (++nodes_ > budget_.max_nodes) {
      throw ResourceError("exact colouring exceeded its node budget of " + std::to_string(budget_.max_nodes) +
                          "; use the heuristic colourer");
    }
    if (budget_.max_time.count() > 0 && (nodes_ & 1023) == 0 &&
        std::chrono::steady_clock::now() - start_ > budget_.max_time) {
      throw ResourceError("exact colouring exceeded its time budget; use the heuristic colourer");
    }
    if (used >= best_.palette) return;
    if (colored == g_.num_vertices()) {
      best_ = Coloring::from_colors(state_.colors());
      return;
    }
    const Vertex v = state_.select();
    for (int c = 0; c < used; ++c) {
      if (!state_.is_free(v, c)) continue;
      state_.assign(v, c);
      search(colored + 1, used);
      state_.unassign(v);
      if (best_.palette == lower_) return;
    }
    if (used + 1 < best_.palette) {
      state_.assign(v, used);
      search(colored + 1, used + 1);
      state_.unassign(v);
    }
  }

  const Graph& g_;
  const ExactColoringBudget& budget_;
  SaturationState state_;
  Coloring best_;
  int lower_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

Coloring color_heuristic(const Graph& g) {
  SaturationState state(g);
  for (int k = 0; k < g.num_vertices(); ++k) {
    const Vertex v = state.select();
    int c = 0;
    while (!state.is_free(v, c)) ++c;
    state.assign(v, c);
  }
  return Coloring::from_colors(state.colors());
}

Coloring color_exact(const Graph& g, const ExactColoringBudget& budget) {
  if (g.num_vertices() == 0) return {};
  return BranchAndBound(g, budget, color_heuristic(g), greedy_clique_size(g)).run();
}

Coloring compact(const Coloring& c) {
  std::vector<int> used;
  for (int x : c.colors) {
    if (x >= 0) used.push_back(x);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<int> renumbered(c.colors.size(), -1);
  for (std::size_t v = 0; v < c.colors.size(); ++v) {
    if (c.colors[v] >= 0) {
      renumbered[v] = static_cast<int>(std::lower_bound(used.begin(), used.end(), c.colors[v]) - used.begin());
    }
  }
  return Coloring::from_colors(std::move(renumbered));
}

Coloring compose_coloring(const QuotientGraph& q, const Coloring& c_h) {
  const auto check = verify_coloring(q.h, c_h);
  if (!check.passed()) throw ContractError("quotient colouring is not proper: " + check.failures().front());

  std::size_t n = 0;
  for (const Part& part : q.partition.parts) n += part.members.size();
  std::vector<int> colors(n, -1);
  for (std::size_t i = 0; i < q.partition.size(); ++i) {
    const TwoSides& sides = q.partition.parts[i].sides;
    for (int side = 0; side < 2; ++side) {
      for (Vertex x : side == 0 ? sides.side_a : sides.side_b) {
        if (x < 0 || static_cast<std::size_t>(x) >= n || colors[x] >= 0) {
          throw ContractError("partition does not cover vertices 0.." + std::to_string(n - 1) + " exactly once");
        }
        colors[x] = 2 * c_h.colors[i] + side;
      }
    }
  }
  return compact(Coloring::from_colors(std::move(colors)));
}

VerificationReport verify_coloring(const Graph& g, const Coloring& c) {
  VerificationReport report;
  if (c.colors.size() != static_cast<std::size_t>(g.num_vertices())) {
    report.fail("coverage: " + std::to_string(c.colors.size()) + " colours for " + std::to_string(g.num_vertices()) +
                " vertices");
    return report;
  }
  bool covered = true;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (c.colors[v] < 0) {
      report.fail("coverage: vertex " + std::to_string(v) + " is uncoloured");
      covered = false;
    }
  }
  if (!covered) return report;
  for (const Edge& e : g.edges()) {
    if (c.colors[e.u] == c.colors[e.v]) {
      report.fail("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is monochromatic (colour " +
                  std::to_string(c.colors[e.u]) + ")");
    }
  }
  if (Coloring::from_colors(c.colors).palette != c.palette) {
    report.fail("palette " + std::to_string(c.palette) + " does not match the colours used");
  }
  return report;
}

std::string serialize_coloring(const Coloring& c) {
  std::ostringstream os;
  os << "palette " << c.palette << '\n';
  for (std::size_t v = 0; v < c.colors.size(); ++v) os << v << ' ' << c.colors[v] << '\n';
  return os.str();
}

Coloring parse_coloring(std::string_view text) {
  using Kind = ParseError::Kind;
  std::optional<long long> palette;
  std::vector<int> colors;
  for (const auto& [number, content] : text::lines(text)) {
    if (content.front() == '#') continue;
    const auto w = text::words(content);
    if (!palette) {
      palette = w.size() == 2 && w[0] == "palette" ? text::to_int(w[1]) : std::nullopt;
      if (!palette || *palette < 0) throw ParseError(Kind::kMalformed, number, "expected 'palette K'");
      continue;
    }
    const auto v = w.size() == 2 ? text::to_int(w[0]) : std::nullopt;
    const auto c = w.size() == 2 ? text::to_int<int>(w[1]) : std::nullopt;
    if (!v || !c || *c < 0) throw ParseError(Kind::kMalformed, number, "expected 'v color'");
    if (*v != static_cast<long long>(colors.size())) {
      throw ParseError(Kind::kRange, number, "vertices must be listed in ascending order from 0");
    }
    colors.push_back(*c);
  }
  if (!palette) throw ParseError(Kind::kMalformed, 1, "missing 'palette K' header");
  Coloring out = Coloring::from_colors(std::move(colors));
  out.palette = static_cast<int>(*palette);
  return out;
}

}  // namespace oddminor
