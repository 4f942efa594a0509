#ifndef ODDMINOR_COLORING_H_
#define ODDMINOR_COLORING_H_

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oddminor/graph.h"
#include "oddminor/quotient.h"
#include "oddminor/report.h"

namespace oddminor {

/// colors[v] is the 0-based colour of vertex v; palette is the number of
/// distinct colours actually used.
struct Coloring {
  std::vector<int> colors;
  int palette = 0;

  static Coloring from_colors(std::vector<int> colors);
  bool operator==(const Coloring&) const = default;
};

/// Hard caps for the exact colourer. A zero time limit disables the clock.
struct ExactColoringBudget {
  std::uint64_t max_nodes = 20'000'000;
  std::chrono::milliseconds max_time{0};
};

/// Optimal colouring by DSATUR branch and bound, seeded with the greedy
/// clique lower bound and the heuristic upper bound. Throws ResourceError
/// when the budget runs out; use color_heuristic for large inputs.
Coloring color_exact(const Graph& g, const ExactColoringBudget& budget = {});

/// Greedy DSATUR: repeatedly colour the uncoloured vertex of highest
/// saturation (ties: higher degree, then lower id) with its least free colour.
Coloring color_heuristic(const Graph& g);

/// Colours G from a colouring of the quotient: x in part i, side s gets
/// 2 * c_h[i] + (s == A ? 0 : 1), then colours are renumbered densely in
/// ascending order. Throws ContractError if c_h is not proper on q.h.
Coloring compose_coloring(const QuotientGraph& q, const Coloring& c_h);

/// Renumbers used colours to 0..palette-1, preserving their order.
Coloring compact(const Coloring& c);

VerificationReport verify_coloring(const Graph& g, const Coloring& c);

/// "palette K" then "v color" lines, ascending v.
std::string serialize_coloring(const Coloring& c);
/// Throws ParseError.
Coloring parse_coloring(std::string_view text);

}  // namespace oddminor

#endif  // ODDMINOR_COLORING_H_
