#ifndef ODDMINOR_GRAPH_IO_H_
#define ODDMINOR_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "oddminor/graph.h"

namespace oddminor {

enum class GraphFormat {
  kEdgeList,  // "n" then "u v" lines, 0-based, '#' comments
  kDimacs,    // "p edge n m" then "e u v" lines, 1-based, "c" comments
};

/// Throws ParseError (with a 1-based line number) on malformed input,
/// self-loops, or ids outside the declared vertex range.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Picks DIMACS when the first meaningful line starts with 'p' or 'c'.
GraphFormat detect_format(std::string_view text);

std::string render_graph(const Graph& g, GraphFormat format);

}  // namespace oddminor

#endif  // ODDMINOR_GRAPH_IO_H_
