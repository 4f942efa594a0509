#include "oddminor/graph_io.h"

#include <sstream>
#include <vector>

#include "oddminor/errors.h"
#include "text_util.h"

namespace oddminor {

namespace {

using Kind = ParseError::Kind;

Edge checked_edge(long long u, long long v, long long n, int line, long long offset) {
  if (u == v) throw ParseError(Kind::kSelfLoop, line, "self-loop at vertex " + std::to_string(u));
  for (long long id : {u, v}) {
    if (id < offset || id >= n + offset) {
      throw ParseError(Kind::kRange, line,
                       "vertex id " + std::to_string(id) + " outside declared range of " +
                           std::to_string(n) + " vertices");
    }
  }
  return {static_cast<Vertex>(u - offset), static_cast<Vertex>(v - offset)};
}

Graph parse_edge_list(std::string_view text) {
  std::optional<long long> n;
  std::vector<Edge> edges;
  for (const auto& [number, content] : text::lines(text)) {
    if (content.front() == '#') continue;
    const auto w = text::words(content);
    if (!n) {
      const auto count = w.size() == 1 ? text::to_int(w[0]) : std::nullopt;
      if (!count || *count < 0 || *count > 1'000'000'000) {
        throw ParseError(Kind::kMalformed, number, "expected vertex count, got '" + std::string(content) + "'");
      }
      n = count;
      continue;
    }
    const auto u = w.size() == 2 ? text::to_int(w[0]) : std::nullopt;
    const auto v = w.size() == 2 ? text::to_int(w[1]) : std::nullopt;
    if (!u || !v) throw ParseError(Kind::kMalformed, number, "expected 'u v', got '" + std::string(content) + "'");
    edges.push_back(checked_edge(*u, *v, *n, number, 0));
  }
  if (!n) throw ParseError(Kind::kMalformed, 1, "missing vertex count");
  return Graph(static_cast<int>(*n), edges);
}

Graph parse_dimacs(std::string_view text) {
  std::optional<long long> n;
  std::vector<Edge> edges;
  for (const auto& [number, content] : text::lines(text)) {
    const auto w = text::words(content);
    if (w[0] == "c") continue;
    if (w[0] == "p") {
      if (n) throw ParseError(Kind::kMalformed, number, "duplicate 'p' header");
      const auto count = w.size() == 4 && (w[1] == "edge" || w[1] == "col") ? text::to_int(w[2]) : std::nullopt;
      const auto m = w.size() == 4 ? text::to_int(w[3]) : std::nullopt;
      if (!count || !m || *count < 0 || *m < 0 || *count > 1'000'000'000) {
        throw ParseError(Kind::kMalformed, number, "expected 'p edge n m'");
      }
      n = count;
      continue;
    }
    if (w[0] == "e") {
      if (!n) throw ParseError(Kind::kMalformed, number, "edge line before 'p' header");
      const auto u = w.size() == 3 ? text::to_int(w[1]) : std::nullopt;
      const auto v = w.size() == 3 ? text::to_int(w[2]) : std::nullopt;
      if (!u || !v) throw ParseError(Kind::kMalformed, number, "expected 'e u v'");
      edges.push_back(checked_edge(*u, *v, *n, number, 1));
      continue;
    }
    throw ParseError(Kind::kMalformed, number, "unknown line type '" + std::string(w[0]) + "'");
  }
  if (!n) throw ParseError(Kind::kMalformed, 1, "missing 'p edge n m' header");
  return Graph(static_cast<int>(*n), edges);
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kDimacs ? parse_dimacs(text) : parse_edge_list(text);
}

GraphFormat detect_format(std::string_view text) {
  for (const auto& line : text::lines(text)) {
    if (line.content.front() == '#') continue;
    const char c = line.content.front();
    return c == 'p' || c == 'c' ? GraphFormat::kDimacs : GraphFormat::kEdgeList;
  }
  return GraphFormat::kEdgeList;
}

std::string render_graph(const Graph& g, GraphFormat format) {
  std::ostringstream os;
  const auto edges = g.edges();
  if (format == GraphFormat::kDimacs) {
    os << "p edge " << g.num_vertices() << ' ' << edges.size() << '\n';
    for (const Edge& e : edges) os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  } else {
    os << g.num_vertices() << '\n';
    for (const Edge& e : edges) os << e.u << ' ' << e.v << '\n';
  }
  return os.str();
}

}  // namespace oddminor
