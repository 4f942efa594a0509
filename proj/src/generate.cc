#include "oddminor/generate.h"

#include <cmath>
#include <random>
#include <vector>

#include "oddminor/errors.h"
#include "text_util.h"

namespace oddminor {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

int positive_int(const std::string& word, const char* what) {
  const auto value = text::to_int<int>(word);
  require(value && *value > 0, std::string(what) + " must be a positive integer, got '" + word + "'");
  return *value;
}

}  // namespace

GraphSpec GraphSpec::parse(std::span<const std::string> words) {
  require(!words.empty(), "missing graph kind");
  const std::string& kind = words[0];
  auto arity = [&](std::size_t k) {
    require(words.size() == k + 1, kind + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (kind == "complete") {
    arity(1);
    return complete(positive_int(words[1], "t"));
  }
  if (kind == "cycle") {
    arity(1);
    return cycle(positive_int(words[1], "n"));
  }
  if (kind == "complete-bipartite") {
    arity(2);
    return complete_bipartite(positive_int(words[1], "a"), positive_int(words[2], "b"));
  }
  if (kind == "gnp") {
    arity(2);
    char* end = nullptr;
    const double p = std::strtod(words[2].c_str(), &end);
    require(end != words[2].c_str() && *end == '\0', "p must be a number, got '" + words[2] + "'");
    return gnp(positive_int(words[1], "n"), p);
  }
  if (kind == "petersen") {
    arity(0);
    return petersen();
  }
  throw ConfigError("unknown graph kind '" + kind + "'");
}

Graph generate(const GraphSpec& spec, std::uint64_t seed) {
  std::vector<Edge> edges;
  switch (spec.kind) {
    case GraphSpec::Kind::kComplete: {
      require(spec.a > 0, "complete: t must be positive");
      for (Vertex u = 0; u < spec.a; ++u)
        for (Vertex v = u + 1; v < spec.a; ++v) edges.push_back({u, v});
      return Graph(spec.a, edges);
    }
    case GraphSpec::Kind::kCycle: {
      require(spec.a >= 3, "cycle: n must be at least 3");
      for (Vertex u = 0; u < spec.a; ++u) edges.push_back({u, (u + 1) % spec.a});
      return Graph(spec.a, edges);
    }
    case GraphSpec::Kind::kCompleteBipartite: {
      require(spec.a > 0 && spec.b > 0, "complete-bipartite: sides must be positive");
      for (Vertex u = 0; u < spec.a; ++u)
        for (Vertex v = spec.a; v < spec.a + spec.b; ++v) edges.push_back({u, v});
      return Graph(spec.a + spec.b, edges);
    }
    case GraphSpec::Kind::kGnp: {
      require(spec.a > 0, "gnp: n must be positive");
      require(spec.p >= 0.0 && spec.p <= 1.0, "gnp: p must lie in [0, 1]");
      std::mt19937_64 rng(seed);
      for (Vertex u = 0; u < spec.a; ++u) {
        for (Vertex v = u + 1; v < spec.a; ++v) {
          const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
          if (draw < spec.p) edges.push_back({u, v});
        }
      }
      return Graph(spec.a, edges);
    }
    case GraphSpec::Kind::kPetersen: {
      // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
      for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({i + 5, (i + 2) % 5 + 5});
      }
      return Graph(10, edges);
    }
  }
  throw ConfigError("unknown graph kind");
}

}  // namespace oddminor
