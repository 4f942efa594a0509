#ifndef ODDMINOR_GENERATE_H_
#define ODDMINOR_GENERATE_H_

#include <cstdint>
#include <span>
#include <string>

#include "oddminor/graph.h"

namespace oddminor {

/// One of the named families, or G(n, p).
struct GraphSpec {
  enum class Kind { kComplete, kCycle, kCompleteBipartite, kGnp, kPetersen };

  Kind kind = Kind::kComplete;
  int a = 0;  // t, n, or the first side size
  int b = 0;  // second side size of K_{a,b}
  double p = 0.0;

  static GraphSpec complete(int t) { return {Kind::kComplete, t, 0, 0.0}; }
  static GraphSpec cycle(int n) { return {Kind::kCycle, n, 0, 0.0}; }
  static GraphSpec complete_bipartite(int a, int b) { return {Kind::kCompleteBipartite, a, b, 0.0}; }
  static GraphSpec gnp(int n, double p) { return {Kind::kGnp, n, 0, p}; }
  static GraphSpec petersen() { return {Kind::kPetersen, 0, 0, 0.0}; }

  /// Parses the CLI form, e.g. {"gnp", "10", "0.3"} or {"petersen"}.
  /// Throws ConfigError on unknown kinds or bad arity.
  static GraphSpec parse(std::span<const std::string> words);
};

/// Deterministic in (spec, seed). Only G(n, p) consumes the seed: a
/// std::mt19937_64 seeded with `seed` draws one 64-bit word per pair (u, v),
/// u < v, in lexicographic order, and the pair becomes an edge iff the top
/// 53 bits scaled to [0, 1) are below p.
/// Throws ConfigError on non-positive sizes, cycles shorter than 3, or p
/// outside [0, 1].
Graph generate(const GraphSpec& spec, std::uint64_t seed = 0);

}  // namespace oddminor

#endif  // ODDMINOR_GENERATE_H_
