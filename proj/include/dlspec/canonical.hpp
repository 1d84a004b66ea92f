#pragma once

#include <string>

#include "dlspec/graph.hpp"

namespace dlspec {

inline constexpr int kDefaultCeiling = 12;
inline constexpr int kMaxCeiling = 16;

// Isomorphism certificate: two graphs have equal bytes iff they are
// isomorphic. bytes is the graph6 encoding of the canonical relabeling.
struct CanonicalForm {
  std::string bytes;

  auto operator<=>(const CanonicalForm&) const = default;
};

// Exact canonicalization; minimizes the graph6 bit string over all vertex
// orderings. Throws TooLarge above the ceiling (itself capped at 16).
CanonicalForm canonical_form(const Graph& g, int ceiling = kDefaultCeiling);
Graph canonical_relabel(const Graph& g, int ceiling = kDefaultCeiling);

bool are_isomorphic(const Graph& a, const Graph& b, int ceiling = kDefaultCeiling);

}  // namespace dlspec
