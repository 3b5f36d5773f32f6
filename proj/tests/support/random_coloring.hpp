#pragma once

// Seeded random colorings for property tests.

#include "starcrit/colored_graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace starcrit::testing {

/// Each host edge is red with probability `red_probability`.
inline TwoColoring random_coloring(const HostSpec &host, std::mt19937_64 &rng,
                                   double red_probability = 0.5) {
  std::bernoulli_distribution coin(red_probability);
  std::vector<Edge> red;
  for (const Edge &e : host.edges())
    if (coin(rng))
      red.push_back(e);
  return TwoColoring::from_red_edges(host, red);
}

/// Coloring whose red edges are the set bits of `pattern`, indexed by the
/// host's lexicographic edge order.
inline TwoColoring coloring_from_pattern(const HostSpec &host, std::uint64_t pattern) {
  const std::vector<Edge> edges = host.edges();
  std::vector<Edge> red;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (pattern >> i & 1U)
      red.push_back(edges[i]);
  return TwoColoring::from_red_edges(host, red);
}

} // namespace starcrit::testing
