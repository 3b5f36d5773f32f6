#include "starcrit/detectors.hpp"

#include <string>

namespace starcrit {

void TargetPair::validate() const {
  if (n < 1)
    throw InvalidTarget("red star size n must be >= 1, got " + std::to_string(n));
  if (m < 2)
    throw InvalidTarget("blue star-plus-edge size m must be >= 2, got " + std::to_string(m));
}

bool has_red_star(const TwoColoring &c, int n) {
  if (n < 1)
    throw InvalidTarget("red star size n must be >= 1, got " + std::to_string(n));
  for (Vertex v = 0; v < c.vertex_count(); ++v)
    if (red_degree(c, v) >= n)
      return true;
  return false;
}

bool has_blue_star_plus_edge(const TwoColoring &c, int m) {
  if (m < 2)
    throw InvalidTarget("blue star-plus-edge size m must be >= 2, got " + std::to_string(m));
  for (Vertex v = 0; v < c.vertex_count(); ++v) {
    const VertexMask nb = c.blue_row(v);
    if (popcount(nb) < m)
      continue;
    bool inner_edge = false;
    for_each_bit(nb, [&](Vertex u) { inner_edge = inner_edge || (c.blue_row(u) & nb) != 0; });
    if (inner_edge)
      return true;
  }
  return false;
}

bool is_good_coloring(const TwoColoring &c, TargetPair t) {
  t.validate();
  return !has_red_star(c, t.n) && !has_blue_star_plus_edge(c, t.m);
}

namespace {

// Leaf sets are subsets of the other vertices, enumerated as raw masks over
// the whole vertex range; adjacency is read one pair at a time.
bool oracle_red_star(const TwoColoring &c, int n) {
  const int order = c.vertex_count();
  for (Vertex center = 0; center < order; ++center) {
    for (VertexMask leaves = 0; leaves < (VertexMask{1} << order); ++leaves) {
      if ((leaves & bit(center)) || popcount(leaves) != n)
        continue;
      bool all_red = true;
      for (Vertex leaf = 0; leaf < order && all_red; ++leaf)
        if ((leaves & bit(leaf)) && !c.is_red(center, leaf))
          all_red = false;
      if (all_red)
        return true;
    }
  }
  return false;
}

bool oracle_blue_star_plus_edge(const TwoColoring &c, int m) {
  const int order = c.vertex_count();
  for (Vertex center = 0; center < order; ++center) {
    for (VertexMask leaves = 0; leaves < (VertexMask{1} << order); ++leaves) {
      if ((leaves & bit(center)) || popcount(leaves) != m)
        continue;
      bool all_blue = true;
      for (Vertex leaf = 0; leaf < order && all_blue; ++leaf)
        if ((leaves & bit(leaf)) && !c.is_blue(center, leaf))
          all_blue = false;
      if (!all_blue)
        continue;
      for (Vertex a = 0; a < order; ++a)
        for (Vertex b = a + 1; b < order; ++b)
          if ((leaves & bit(a)) && (leaves & bit(b)) && c.is_blue(a, b))
            return true;
    }
  }
  return false;
}

} // namespace

bool naive_contains_oracle(const TwoColoring &c, TargetPair t) {
  t.validate();
  if (c.vertex_count() > kOracleMaxVertices)
    throw std::length_error("naive oracle limited to " + std::to_string(kOracleMaxVertices) +
                            " vertices, host has " + std::to_string(c.vertex_count()));
  return oracle_red_star(c, t.n) || oracle_blue_star_plus_edge(c, t.m);
}

} // namespace starcrit
