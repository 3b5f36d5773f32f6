#pragma once

// Presence tests for a red K_{1,n} and a blue K_{1,m}+e, plus a slow
// enumeration oracle used to validate them.

#include "starcrit/colored_graph.hpp"

#include <stdexcept>

namespace starcrit {

class InvalidTarget : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// G = K_{1,n} in red, H = K_{1,m}+e in blue.
struct TargetPair {
  int n = 1;
  int m = 2;

  /// Throws InvalidTarget unless n >= 1 and m >= 2.
  void validate() const;

  friend bool operator==(const TargetPair &, const TargetPair &) = default;
};

/// Some vertex has red degree >= n.
bool has_red_star(const TwoColoring &c, int n);

/// Some vertex v has blue degree >= m and a blue edge inside its blue
/// neighborhood. The center of K_{1,m}+e is its unique vertex of degree m,
/// so this is exact.
bool has_blue_star_plus_edge(const TwoColoring &c, int m);

/// Neither target present, i.e. the coloring shows the host does not arrow.
bool is_good_coloring(const TwoColoring &c, TargetPair t);

inline constexpr int kOracleMaxVertices = 9;

/**
 * Enumerates centers, leaf sets and leaf edges explicitly. Returns true when
 * a red K_{1,n} or a blue K_{1,m}+e is present. Refuses hosts with more
 * than kOracleMaxVertices vertices.
 */
bool naive_contains_oracle(const TwoColoring &c, TargetPair t);

} // namespace starcrit
