#pragma once

/**
 * Lower-bound colorings for r(K_{1,n}, K_{1,m}+e) and its star-critical
 * counterpart. Each generator certifies one branch and rejects parameters
 * outside it rather than falling back to another branch.
 *
 * Circulant ("standard regular") colorings place v_0..v_{N-1} on a convex
 * N-gon; edge {i, j} is red when its circular distance is in a chosen set,
 * optionally with some diameters {i, i + N/2} forced red.
 */

#include "starcrit/colored_graph.hpp"
#include "starcrit/formulas.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string_view>

namespace starcrit {

class ConstructionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct CirculantSpec {
  int order = 0;
  std::set<int> red_distances;
  /// Vertices i whose diameter {i, i + order/2} is red; even order only.
  std::set<Vertex> red_diagonals;
  std::optional<CaseTag> description;
};

/// Circular distance min(|i-j|, N-|i-j|).
int circular_distance(Vertex i, Vertex j, int order);

TwoColoring build_circulant(const CirculantSpec &spec);

/// n, m even, n <= m-2. K_{n+m-2}: red distances 1..(n-2)/2 and red
/// diameters at i = 0..(m-2)/2-1.
TwoColoring build_lemma1_case1(int n, int m);

/// n odd, n <= m-2. K_{n+m-1}: red distances 1..(n-1)/2.
TwoColoring build_lemma1_case2(int n, int m);

/// n even, m odd, n <= m-2. K_{n+m-1}: blue distances 1..(m-1)/2, red is
/// the complement.
TwoColoring build_lemma1_case3(int n, int m);

/// n >= 3. K_{2n}: red is two disjoint cliques {0..n-1} and {n..2n-1}, blue
/// is the complete bipartite graph between them.
TwoColoring build_lemma1_case4(int n);

/**
 * n, m even, n <= m-2. K_{n+m-2} + K_{1,n+m-3} over the case-1 core. The
 * pendant x is blue to the m-2 diameter endpoints, red to the other core
 * vertices, and not adjacent to v_{n+m-3}.
 */
TwoColoring extend_lemma2_case1(int n, int m);

/// n, m >= 3, n > m-2. K_{2n} + K_{1,n} over the case-4 core, with the
/// pendant blue to the part {0..n-1}.
TwoColoring extend_lemma2_case3(int n, int m);

/// Generator identifiers as used on the command line.
enum class Generator { l1c1, l1c2, l1c3, l1c4, l2c1, l2c3 };

std::string_view to_string(Generator g);
std::optional<Generator> parse_generator(std::string_view name);

/// Runs the named generator; l1c4 ignores m beyond its own precondition check.
TwoColoring generate(Generator g, int n, int m);

/// True when (n, m) lies in the generator's parameter domain.
bool generator_accepts(Generator g, int n, int m);

} // namespace starcrit
