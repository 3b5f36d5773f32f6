#include "starcrit/constructions.hpp"

#include <array>
#include <cstdlib>
#include <string>

namespace starcrit {

namespace {

std::string pair_text(int n, int m) {
  return "(n, m) = (" + std::to_string(n) + ", " + std::to_string(m) + ")";
}

void require(bool ok, std::string_view what, int n, int m) {
  if (!ok)
    throw ConstructionError(std::string(what) + " violated for " + pair_text(n, m));
}

bool is_even(int x) { return x % 2 == 0; }

void check_case1(int n, int m) {
  require(n >= 3 && m >= 3, "n, m >= 3", n, m);
  require(is_even(n) && is_even(m), "Lemma 1 case 1 precondition 'n and m both even'", n, m);
  require(n <= m - 2, "Lemma 1 case 1 precondition 'n <= m-2'", n, m);
}

void check_case2(int n, int m) {
  require(n >= 3 && m >= 3, "n, m >= 3", n, m);
  require(!is_even(n), "Lemma 1 case 2 precondition 'n odd'", n, m);
  require(n <= m - 2, "Lemma 1 case 2 precondition 'n <= m-2'", n, m);
}

void check_case3(int n, int m) {
  require(n >= 3 && m >= 3, "n, m >= 3", n, m);
  require(is_even(n) && !is_even(m), "Lemma 1 case 3 precondition 'n even and m odd'", n, m);
  require(n <= m - 2, "Lemma 1 case 3 precondition 'n <= m-2'", n, m);
}

void check_large_n(int n, int m) {
  require(n >= 3 && m >= 3, "n, m >= 3", n, m);
  require(n > m - 2, "precondition 'n > m-2'", n, m);
}

std::set<int> distance_range(int last) {
  std::set<int> out;
  for (int d = 1; d <= last; ++d)
    out.insert(d);
  return out;
}

} // namespace

int circular_distance(Vertex i, Vertex j, int order) {
  const int diff = std::abs(i - j);
  return diff < order - diff ? diff : order - diff;
}

TwoColoring build_circulant(const CirculantSpec &spec) {
  const int order = spec.order;
  if (order < 1 || order > kMaxVertices)
    throw ConstructionError("circulant order " + std::to_string(order) + " out of range");
  for (int d : spec.red_distances)
    if (d < 1 || d > order / 2)
      throw ConstructionError("red distance " + std::to_string(d) + " outside [1, " +
                              std::to_string(order / 2) + "]");
  if (!spec.red_diagonals.empty()) {
    if (order % 2 != 0)
      throw ConstructionError("diagonals require an even order, got " + std::to_string(order));
    if (spec.red_distances.contains(order / 2))
      throw ConstructionError("diagonals are already red through distance " +
                              std::to_string(order / 2));
  }
  for (Vertex i : spec.red_diagonals)
    if (i < 0 || i >= order)
      throw ConstructionError("diagonal vertex " + std::to_string(i) + " out of range");

  std::vector<VertexMask> rows(static_cast<std::size_t>(order), 0);
  for (Vertex i = 0; i < order; ++i)
    for (Vertex j = 0; j < order; ++j)
      if (i != j && spec.red_distances.contains(circular_distance(i, j, order)))
        rows[static_cast<std::size_t>(i)] |= bit(j);
  for (Vertex i : spec.red_diagonals) {
    const Vertex j = (i + order / 2) % order;
    rows[static_cast<std::size_t>(i)] |= bit(j);
    rows[static_cast<std::size_t>(j)] |= bit(i);
  }
  return TwoColoring(HostSpec::complete(order), std::move(rows));
}

TwoColoring build_lemma1_case1(int n, int m) {
  check_case1(n, m);
  CirculantSpec spec{n + m - 2, distance_range((n - 2) / 2), {}, CaseTag::both_even_small_n};
  for (Vertex i = 0; i < (m - 2) / 2; ++i)
    spec.red_diagonals.insert(i);
  return build_circulant(spec);
}

TwoColoring build_lemma1_case2(int n, int m) {
  check_case2(n, m);
  return build_circulant({n + m - 1, distance_range((n - 1) / 2), {}, CaseTag::odd_small_n});
}

TwoColoring build_lemma1_case3(int n, int m) {
  check_case3(n, m);
  const CirculantSpec blue{n + m - 1, distance_range((m - 1) / 2), {}, CaseTag::odd_small_n};
  return complemented(build_circulant(blue));
}

TwoColoring build_lemma1_case4(int n) {
  if (n < 3)
    throw ConstructionError("Lemma 1 case 4 requires n >= 3, got n = " + std::to_string(n));
  if (2 * n > kMaxVertices)
    throw ConstructionError("K_" + std::to_string(2 * n) + " exceeds the supported order");
  std::vector<VertexMask> rows(static_cast<std::size_t>(2 * n));
  const VertexMask first = low_mask(n);
  const VertexMask second = low_mask(2 * n) & ~first;
  for (Vertex v = 0; v < 2 * n; ++v)
    rows[static_cast<std::size_t>(v)] = (v < n ? first : second) & ~bit(v);
  return TwoColoring(HostSpec::complete(2 * n), std::move(rows));
}

TwoColoring extend_lemma2_case1(int n, int m) {
  check_case1(n, m);
  const TwoColoring core = build_lemma1_case1(n, m);
  const int order = n + m - 2;
  const HostSpec host = HostSpec::pendant_star(order, order - 1);
  const Vertex x = host.pendant();

  VertexMask diagonal_ends = 0;
  for (Vertex i = 0; i < (m - 2) / 2; ++i)
    diagonal_ends |= bit(i) | bit(i + order / 2);

  // Rotating by order/2 is an automorphism of the core that takes the
  // paper's skipped vertex v_{order/2-1} to v_{order-1}, which is the one
  // vertex the normalized host leaves unattached.
  const VertexMask attached = low_mask(order - 1);
  const VertexMask red_to_x = attached & ~diagonal_ends;

  std::vector<VertexMask> rows(static_cast<std::size_t>(order + 1), 0);
  for (Vertex v = 0; v < order; ++v) {
    rows[static_cast<std::size_t>(v)] = core.red_row(v);
    if (red_to_x & bit(v))
      rows[static_cast<std::size_t>(v)] |= bit(x);
  }
  rows[static_cast<std::size_t>(x)] = red_to_x;
  return TwoColoring(host, std::move(rows));
}

TwoColoring extend_lemma2_case3(int n, int m) {
  check_large_n(n, m);
  const TwoColoring core = build_lemma1_case4(n);
  const HostSpec host = HostSpec::pendant_star(2 * n, n);
  std::vector<VertexMask> rows(static_cast<std::size_t>(2 * n + 1), 0);
  for (Vertex v = 0; v < 2 * n; ++v)
    rows[static_cast<std::size_t>(v)] = core.red_row(v);
  // Pendant edges all blue.
  return TwoColoring(host, std::move(rows));
}

namespace {

constexpr std::array<std::pair<Generator, std::string_view>, 6> kGeneratorNames{{
    {Generator::l1c1, "l1c1"},
    {Generator::l1c2, "l1c2"},
    {Generator::l1c3, "l1c3"},
    {Generator::l1c4, "l1c4"},
    {Generator::l2c1, "l2c1"},
    {Generator::l2c3, "l2c3"},
}};

} // namespace

std::string_view to_string(Generator g) {
  for (const auto &[id, name] : kGeneratorNames)
    if (id == g)
      return name;
  return "unknown";
}

std::optional<Generator> parse_generator(std::string_view name) {
  for (const auto &[id, text] : kGeneratorNames)
    if (text == name)
      return id;
  return std::nullopt;
}

TwoColoring generate(Generator g, int n, int m) {
  switch (g) {
  case Generator::l1c1:
    return build_lemma1_case1(n, m);
  case Generator::l1c2:
    return build_lemma1_case2(n, m);
  case Generator::l1c3:
    return build_lemma1_case3(n, m);
  case Generator::l1c4:
    check_large_n(n, m);
    return build_lemma1_case4(n);
  case Generator::l2c1:
    return extend_lemma2_case1(n, m);
  case Generator::l2c3:
    return extend_lemma2_case3(n, m);
  }
  throw ConstructionError("unknown generator");
}

bool generator_accepts(Generator g, int n, int m) {
  if (n < 3 || m < 3)
    return false;
  const bool small_n = n <= m - 2;
  switch (g) {
  case Generator::l1c1:
  case Generator::l2c1:
    return small_n && is_even(n) && is_even(m);
  case Generator::l1c2:
    return small_n && !is_even(n);
  case Generator::l1c3:
    return small_n && is_even(n) && !is_even(m);
  case Generator::l1c4:
  case Generator::l2c3:
    return !small_n;
  }
  return false;
}

} // namespace starcrit
