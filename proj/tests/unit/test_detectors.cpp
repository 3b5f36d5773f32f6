#include "starcrit/constructions.hpp"
#include "starcrit/detectors.hpp"

#include "../support/random_coloring.hpp"

#include <doctest.h>

using namespace starcrit;

TEST_CASE("red star") {
  const TwoColoring fig1 = build_lemma1_case1(8, 10);
  CHECK_FALSE(has_red_star(fig1, 8));
  CHECK(has_red_star(fig1, 7));
  const TwoColoring blue5 = TwoColoring::all_blue(HostSpec::complete(5));
  for (int n = 1; n <= 5; ++n)
    CHECK_FALSE(has_red_star(blue5, n));
  CHECK_THROWS_AS(has_red_star(blue5, 0), InvalidTarget);
}

TEST_CASE("blue star plus edge") {
  CHECK_FALSE(has_blue_star_plus_edge(build_lemma1_case4(6), 7));
  CHECK(has_blue_star_plus_edge(TwoColoring::all_blue(HostSpec::complete(4)), 3));
  CHECK_FALSE(has_blue_star_plus_edge(TwoColoring::all_blue(HostSpec::complete(4)), 4));
  CHECK_FALSE(has_blue_star_plus_edge(build_lemma1_case2(3, 5), 5));
  CHECK_THROWS_AS(has_blue_star_plus_edge(build_lemma1_case2(3, 5), 1), InvalidTarget);

  // m = 2 asks for a blue triangle.
  CHECK(has_blue_star_plus_edge(TwoColoring::all_blue(HostSpec::complete(3)), 2));
  CHECK_FALSE(has_blue_star_plus_edge(build_lemma1_case4(3), 2));
}

TEST_CASE("blue star plus edge needs the edge inside the neighborhood") {
  // Blue star K_{1,3} centered at 0 with every leaf pair red, plus blue
  // edges hanging off the leaves towards vertex 4.
  const HostSpec k5 = HostSpec::complete(5);
  const std::vector<Edge> red{{0, 4}, {1, 2}, {1, 3}, {2, 3}};
  const TwoColoring c = TwoColoring::from_red_edges(k5, red);
  CHECK(blue_degree(c, 0) == 3);
  CHECK_FALSE(has_blue_star_plus_edge(c, 3));
  CHECK(naive_contains_oracle(c, {5, 3}) == false);
}

TEST_CASE("pendant vertex is both center and leaf") {
  // K_3 + K_{1,2}, all blue: x is joined to 0 and 1, which are blue-joined.
  const TwoColoring c = TwoColoring::all_blue(HostSpec::pendant_star(3, 2));
  CHECK(has_blue_star_plus_edge(c, 2));
  CHECK(has_blue_star_plus_edge(c, 3));
  // Non-adjacent pairs x-2 are neither color, so vertex 2 has blue degree 2.
  CHECK(blue_degree(c, 2) == 2);
  CHECK_FALSE(has_blue_star_plus_edge(c, 4));
}

TEST_CASE("is_good_coloring") {
  CHECK(is_good_coloring(build_lemma1_case4(6), {6, 7}));
  CHECK_FALSE(is_good_coloring(TwoColoring::all_red(HostSpec::complete(7)), {3, 3}));
  CHECK(is_good_coloring(extend_lemma2_case1(4, 6), {4, 6}));
  CHECK_THROWS_AS(is_good_coloring(build_lemma1_case4(3), {0, 3}), InvalidTarget);
}

TEST_CASE("naive oracle") {
  CHECK(naive_contains_oracle(TwoColoring::all_blue(HostSpec::complete(4)), {1, 3}));
  CHECK_FALSE(naive_contains_oracle(build_lemma1_case2(3, 5), {3, 5}));
  CHECK_THROWS_AS(naive_contains_oracle(build_lemma1_case4(5), {3, 3}), std::length_error);
}

TEST_CASE("oracle agrees with detectors on every coloring of K_6") {
  const HostSpec k6 = HostSpec::complete(6);
  long disagreements = 0;
  for (std::uint64_t pattern = 0; pattern < (1U << 15); ++pattern) {
    const TwoColoring c = testing::coloring_from_pattern(k6, pattern);
    for (int n = 1; n <= 5; ++n)
      for (int m = 2; m <= 5; ++m)
        if (naive_contains_oracle(c, {n, m}) == is_good_coloring(c, {n, m}))
          ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("oracle agrees with detectors on random pendant hosts") {
  std::mt19937_64 rng(4242);
  long disagreements = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const HostSpec host{8, 1 + trial % 8};
    const TwoColoring c = testing::random_coloring(host, rng, 0.25 + 0.5 * (trial % 3) / 2.0);
    for (int n = 1; n <= 7; ++n)
      for (int m = 2; m <= 7; ++m)
        if (naive_contains_oracle(c, {n, m}) == is_good_coloring(c, {n, m}))
          ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("detectors are monotone in their own color") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const HostSpec host{10, trial % 4 == 0 ? 5 : 0};
    const TwoColoring c = testing::random_coloring(host, rng);
    const std::vector<Edge> red = c.red_edges();
    const std::vector<Edge> blue = c.blue_edges();
    for (int n = 1; n <= 6; ++n) {
      if (!has_red_star(c, n) || blue.empty())
        continue;
      std::vector<Edge> more_red = red;
      more_red.push_back(blue[static_cast<std::size_t>(trial) % blue.size()]);
      CHECK(has_red_star(TwoColoring::from_red_edges(host, more_red), n));
    }
    for (int m = 2; m <= 6; ++m) {
      if (!has_blue_star_plus_edge(c, m) || red.empty())
        continue;
      std::vector<Edge> less_red = red;
      less_red.erase(less_red.begin() + static_cast<long>(static_cast<std::size_t>(trial) % red.size()));
      CHECK(has_blue_star_plus_edge(TwoColoring::from_red_edges(host, less_red), m));
    }
  }
}

TEST_CASE("targets in a restriction are targets in the whole") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const TwoColoring c = testing::random_coloring(HostSpec::complete(9), rng);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < 9; ++v)
      if ((trial >> (v % 5)) & 1 || v == 0)
        keep.push_back(v);
    const TwoColoring sub = restrict(c, keep);
    for (int n = 1; n <= 5; ++n)
      for (int m = 2; m <= 5; ++m)
        if (!is_good_coloring(sub, {n, m}))
          CHECK_FALSE(is_good_coloring(c, {n, m}));
  }
}
