#include "starcrit/constructions.hpp"
#include "starcrit/detectors.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace starcrit;

namespace {

// Degree histogram: red degree -> number of vertices.
std::map<int, int> red_degree_profile(const TwoColoring &c) {
  std::map<int, int> out;
  for (Vertex v = 0; v < c.vertex_count(); ++v)
    ++out[red_degree(c, v)];
  return out;
}

bool blue_triangle_free(const TwoColoring &c) {
  const int order = c.vertex_count();
  for (Vertex a = 0; a < order; ++a)
    for (Vertex b = a + 1; b < order; ++b)
      for (Vertex d = b + 1; d < order; ++d)
        if (c.is_blue(a, b) && c.is_blue(b, d) && c.is_blue(a, d))
          return false;
  return true;
}

} // namespace

TEST_CASE("build_circulant") {
  const TwoColoring cycle = build_circulant({7, {1}, {}, {}});
  for (Vertex v = 0; v < 7; ++v) {
    CHECK(red_degree(cycle, v) == 2);
    CHECK(cycle.is_red(v, (v + 1) % 7));
  }

  CHECK(build_circulant({4, {}, {}, {}}) == TwoColoring::all_blue(HostSpec::complete(4)));

  const TwoColoring fig1 = build_circulant({16, {1, 2, 3}, {0, 1, 2, 3}, {}});
  CHECK(red_degree_profile(fig1) == std::map<int, int>{{6, 8}, {7, 8}});
  CHECK(fig1 == build_lemma1_case1(8, 10));

  CHECK_THROWS_AS(build_circulant({7, {4}, {}, {}}), ConstructionError);
  CHECK_THROWS_AS(build_circulant({7, {0}, {}, {}}), ConstructionError);
  CHECK_THROWS_AS(build_circulant({7, {1}, {0}, {}}), ConstructionError);
  CHECK_THROWS_AS(build_circulant({8, {4}, {0}, {}}), ConstructionError);
}

TEST_CASE("circulant colors are independent of endpoint order") {
  for (int order = 2; order <= 20; ++order) {
    std::set<int> dists;
    for (int d = 1; d <= order / 2; d += 2)
      dists.insert(d);
    const TwoColoring c = build_circulant({order, dists, {}, {}});
    for (Vertex i = 0; i < order; ++i)
      for (Vertex j = 0; j < order; ++j)
        CHECK(c.is_red(i, j) == c.is_red(j, i));
  }
}

TEST_CASE("Lemma 1 case 1") {
  const TwoColoring c = build_lemma1_case1(4, 6);
  CHECK(c.vertex_count() == 8);
  CHECK(c == build_circulant({8, {1}, {0, 1}, {}}));
  CHECK_FALSE(has_red_star(c, 4));
  CHECK_FALSE(has_blue_star_plus_edge(c, 6));

  for (int m = 6; m <= 20; m += 2)
    for (int n = 4; n <= m - 2; n += 2) {
      const TwoColoring cc = build_lemma1_case1(n, m);
      CHECK(red_degree_profile(cc) == std::map<int, int>{{n - 2, n}, {n - 1, m - 2}});
      for (Vertex v = 0; v < cc.vertex_count(); ++v) {
        const int blue = blue_degree(cc, v);
        CHECK((blue == m - 2 || blue == m - 1));
      }
    }

  CHECK_THROWS_AS(build_lemma1_case1(4, 5), ConstructionError);
  CHECK_THROWS_AS(build_lemma1_case1(6, 6), ConstructionError);
  CHECK_THROWS_AS(build_lemma1_case1(3, 6), ConstructionError);
}

TEST_CASE("Lemma 1 case 2") {
  const TwoColoring c = build_lemma1_case2(3, 5);
  CHECK(c.vertex_count() == 7);
  for (Vertex v = 0; v < 7; ++v) {
    CHECK(red_degree(c, v) == 2);
    CHECK(blue_degree(c, v) == 4);
  }

  const TwoColoring c11 = build_lemma1_case2(5, 7);
  CHECK(c11.vertex_count() == 11);
  CHECK(c11 == build_circulant({11, {1, 2}, {}, {}}));
  CHECK(red_degree_profile(c11) == std::map<int, int>{{4, 11}});

  // Blue degree is (n+m-2) - (n-1) = m-1 for every vertex.
  for (int n = 3; n <= 15; n += 2)
    for (int m = n + 2; m <= 20; ++m) {
      const TwoColoring cc = build_lemma1_case2(n, m);
      CHECK(red_degree_profile(cc) == std::map<int, int>{{n - 1, n + m - 1}});
      CHECK(blue_degree(cc, 0) == m - 1);
    }

  CHECK_THROWS_AS(build_lemma1_case2(4, 6), ConstructionError);
  CHECK_THROWS_AS(build_lemma1_case2(5, 6), ConstructionError);
}

TEST_CASE("Lemma 1 case 3") {
  const TwoColoring c = build_lemma1_case3(4, 7);
  CHECK(c.vertex_count() == 10);
  CHECK(complemented(c) == build_circulant({10, {1, 2, 3}, {}, {}}));
  for (Vertex v = 0; v < 10; ++v) {
    CHECK(blue_degree(c, v) == 6);
    CHECK(red_degree(c, v) == 3);
  }

  const TwoColoring c12 = build_lemma1_case3(4, 9);
  CHECK(c12.vertex_count() == 12);
  for (Vertex v = 0; v < 12; ++v)
    CHECK(blue_degree(c12, v) == 8);

  CHECK_THROWS_AS(build_lemma1_case3(5, 7), ConstructionError);
  CHECK_THROWS_AS(build_lemma1_case3(4, 8), ConstructionError);
}

TEST_CASE("Lemma 1 case 4") {
  const TwoColoring c = build_lemma1_case4(3);
  CHECK(c.vertex_count() == 6);
  CHECK(c.red_edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(c.blue_edges().size() == 9);

  for (int n = 3; n <= 20; ++n) {
    const TwoColoring cc = build_lemma1_case4(n);
    CHECK(red_degree_profile(cc) == std::map<int, int>{{n - 1, 2 * n}});
    if (n <= 10)
      CHECK(blue_triangle_free(cc));
    CHECK_FALSE(has_blue_star_plus_edge(cc, 2));
  }
  CHECK_THROWS_AS(build_lemma1_case4(2), ConstructionError);
}

TEST_CASE("Lemma 2 case 1 extension") {
  const TwoColoring fig4 = extend_lemma2_case1(8, 14);
  CHECK(fig4.host() == HostSpec{20, 19});
  const Vertex x = fig4.host().pendant();
  CHECK(blue_degree(fig4, x) == 12);
  CHECK(red_degree(fig4, x) == 7);
  CHECK(restrict(fig4, std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16,
                                           17, 18, 19}) == build_lemma1_case1(8, 14));

  // x is blue exactly to the diameter endpoints i and i+10 for i < 6.
  for (Vertex v = 0; v < 19; ++v) {
    const bool diagonal_end = v < 6 || (v >= 10 && v < 16);
    CHECK(fig4.is_blue(x, v) == diagonal_end);
  }

  const TwoColoring small = extend_lemma2_case1(4, 6);
  CHECK(small.host() == HostSpec{8, 7});
  CHECK(is_good_coloring(small, {4, 6}));

  CHECK_THROWS_AS(extend_lemma2_case1(3, 6), ConstructionError);
}

TEST_CASE("Lemma 2 case 3 extension") {
  const TwoColoring fig5 = extend_lemma2_case3(6, 7);
  CHECK(fig5.host() == HostSpec{12, 6});
  CHECK(red_degree(fig5, 12) == 0);
  CHECK(blue_neighborhood(fig5, 12) == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  CHECK(blue_triangle_free(fig5));

  const TwoColoring small = extend_lemma2_case3(3, 3);
  CHECK(small.host() == HostSpec{6, 3});
  CHECK_FALSE(has_red_star(small, 3));
  CHECK_FALSE(has_blue_star_plus_edge(small, 3));

  CHECK_THROWS_AS(extend_lemma2_case3(4, 7), ConstructionError);
}

TEST_CASE("every generator is good on its own domain") {
  int checked = 0;
  for (Generator g : {Generator::l1c1, Generator::l1c2, Generator::l1c3, Generator::l1c4,
                      Generator::l2c1, Generator::l2c3})
    for (int n = 3; n <= 20; ++n)
      for (int m = 3; m <= 20; ++m) {
        if (!generator_accepts(g, n, m)) {
          CHECK_THROWS_AS(generate(g, n, m), ConstructionError);
          continue;
        }
        CHECK_MESSAGE(is_good_coloring(generate(g, n, m), {n, m}), to_string(g) << " " << n << " " << m);
        ++checked;
      }
  CHECK(checked > 100);
}

TEST_CASE("generator names") {
  CHECK(parse_generator("l2c3") == Generator::l2c3);
  CHECK(to_string(Generator::l1c2) == "l1c2");
  CHECK_FALSE(parse_generator("l2c2"));
}
