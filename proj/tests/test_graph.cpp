#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "twhad/errors.hpp"
#include "twhad/graph.hpp"

using namespace twh;

TEST_CASE("graph basics and invariants") {
  Graph g(4, {{0, 1}, {1, 2}, {1, 2}});  // parallel edge collapses
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), ValidationError);
  CHECK_THROWS_AS(Graph(2, {{0, 5}}), ValidationError);
}

TEST_CASE("grid vertex and edge counts match closed forms") {
  for (int m = 1; m <= 12; ++m)
    for (int n = 1; n <= 12; ++n) {
      auto [g, coords] = make_grid(m, n);
      CHECK(g.vertex_count() == m * n);
      CHECK(g.edge_count() == m * (n - 1) + n * (m - 1));
      CHECK(coords.vertex(1, 1) == 0);
      CHECK(coords.coord(g.vertex_count() - 1) == std::pair<int, int>{m, n});
    }
  CHECK_THROWS_AS(make_grid(0, 3), std::invalid_argument);
}

TEST_CASE("degenerate and small grids") {
  auto g11 = make_grid(1, 1).graph;
  CHECK(g11.vertex_count() == 1);
  CHECK(g11.edge_count() == 0);
  CHECK(isomorphic_small(make_grid(2, 2).graph, cycle_graph(4)));
  auto g33 = make_grid(3, 3).graph;
  CHECK(g33.vertex_count() == 9);
  CHECK(g33.edge_count() == 12);
}

TEST_CASE("strong grid matches the king-move definition") {
  CHECK(isomorphic_small(make_strong_grid(2, 2).graph, complete_graph(4)));
  CHECK(isomorphic_small(make_strong_grid(1, 5).graph, path_graph(5)));

  // Edge count of the 3x3 strong grid, derived by enumerating coordinate
  // pairs with both gaps at most one.
  auto [g, coords] = make_strong_grid(3, 3);
  int expected = 0;
  for (int r1 = 1; r1 <= 3; ++r1)
    for (int c1 = 1; c1 <= 3; ++c1)
      for (int r2 = 1; r2 <= 3; ++r2)
        for (int c2 = 1; c2 <= 3; ++c2) {
          if (std::pair{r1, c1} >= std::pair{r2, c2}) continue;
          if (std::abs(r1 - r2) <= 1 && std::abs(c1 - c2) <= 1) ++expected;
        }
  CHECK(expected == 20);
  CHECK(g.edge_count() == expected);
  for (int r1 = 1; r1 <= 3; ++r1)
    for (int c1 = 1; c1 <= 3; ++c1)
      for (int r2 = 1; r2 <= 3; ++r2)
        for (int c2 = 1; c2 <= 3; ++c2) {
          if (std::pair{r1, c1} == std::pair{r2, c2}) continue;
          bool adj = std::abs(r1 - r2) <= 1 && std::abs(c1 - c2) <= 1;
          CHECK(g.has_edge(coords.vertex(r1, c1), coords.vertex(r2, c2)) == adj);
        }
}

TEST_CASE("subdivision of a triangle with length 2 is a hexagon") {
  auto sub = subdivide_uniform(complete_graph(3), 2);
  CHECK(sub.proper);
  CHECK(isomorphic_small(sub.graph, cycle_graph(6)));
}

TEST_CASE("length-1 subdivision is the identity") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = testing::random_graph(rng, rng.range(1, 8), 0.4);
    auto sub = subdivide_uniform(g, 1);
    CHECK(sub.graph == g);
    if (g.edge_count() > 0) CHECK_FALSE(sub.proper);
  }
}

TEST_CASE("length-3 subdivision of the claw has 10 vertices") {
  Graph claw(4, {{0, 1}, {0, 2}, {0, 3}});
  auto sub = subdivide_uniform(claw, 3);
  CHECK(sub.graph.vertex_count() == 10);
  CHECK(sub.graph.edge_count() == 9);
  CHECK(sub.proper);
  CHECK_THROWS_AS(subdivide_uniform(claw, 0), std::invalid_argument);
}

TEST_CASE("proper subdivisions preserve exactly the high-degree vertices") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = testing::random_graph(rng, rng.range(2, 8), 0.5);
    std::map<Edge, int> lengths;
    for (auto e : g.edges()) lengths[e] = rng.range(2, 4);
    auto sub = subdivide(g, lengths);
    for (int v = 0; v < g.vertex_count(); ++v)
      CHECK(sub.graph.degree(v) == g.degree(v));
    for (int v = g.vertex_count(); v < sub.graph.vertex_count(); ++v)
      CHECK(sub.graph.degree(v) == 2);
  }
}

TEST_CASE("1-subdivisions are triangle-free and bipartite") {
  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = testing::random_graph(rng, rng.range(1, 8), 0.6);
    auto sub = subdivide_uniform(g, 2);
    CHECK_FALSE(sub.graph.has_triangle());
    CHECK(sub.graph.is_bipartite());
  }
}

TEST_CASE("path powers") {
  CHECK(isomorphic_small(make_path_power(5, 1), path_graph(5)));
  CHECK(isomorphic_small(make_path_power(4, 3), complete_graph(4)));
  // n*t - t(t+1)/2 edges when t < n
  CHECK(make_path_power(9, 3).edge_count() == 9 * 3 - 3 * 4 / 2);
  CHECK_THROWS_AS(make_path_power(0, 1), std::invalid_argument);
}

TEST_CASE("cyclic betweenness on the listed order") {
  CyclicOrder c({1, 2, 3, 4});
  CHECK(cyclic_between(c, 1, 2, 3));
  CHECK_FALSE(cyclic_between(c, 1, 3, 2));
  CHECK(cyclic_between(c, 3, 4, 1));
  CHECK_THROWS_AS(cyclic_between(c, 1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_between(c, 1, 2, 9), ValidationError);
  CHECK_THROWS_AS(CyclicOrder({1, 2, 1}), ValidationError);
}

TEST_CASE("cyclic order satisfies the four ternary axioms") {
  Rng rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    int n = rng.range(3, 10);
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i * 3 + 1;
    for (int i = n - 1; i > 0; --i)
      std::swap(labels[i], labels[rng.range(0, i)]);
    CyclicOrder c(labels);
    for (int a : labels)
      for (int b : labels)
        for (int x : labels) {
          if (a == b || a == x || b == x) continue;
          bool abx = c.between(a, b, x);
          // rotation
          CHECK(abx == c.between(b, x, a));
          // antisymmetry
          if (abx) CHECK_FALSE(c.between(a, x, b));
          // totality
          CHECK((abx || c.between(a, x, b)));
          // transitivity
          if (abx)
            for (int d : labels) {
              if (d == a || d == b || d == x) continue;
              if (c.between(a, x, d)) CHECK(c.between(a, b, d));
            }
        }
  }
}

TEST_CASE("cyclic order canonical rotation") {
  CHECK(CyclicOrder({3, 4, 1, 2}) == CyclicOrder({1, 2, 3, 4}));
  CHECK_FALSE(CyclicOrder({1, 3, 2, 4}) == CyclicOrder({1, 2, 3, 4}));
}

TEST_CASE("chord crossing predicate") {
  CyclicOrder c({0, 1, 2, 3});
  CHECK(chords_cross(c, 0, 2, 1, 3));
  CHECK_FALSE(chords_cross(c, 0, 1, 2, 3));
}
