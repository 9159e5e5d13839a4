#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "twhad/errors.hpp"
#include "twhad/grid_dichotomy.hpp"

using namespace twh;

namespace {

DichotomyInput grid_input(int k, int t, const std::vector<Edge>& extra = {}) {
  int side = t * (2 * k + 1);
  auto [g, coords] = make_grid(side, side);
  auto edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return DichotomyInput{Graph(side * side, edges), coords, k, t};
}

// One deterministic jump inside the interior of every block (needs k >= 2).
std::vector<Edge> jumps_in_every_block(int k, int t) {
  int side = 2 * k + 1;
  GridCoordMap coords{t * side, t * side};
  std::vector<Edge> jumps;
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b) {
      int u = coords.vertex(a * side + 2, b * side + 2);
      int v = coords.vertex(a * side + 4, b * side + 2);
      jumps.push_back({std::min(u, v), std::max(u, v)});
    }
  return jumps;
}

}  // namespace

TEST_CASE("input validation") {
  CHECK_THROWS_AS(grid_dichotomy(DichotomyInput{Graph(4), {2, 2}, 1, 1}),
                  ValidationError);
  auto missing = make_grid(3, 3);
  auto edges = missing.graph.edges();
  edges.pop_back();
  CHECK_THROWS_AS(
      grid_dichotomy(DichotomyInput{Graph(9, edges), missing.coords, 1, 1}),
      ValidationError);
}

TEST_CASE("pure grids always take the induced branch") {
  for (int k = 1; k <= 2; ++k)
    for (int t = 1; t <= 2; ++t) {
      auto in = grid_input(k, t);
      auto result = grid_dichotomy(in);
      REQUIRE(result.induced_grid.has_value());
      CHECK(result.jump_free_block == std::pair<int, int>{0, 0});
      CHECK_FALSE(result.clique.has_value());
      CHECK_NOTHROW(validate_model(in.host, *result.induced_grid));
      CHECK(result.induced_grid->pattern == make_grid(k, k).graph);
    }
}

TEST_CASE("blocks of width 3 have no room for interior jumps") {
  // With k = 1 the block interior is a single cell, so the induced branch
  // is forced no matter how many long edges the host carries.
  auto in = grid_input(1, 2, {{0, 14}, {3, 21}});
  auto result = grid_dichotomy(in);
  REQUIRE(result.induced_grid.has_value());
  CHECK(result.induced_grid->pattern == make_grid(1, 1).graph);
}

TEST_CASE("jumps in every block force the clique branch") {
  SUBCASE("k = 2, t = 2") {
    auto in = grid_input(2, 2, jumps_in_every_block(2, 2));
    auto result = grid_dichotomy(in);
    REQUIRE(result.clique.has_value());
    CHECK_FALSE(result.induced_grid.has_value());
    CHECK(result.clique->pattern == complete_graph(2));
    CHECK_NOTHROW(validate_model(in.host, *result.clique));
  }
  SUBCASE("k = 2, t = 1") {
    auto in = grid_input(2, 1, jumps_in_every_block(2, 1));
    auto result = grid_dichotomy(in);
    REQUIRE(result.clique.has_value());
    CHECK(result.clique->pattern == complete_graph(1));
  }
  SUBCASE("vertical and horizontal jumps both work") {
    int side = 5;
    GridCoordMap coords{side, side};
    for (auto jump : std::vector<Edge>{
             {coords.vertex(2, 2), coords.vertex(4, 2)},   // rows
             {coords.vertex(2, 2), coords.vertex(2, 4)},   // columns
             {coords.vertex(3, 2), coords.vertex(2, 4)},   // mixed
         }) {
      auto in = grid_input(2, 1, {{std::min(jump.first, jump.second),
                                   std::max(jump.first, jump.second)}});
      auto result = grid_dichotomy(in);
      REQUIRE(result.clique.has_value());
      CHECK_NOTHROW(validate_model(in.host, *result.clique));
    }
  }
}

TEST_CASE("random jump augmentations validate for all small k, t") {
  Rng rng(113);
  for (int k = 1; k <= 2; ++k)
    for (int t = 1; t <= 2; ++t) {
      for (int trial = 0; trial < 50; ++trial) {
        int side = t * (2 * k + 1);
        GridCoordMap coords{side, side};
        std::vector<Edge> extra;
        // random interior jumps per block
        for (int a = 0; a < t; ++a)
          for (int b = 0; b < t; ++b) {
            if (k < 2 || !rng.chance(0.7)) continue;
            int lo_r = a * (2 * k + 1) + 2, lo_c = b * (2 * k + 1) + 2;
            int hi_r = (a + 1) * (2 * k + 1) - 1, hi_c = (b + 1) * (2 * k + 1) - 1;
            int r1 = rng.range(lo_r, hi_r), c1 = rng.range(lo_c, hi_c);
            int r2 = rng.range(lo_r, hi_r), c2 = rng.range(lo_c, hi_c);
            if (std::abs(r1 - r2) < 2 && std::abs(c1 - c2) < 2) continue;
            int u = coords.vertex(r1, c1), v = coords.vertex(r2, c2);
            extra.push_back({std::min(u, v), std::max(u, v)});
          }
        // plus a few arbitrary long edges anywhere
        for (int i = 0; i < 3; ++i) {
          if (!rng.chance(0.5)) continue;
          int u = (int)rng.below(side * side), v = (int)rng.below(side * side);
          if (u == v) continue;
          extra.push_back({std::min(u, v), std::max(u, v)});
        }
        auto in = grid_input(k, t, extra);
        auto result = grid_dichotomy(in);
        if (result.induced_grid) {
          CHECK_NOTHROW(validate_model(in.host, *result.induced_grid));
          // the winning block really is jump-free
          REQUIRE(result.jump_free_block.has_value());
          auto [a, b] = *result.jump_free_block;
          int lo_r = a * (2 * k + 1) + 2, lo_c = b * (2 * k + 1) + 2;
          int hi_r = (a + 1) * (2 * k + 1) - 1, hi_c = (b + 1) * (2 * k + 1) - 1;
          for (int r1 = lo_r; r1 <= hi_r; ++r1)
            for (int c1 = lo_c; c1 <= hi_c; ++c1)
              for (int r2 = lo_r; r2 <= hi_r; ++r2)
                for (int c2 = lo_c; c2 <= hi_c; ++c2) {
                  if (std::abs(r1 - r2) >= 2 || std::abs(c1 - c2) >= 2)
                    CHECK_FALSE(in.host.has_edge(coords.vertex(r1, c1),
                                                 coords.vertex(r2, c2)));
                }
        } else {
          REQUIRE(result.clique.has_value());
          CHECK_NOTHROW(validate_model(in.host, *result.clique));
        }
      }
    }
}

TEST_CASE("certificates compose back into an arbitrary original host") {
  // The dichotomy host is itself presented as an induced minor of a larger
  // graph; lifting the certificate through that model must still validate.
  Rng rng(409);
  for (int trial = 0; trial < 10; ++trial) {
    int k = rng.range(1, 2), t = rng.range(1, 2);
    auto in = grid_input(k, t);
    int n = in.host.vertex_count();
    // outer host: every grid vertex becomes a 1- or 2-vertex blob
    std::vector<std::vector<int>> blobs(n);
    std::vector<Edge> outer_edges;
    int next = 0;
    for (int v = 0; v < n; ++v) {
      int size = rng.chance(0.3) ? 2 : 1;
      for (int i = 0; i < size; ++i) blobs[v].push_back(next++);
      if (size == 2) outer_edges.push_back({blobs[v][0], blobs[v][1]});
    }
    for (auto [u, v] : in.host.edges()) {
      int a = blobs[u][(int)rng.below(blobs[u].size())];
      int b = blobs[v][(int)rng.below(blobs[v].size())];
      outer_edges.push_back({std::min(a, b), std::max(a, b)});
    }
    Graph outer_host(next, outer_edges);
    InducedMinorModel outer{in.host, blobs};
    validate_model(outer_host, outer);

    auto result = grid_dichotomy(in);
    REQUIRE(result.induced_grid.has_value());
    auto lifted = compose_models(outer, *result.induced_grid);
    CHECK_NOTHROW(validate_model(outer_host, lifted));

    // the clique branch lifts through the minor-model composition
    if (k == 2) {
      auto jumpy = grid_input(k, t, jumps_in_every_block(k, t));
      auto clique_result = grid_dichotomy(jumpy);
      REQUIRE(clique_result.clique.has_value());
      // overlay the same jumps on the outer host between the blobs
      auto edges2 = outer_edges;
      for (auto [u, v] : jumps_in_every_block(k, t)) {
        int a = blobs[u][0], b = blobs[v][0];
        edges2.push_back({std::min(a, b), std::max(a, b)});
      }
      Graph outer_jumpy(next, edges2);
      MinorModel outer_minor{jumpy.host, blobs};
      validate_model(outer_jumpy, outer_minor);
      auto lifted_clique = compose_models(outer_minor, *clique_result.clique);
      CHECK_NOTHROW(validate_model(outer_jumpy, lifted_clique));
    }
  }
}

TEST_CASE("diagonal path cliques in strong grids") {
  SUBCASE("s = 1 matches the closed form") {
    auto out = k2s_in_strong_grid(1);
    CHECK(out.model.branch_sets ==
          std::vector<std::vector<int>>{
              {out.host.coords.vertex(1, 1), out.host.coords.vertex(2, 1)},
              {out.host.coords.vertex(1, 2), out.host.coords.vertex(2, 2)}});
  }
  SUBCASE("all s up to 5 validate and partition the grid") {
    for (int s = 1; s <= 5; ++s) {
      auto out = k2s_in_strong_grid(s);
      CHECK_NOTHROW(validate_model(out.host.graph, out.model));
      int covered = 0;
      for (auto& set : out.model.branch_sets) {
        covered += (int)set.size();
        // each branch set induces a path
        auto sub = out.host.graph.induced(set);
        CHECK(sub.is_connected());
        CHECK(sub.edge_count() == sub.vertex_count() - 1);
        for (int v = 0; v < sub.vertex_count(); ++v) CHECK(sub.degree(v) <= 2);
      }
      CHECK(covered == 4 * s * s);
    }
  }
}

TEST_CASE("planar extraction from wide grid models") {
  SUBCASE("t = 1 on the 2x3 grid") {
    auto pattern = make_grid(2, 3);
    std::vector<std::vector<int>> sets(6);
    for (int v = 0; v < 6; ++v) sets[v] = {v};
    InducedMinorModel m{pattern.graph, sets};
    auto out = extract_planar_high_tw(pattern.graph, m, 1);
    REQUIRE(!out.empty());
    auto sub = pattern.graph.induced(out);
    CHECK_FALSE(contains_minor(sub, complete_graph(5), 64).has_value());
    CHECK(treewidth(sub, 22) >= 1);
  }
  SUBCASE("t = 2 on the 4x7 grid itself") {
    auto host = make_grid(4, 7);
    std::vector<std::vector<int>> sets(28);
    for (int v = 0; v < 28; ++v) sets[v] = {v};
    InducedMinorModel m{host.graph, sets};
    auto out = extract_planar_high_tw(host.graph, m, 2);
    auto sub = host.graph.induced(out);
    // planarity by excluded minors, then the width bound
    CHECK_FALSE(contains_minor(sub, complete_graph(5), 64).has_value());
    Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK_FALSE(contains_minor(sub, k33, 64).has_value());
    CHECK(treewidth(sub, 22) >= 2);
  }
  SUBCASE("size-2 branch sets are shrunk") {
    // inflate two interior cells of the 4x7 grid into 2-vertex blobs
    auto pattern = make_grid(4, 7);
    int n = 28;
    std::vector<std::vector<int>> sets(28);
    for (int v = 0; v < 28; ++v) sets[v] = {v};
    std::vector<Edge> edges = pattern.graph.edges();
    // replace cell (1,2) by a path {cell, 28} hanging its right neighbour off 28
    int cell = pattern.coords.vertex(1, 2);
    int right = pattern.coords.vertex(1, 3);
    std::vector<Edge> rewired;
    for (auto [u, v] : edges) {
      if ((u == cell && v == right) || (u == right && v == cell))
        rewired.push_back({std::min(28, right), std::max(28, right)});
      else
        rewired.push_back({u, v});
    }
    rewired.push_back({cell, 28});
    sets[cell] = {cell, 28};
    Graph host(n + 1, rewired);
    InducedMinorModel m{pattern.graph, sets};
    auto out = extract_planar_high_tw(host, m, 2);
    auto sub = host.induced(out);
    CHECK_FALSE(contains_minor(sub, complete_graph(5), 64).has_value());
    CHECK(treewidth(sub, 22) >= 2);
  }
  SUBCASE("cap is enforced") {
    auto host = make_grid(6, 11);
    std::vector<std::vector<int>> sets(66);
    for (int v = 0; v < 66; ++v) sets[v] = {v};
    InducedMinorModel m{host.graph, sets};
    CHECK_THROWS_AS(extract_planar_high_tw(host.graph, m, 3), ResourceLimitError);
  }
}
