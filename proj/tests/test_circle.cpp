#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "twhad/circle.hpp"
#include "twhad/errors.hpp"
#include "twhad/harness.hpp"
#include "twhad/ordered.hpp"

using namespace twh;

TEST_CASE("crossing graphs of chord diagrams") {
  CHECK(crossing_graph(chord_diagram_from_ids({1, 2, 1, 2})) == complete_graph(2));
  CHECK(crossing_graph(chord_diagram_from_ids({1, 1, 2, 2})).edge_count() == 0);
  CHECK(crossing_graph(chord_diagram_from_ids({1, 2, 3, 1, 2, 3})) ==
        complete_graph(3));
  CHECK_THROWS_AS(chord_diagram_from_ids({1, 2, 1}), ParseError);
  CHECK_THROWS_AS(chord_diagram_from_ids({1, 1, 1, 1}), ParseError);
}

TEST_CASE("circle graphs cut anywhere are x-free") {
  Rng rng(139);
  for (int trial = 0; trial < 50; ++trial) {
    int n = rng.range(1, 9);
    auto cd = gen_chord_diagram(rng.split(trial), n);
    auto g = crossing_graph(cd);
    int cut = rng.range(0, 2 * n - 1);
    // order chords by their first endpoint position after the cut
    std::vector<std::pair<int, int>> keyed;
    for (int i = 0; i < n; ++i) {
      int a = cd.order.position(cd.chords[i].first);
      int b = cd.order.position(cd.chords[i].second);
      int ra = (a - cut + 2 * n) % (2 * n), rb = (b - cut + 2 * n) % (2 * n);
      keyed.push_back({std::min(ra, rb), i});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> by_rank;
    for (auto [key, i] : keyed) by_rank.push_back(i);
    CHECK(is_x_free(OrderedGraph{g, by_rank}).xfree);
  }
}

TEST_CASE("gf2 matrices") {
  Gf2Matrix zero{4, {0, 0, 0, 0}};
  CHECK(gf2_rank(zero) == 0);
  Gf2Matrix ones{3, {0b111, 0b111, 0b111}};
  CHECK(gf2_rank(ones) == 1);
  CHECK(ones.symmetric());
  Gf2Matrix skew{2, {0b10, 0b00}};
  CHECK_FALSE(skew.symmetric());
}

TEST_CASE("perturbation models from matrices") {
  SUBCASE("the zero matrix is the trivial model") {
    auto m = perturbation_model_from_matrix(Gf2Matrix{3, {0, 0, 0}});
    CHECK(m.k == 1);
    CHECK(m.h.edges.empty());
    CHECK(m.zeta == std::vector<int>{0, 0, 0});
  }
  SUBCASE("the all-ones matrix complements") {
    auto m = perturbation_model_from_matrix(Gf2Matrix{3, {0b111, 0b111, 0b111}});
    CHECK(m.k == 2);
    CHECK(m.zeta == std::vector<int>{1, 1, 1});
    CHECK(m.h.has(1, 1));  // the used colour carries a loop
    auto g0 = path_graph(3);
    CHECK(apply_perturbation(g0, m) == g0.complement());
  }
  SUBCASE("asymmetric matrices are rejected") {
    CHECK_THROWS_AS(perturbation_model_from_matrix(Gf2Matrix{2, {0b10, 0b00}}),
                    ValidationError);
  }
  SUBCASE("rank-2 round trip") {
    Rng rng(149);
    auto p = gen_perturbation_matrix(rng, 10, 2);
    auto m = perturbation_model_from_matrix(p);
    CHECK(m.k <= 4);
    auto g0 = testing::random_graph(rng, 10, 0.4);
    auto g = apply_perturbation(g0, m);
    for (int u = 0; u < 10; ++u)
      for (int v = u + 1; v < 10; ++v)
        CHECK(g.has_edge(u, v) == (g0.has_edge(u, v) ^ p.get(u, v)));
  }
}

TEST_CASE("applying perturbations") {
  auto g0 = cycle_graph(5);
  SUBCASE("an edgeless auxiliary changes nothing") {
    PerturbationModel m{2, LoopyGraph{2, {}}, {0, 1, 0, 1, 0}};
    CHECK(apply_perturbation(g0, m) == g0);
  }
  SUBCASE("a single looped colour complements") {
    PerturbationModel m{1, LoopyGraph{1, {{0, 0}}}, {0, 0, 0, 0, 0}};
    CHECK(apply_perturbation(g0, m) == g0.complement());
  }
  SUBCASE("a loopless colour pair complements between the classes") {
    PerturbationModel m{2, LoopyGraph{2, {{0, 1}}}, {0, 0, 0, 1, 1}};
    auto g = apply_perturbation(g0, m);
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) {
        bool crosses = (m.zeta[u] != m.zeta[v]);
        CHECK(g.has_edge(u, v) == (crosses ? !g0.has_edge(u, v) : g0.has_edge(u, v)));
      }
  }
  SUBCASE("double application is the identity") {
    Rng rng(151);
    for (int trial = 0; trial < 40; ++trial) {
      int n = rng.range(1, 10);
      auto g = testing::random_graph(rng, n, 0.5);
      auto p = gen_perturbation_matrix(rng, n, rng.range(0, std::min(3, n)));
      auto m = perturbation_model_from_matrix(p);
      CHECK(apply_perturbation(apply_perturbation(g, m), m) == g);
    }
  }
}

TEST_CASE("perturbation round trips at rank up to 3") {
  Rng rng(157);
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.range(1, 12);
    auto p = gen_perturbation_matrix(rng.split(trial), n, rng.range(0, std::min(3, n)));
    auto m = perturbation_model_from_matrix(p);
    auto g0 = testing::random_graph(rng, n, 0.5);
    auto g = apply_perturbation(g0, m);
    // zero-diagonal(A0 + P) == adjacency(g)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        bool expect = u == v ? false : (g0.has_edge(u, v) ^ p.get(u, v));
        CHECK(g.has_edge(u, v) == (u == v ? false : expect));
      }
  }
}

TEST_CASE("good colours") {
  SUBCASE("one colour on K4") {
    CyclicOrder c({1, 2, 3, 4});
    std::vector<std::vector<int>> colour(5, std::vector<int>(5, 0));
    auto out = good_colour(c, colour, 1);
    CHECK(out.colour == 0);
    CHECK(chords_cross(c, out.crossing.first.first, out.crossing.first.second,
                       out.crossing.second.first, out.crossing.second.second));
    CHECK_FALSE(chords_cross(c, out.non_crossing.first.first,
                             out.non_crossing.first.second,
                             out.non_crossing.second.first,
                             out.non_crossing.second.second));
  }
  SUBCASE("an empty class loses to the full one") {
    CyclicOrder c({0, 1, 2, 3, 4, 5, 6, 7});
    std::vector<std::vector<int>> colour(8, std::vector<int>(8, 1));
    auto out = good_colour(c, colour, 2);
    CHECK(out.colour == 1);
  }
  SUBCASE("random balanced partitions verify by definition") {
    Rng rng(163);
    for (int trial = 0; trial < 30; ++trial) {
      int k = rng.range(1, 2);
      int n = 4 * k;
      std::vector<int> labels(n);
      for (int i = 0; i < n; ++i) labels[i] = i;
      CyclicOrder c(labels);
      std::vector<std::vector<int>> colour(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          colour[i][j] = colour[j][i] = (int)rng.below(k);
      auto out = good_colour(c, colour, k);
      auto edge_colour = [&](Edge e) {
        return colour[std::min(e.first, e.second)][std::max(e.first, e.second)];
      };
      CHECK(edge_colour(out.crossing.first) == out.colour);
      CHECK(edge_colour(out.crossing.second) == out.colour);
      CHECK(edge_colour(out.non_crossing.first) == out.colour);
      CHECK(edge_colour(out.non_crossing.second) == out.colour);
      CHECK(chords_cross(c, out.crossing.first.first, out.crossing.first.second,
                         out.crossing.second.first, out.crossing.second.second));
      CHECK_FALSE(chords_cross(c, out.non_crossing.first.first,
                               out.non_crossing.first.second,
                               out.non_crossing.second.first,
                               out.non_crossing.second.second));
    }
  }
}

namespace {

PerturbationModel trivial_model(int n) {
  return PerturbationModel{1, LoopyGraph{1, {}}, std::vector<int>(n, 0)};
}

}  // namespace

TEST_CASE("perturbed separator: nested diagrams separate") {
  // 52 pairwise nested chords: "1 2 ... 52 52 ... 2 1"
  std::vector<int> ids;
  for (int i = 1; i <= 52; ++i) ids.push_back(i);
  for (int i = 52; i >= 1; --i) ids.push_back(i);
  auto cd = chord_diagram_from_ids(ids);
  CHECK(crossing_graph(cd).edge_count() == 0);
  std::vector<int> x(52);
  for (int i = 0; i < 52; ++i) x[i] = i;
  auto res = perturbed_separator_or_clique(cd, trivial_model(52), x, 1);
  REQUIRE(res.separation.has_value());
  CHECK(res.route == PerturbedSepResult::Route::Separation);
  CHECK(res.separation->order() < 13);
}

TEST_CASE("perturbed separator: monochromatic families give the clique") {
  // 78 chords, 13 per segment pair; X covers the pairs (1,2), (3,4),
  // (1,3), (2,4), leaving every segment with exactly 26 roots of X.
  // Segment-pair intersections then hold 13 chords each and the proof
  // path assembles K_{t,t} from the good colour.
  const int f = 13;
  struct Span {
    int a, b;
    bool in_x;
  };
  std::vector<Span> spans{{0, 3, false}, {1, 2, false}, {0, 1, true},
                          {0, 2, true},  {1, 3, true},  {2, 3, true}};
  // region r contents: first the non-X endpoints, then the X endpoints
  std::vector<std::vector<int>> region(4);
  int chord_id = 0;
  std::vector<std::pair<int, int>> chord_spans;
  for (bool x_pass : {false, true})
    for (const auto& span : spans) {
      if (span.in_x != x_pass) continue;
      for (int i = 0; i < f; ++i) {
        region[span.a].push_back(chord_id);
        region[span.b].push_back(chord_id);
        chord_spans.push_back({span.a, span.b});
        ++chord_id;
      }
    }
  // non-X endpoints first within each region
  std::vector<int> ids;
  for (int r = 0; r < 4; ++r) {
    std::stable_sort(region[r].begin(), region[r].end(), [&](int a, int b) {
      bool ax = a >= 2 * f, bx = b >= 2 * f;  // first 26 chords are non-X
      return ax < bx;
    });
    for (int c : region[r]) ids.push_back(c + 1);
  }
  auto cd = chord_diagram_from_ids(ids);
  // X = the 52 chords spanning the selected pairs
  std::vector<int> x;
  std::map<int, int> first_appearance;  // ids are chord numbers by first appearance
  int next = 0;
  for (int id : ids)
    if (!first_appearance.count(id)) first_appearance[id] = next++;
  for (int c = 2 * f; c < 6 * f; ++c) x.push_back(first_appearance[c + 1]);
  std::sort(x.begin(), x.end());
  REQUIRE((int)x.size() == 52);

  auto res = perturbed_separator_or_clique(cd, trivial_model(78), x, 1);
  REQUIRE(res.clique.has_value());
  CHECK(res.route == PerturbedSepResult::Route::MonochromaticGrid);
  CHECK(res.clique->pattern == complete_graph(2));
}

TEST_CASE("perturbed separator: argument validation") {
  auto cd = chord_diagram_from_ids({1, 2, 1, 2});
  CHECK_THROWS_AS(perturbed_separator_or_clique(cd, trivial_model(2), {0}, 1),
                  std::invalid_argument);
}

TEST_CASE("random perturbed circle instances stay within 65 k^3 had") {
  Rng rng(167);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.range(2, 11);
    auto cd = gen_chord_diagram(rng.split(trial), n);
    auto p = gen_perturbation_matrix(rng, n, rng.range(0, 2));
    auto m = perturbation_model_from_matrix(p);
    auto g = apply_perturbation(crossing_graph(cd), m);
    long long tw = treewidth(g);
    long long had = hadwiger(g);
    CHECK(tw <= 65LL * m.k * m.k * m.k * had);
  }
}
