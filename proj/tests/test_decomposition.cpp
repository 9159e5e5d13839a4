#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "twhad/decomposition.hpp"
#include "twhad/errors.hpp"

using namespace twh;

TEST_CASE("tree-decomposition validation") {
  SUBCASE("single bag covers a triangle") {
    TreeDecomposition td{Graph(1), {{0, 1, 2}}};
    CHECK(td_validate(complete_graph(3), td) == 2);
  }
  SUBCASE("path decomposition of P3") {
    TreeDecomposition td{Graph(2, {{0, 1}}), {{0, 1}, {1, 2}}};
    CHECK(td_validate(path_graph(3), td) == 1);
  }
  SUBCASE("uncovered edge is reported") {
    TreeDecomposition td{Graph(2, {{0, 1}}), {{0, 1}, {2, 3}}};
    CHECK_THROWS_WITH_AS(td_validate(cycle_graph(4), td),
                         doctest::Contains("not covered"), ValidationError);
  }
  SUBCASE("missing vertex is reported") {
    TreeDecomposition td{Graph(1), {{0, 1}}};
    CHECK_THROWS_WITH_AS(td_validate(Graph(3, {{0, 1}}), td),
                         doctest::Contains("no bag"), ValidationError);
  }
  SUBCASE("disconnected trace is reported") {
    TreeDecomposition td{Graph(3, {{0, 1}, {1, 2}}), {{0}, {1}, {0, 1}}};
    CHECK_THROWS_WITH_AS(td_validate(Graph(2, {{0, 1}}), td),
                         doctest::Contains("subtree"), ValidationError);
  }
  SUBCASE("forest of bags is rejected") {
    TreeDecomposition td{Graph(2), {{0}, {0}}};
    CHECK_THROWS_AS(td_validate(Graph(1), td), ValidationError);
  }
}

TEST_CASE("treewidth of standard families") {
  Rng rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    auto tree = testing::random_tree(rng, rng.range(2, 12));
    CHECK(treewidth(tree) == 1);
  }
  for (int n = 1; n <= 8; ++n) CHECK(treewidth(complete_graph(n)) == n - 1);
  CHECK(treewidth(Graph(5)) == 0);
  CHECK(treewidth(Graph(0)) == -1);

  auto grid3 = make_grid(3, 3).graph;
  CHECK(testing::treewidth_bruteforce(grid3) == 3);
  CHECK(treewidth(grid3) == 3);
}

TEST_CASE("path power P(9,3) is the expected chordal witness") {
  auto g = make_path_power(9, 3);
  CHECK(treewidth(g) == 3);
  CHECK(testing::treewidth_bruteforce(g) == 3);
}

TEST_CASE("treewidth witness decompositions validate at the same width") {
  Rng rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = testing::random_graph(rng, rng.range(1, 11), 0.35);
    auto result = treewidth_exact(g);
    CHECK(td_validate(g, result.decomposition) == result.width);
  }
}

TEST_CASE("parallel and serial treewidth kernels agree") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = testing::random_graph(rng, rng.range(1, 12), 0.4);
    CHECK(treewidth_exact(g).width == treewidth_exact_serial(g).width);
  }
}

TEST_CASE("treewidth agrees with the elimination branch-and-bound oracle") {
  Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = testing::random_graph(rng, rng.range(1, 10), 0.2 + 0.06 * (trial % 10));
    CHECK(treewidth(g) == testing::treewidth_bruteforce(g));
  }
}

TEST_CASE("treewidth is monotone under induced subgraphs") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.range(2, 11);
    auto g = testing::random_graph(rng, n, 0.4);
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
      if (rng.chance(0.7)) keep.push_back(v);
    if (keep.empty()) continue;
    CHECK(treewidth(g.induced(keep)) <= treewidth(g));
  }
}

TEST_CASE("treewidth cap is enforced") {
  CHECK_THROWS_AS(treewidth(Graph(21)), ResourceLimitError);
  // the hard memory ceiling holds even when the caller raises the cap
  CHECK_THROWS_AS(treewidth(Graph(26), 30), ResourceLimitError);
}

TEST_CASE("alpha-balance predicate") {
  Graph g(12);
  std::vector<int> all(12);
  for (int i = 0; i < 12; ++i) all[i] = i;

  SUBCASE("A = B = V is balanced for anything") {
    Separation s{all, all};
    CHECK(is_alpha_balanced(g, s, all, Rational(1, 2)));
  }
  SUBCASE("even split at one half") {
    Separation s{{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}};
    CHECK(is_alpha_balanced(g, s, all, Rational(1, 2)));
  }
  SUBCASE("10 versus 2 fails three quarters") {
    Separation s{{0, 1}, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};
    CHECK_FALSE(is_alpha_balanced(g, s, all, Rational(3, 4)));
  }
}

TEST_CASE("ratio condition implies (c-1)/c balance, exhaustively") {
  Rng rng(43);
  std::vector<Graph> graphs{path_graph(7), cycle_graph(6),
                            testing::random_graph(rng, 7, 0.3),
                            testing::random_graph(rng, 8, 0.25)};
  for (const auto& g : graphs) {
    int n = g.vertex_count();
    std::vector<int> place(n);
    // Every (A, B): vertex in A only, B only, or both.
    for (long long code = 0; code < (long long)std::pow(3, n); ++code) {
      long long c2 = code;
      Separation s;
      for (int v = 0; v < n; ++v, c2 /= 3) {
        int side = c2 % 3;
        place[v] = side;
        if (side != 1) s.a.push_back(v);
        if (side != 0) s.b.push_back(v);
      }
      bool valid = true;
      for (auto [u, v] : g.edges())
        if ((place[u] == 0 && place[v] == 1) || (place[u] == 1 && place[v] == 0))
          valid = false;
      if (!valid) continue;
      for (uint32_t xmask = 0; xmask < (1u << n); ++xmask) {
        std::vector<int> x;
        long long in_a = 0, in_b = 0;
        for (int v = 0; v < n; ++v)
          if (xmask >> v & 1) {
            x.push_back(v);
            if (place[v] != 1) ++in_a;
            if (place[v] != 0) ++in_b;
          }
        for (int c = 2; c <= 4; ++c)
          if ((long long)x.size() <= c * in_a && (long long)x.size() <= c * in_b) {
            REQUIRE(is_alpha_balanced(g, s, x, Rational(c - 1, c)));
            break;  // smaller c is the strongest claim
          }
      }
    }
  }
}

TEST_CASE("exhaustive balanced separator") {
  SUBCASE("edgeless graph splits with an empty cut") {
    Graph g(8);
    std::vector<int> x{0, 1, 2, 3, 4, 5, 6, 7};
    auto sep = exhaustive_balanced_separator(g, x, Rational(1, 2), 0);
    REQUIRE(sep.has_value());
    CHECK(sep->order() == 0);
    CHECK(sep->a.size() == 4);  // near-even split of X
  }
  SUBCASE("cliques have no small balanced separation") {
    // q = 5, k = 1, alpha = 3/4: every separation of K_7 is one-sided.
    Graph g = complete_graph(7);
    std::vector<int> x{0, 1, 2, 3, 4};
    CHECK_FALSE(exhaustive_balanced_separator(g, x, Rational(3, 4), 1).has_value());
  }
  SUBCASE("path cut at a middle vertex") {
    Graph g = path_graph(4);
    std::vector<int> x{0, 1, 2, 3};
    auto sep = exhaustive_balanced_separator(g, x, Rational(1, 2), 1);
    REQUIRE(sep.has_value());
    CHECK(sep->cut() == std::vector<int>{1});
    CHECK(sep->a == std::vector<int>{0, 1});
  }
  SUBCASE("cap is enforced") {
    CHECK_THROWS_AS(
        exhaustive_balanced_separator(Graph(17), {}, Rational(1, 2), 1),
        ResourceLimitError);
  }
}

namespace {

SeparatorOracle make_exhaustive_oracle(const Rational& alpha, int k) {
  return [alpha, k](const Graph& g, const std::vector<int>& x) {
    return exhaustive_balanced_separator(g, x, alpha, k);
  };
}

}  // namespace

TEST_CASE("separator oracle to tree-decomposition") {
  SUBCASE("small graphs get the single bag") {
    Graph g = complete_graph(4);
    auto spec = BalanceSpec::make(2, 1, 3, {0});
    auto td = td_from_separator_oracle(g, spec, make_exhaustive_oracle(spec.alpha, 1));
    REQUIRE(td.bags.size() == 1);
    CHECK(td.bags[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(td_validate(g, td) == 3);
  }
  SUBCASE("the 4x4 grid with q = 17 resolves to a single bag") {
    auto g = make_grid(4, 4).graph;
    auto spec = BalanceSpec::make(4, 4, 17, {});
    auto td = td_from_separator_oracle(g, spec, make_exhaustive_oracle(spec.alpha, 4));
    REQUIRE(td.bags.size() == 1);
    CHECK(td_validate(g, td) <= 17 + 4 - 1);
  }
  SUBCASE("paths recurse and meet the width bound") {
    Graph g = path_graph(9);
    auto spec = BalanceSpec::make(2, 1, 3, {0});
    auto td = td_from_separator_oracle(g, spec, make_exhaustive_oracle(spec.alpha, 1));
    CHECK(td.bags.size() > 1);
    CHECK(td_validate(g, td) <= 3);
  }
  SUBCASE("cliques make the oracle fail with the offending query") {
    Graph g = complete_graph(7);
    auto spec = BalanceSpec::make(4, 1, 5, {});
    CHECK_THROWS_AS(
        td_from_separator_oracle(g, spec, make_exhaustive_oracle(spec.alpha, 1)),
        NoSeparatorError);
  }
  SUBCASE("contract violations are detected") {
    Graph g = path_graph(9);
    auto spec = BalanceSpec::make(2, 1, 3, {});
    SeparatorOracle bad = [](const Graph& sub, const std::vector<int>&) {
      std::vector<int> all(sub.vertex_count());
      for (int i = 0; i < sub.vertex_count(); ++i) all[i] = i;
      return std::optional<Separation>(Separation{all, all});
    };
    CHECK_THROWS_AS(td_from_separator_oracle(g, spec, bad), OracleContractError);
  }
}

TEST_CASE("oracle-built decompositions satisfy width <= q + k - 1 on random graphs") {
  Rng rng(47);
  int built = 0;
  for (int trial = 0; trial < 120 && built < 40; ++trial) {
    int n = rng.range(5, 14);
    auto g = testing::random_graph(rng, n, 0.18);
    const int c = 2, k = 2, q = 5;
    auto spec = BalanceSpec::make(c, k, q, {});
    try {
      auto td = td_from_separator_oracle(g, spec, make_exhaustive_oracle(spec.alpha, k));
      CHECK(td_validate(g, td) <= q + k - 1);
      ++built;
    } catch (const NoSeparatorError&) {
      // different instance; the premise failed
    }
  }
  CHECK(built >= 20);
}
