#include "twhad/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "twhad/errors.hpp"

namespace twh {

namespace {

std::string vset_str(const std::vector<int>& vs) {
  std::string s = "{";
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> sorted_intersection(const std::vector<int>& a,
                                     const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

int td_validate(const Graph& g, const TreeDecomposition& td) {
  int nodes = td.tree.vertex_count();
  if ((int)td.bags.size() != nodes)
    throw ValidationError("tree has " + std::to_string(nodes) + " nodes but " +
                          std::to_string(td.bags.size()) + " bags");
  if (nodes > 0 && (!td.tree.is_connected() ||
                    td.tree.edge_count() != nodes - 1))
    throw ValidationError("decomposition tree is not a tree");
  for (auto& bag : td.bags)
    for (int v : bag) g.check_vertex(v);

  std::vector<std::vector<int>> sorted_bags = td.bags;
  for (auto& bag : sorted_bags) std::sort(bag.begin(), bag.end());

  auto in_bag = [&](int node, int v) {
    return std::binary_search(sorted_bags[node].begin(), sorted_bags[node].end(), v);
  };

  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int t = 0; t < nodes && !covered; ++t)
      covered = in_bag(t, u) && in_bag(t, v);
    if (!covered)
      throw ValidationError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " is not covered by any bag");
  }

  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> trace;
    for (int t = 0; t < nodes; ++t)
      if (in_bag(t, v)) trace.push_back(t);
    if (trace.empty())
      throw ValidationError("vertex " + std::to_string(v) + " appears in no bag");
    if (!td.tree.connected_subset(trace))
      throw ValidationError("bags containing vertex " + std::to_string(v) +
                            " do not induce a subtree");
  }

  int width = -1;
  for (auto& bag : sorted_bags) width = std::max(width, (int)bag.size() - 1);
  return width;
}

std::vector<int> Separation::cut() const { return sorted_intersection(a, b); }

void validate_separation(const Graph& g, const Separation& s) {
  if (!std::is_sorted(s.a.begin(), s.a.end()) ||
      !std::is_sorted(s.b.begin(), s.b.end()))
    throw ValidationError("separation sides must be sorted");
  for (int v : s.a) g.check_vertex(v);
  for (int v : s.b) g.check_vertex(v);
  auto all = sorted_union(s.a, s.b);
  if ((int)all.size() != g.vertex_count())
    throw ValidationError("separation sides do not cover the vertex set");
  std::vector<char> in_a(g.vertex_count(), 0), in_b(g.vertex_count(), 0);
  for (int v : s.a) in_a[v] = 1;
  for (int v : s.b) in_b[v] = 1;
  for (auto [u, v] : g.edges()) {
    bool u_strict_a = in_a[u] && !in_b[u], v_strict_a = in_a[v] && !in_b[v];
    bool u_strict_b = in_b[u] && !in_a[u], v_strict_b = in_b[v] && !in_a[v];
    if ((u_strict_a && v_strict_b) || (u_strict_b && v_strict_a))
      throw ValidationError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " crosses the separation");
  }
}

bool is_alpha_balanced(const Graph& g, const Separation& s,
                       const std::vector<int>& x, const Rational& alpha) {
  validate_separation(g, s);
  std::vector<char> in_a(g.vertex_count(), 0), in_b(g.vertex_count(), 0);
  for (int v : s.a) in_a[v] = 1;
  for (int v : s.b) in_b[v] = 1;
  long long strict_a = 0, strict_b = 0;
  for (int v : x) {
    g.check_vertex(v);
    if (in_a[v] && !in_b[v]) ++strict_a;
    if (in_b[v] && !in_a[v]) ++strict_b;
  }
  long long total = (long long)x.size();
  // count <= alpha * |X|, exactly.
  return strict_a * alpha.den <= alpha.num * total &&
         strict_b * alpha.den <= alpha.num * total;
}

// ---------------------------------------------------------------------
// Exhaustive balanced separator

namespace {

struct SeparatorSearch {
  const Graph& g;
  const std::vector<int>& x;
  Rational alpha;
  int max_order;
  std::optional<Separation> found;

  bool try_cut(const std::vector<int>& cut) {
    std::vector<char> in_cut(g.vertex_count(), 0);
    for (int v : cut) in_cut[v] = 1;

    // Components of G - cut, each with its X-count.
    std::vector<int> comp_id(g.vertex_count(), -1);
    std::vector<std::vector<int>> comps;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (in_cut[v] || comp_id[v] != -1) continue;
      std::vector<int> stack{v}, comp;
      comp_id[v] = (int)comps.size();
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (int w : g.neighbors(u))
          if (!in_cut[w] && comp_id[w] == -1) {
            comp_id[w] = (int)comps.size();
            stack.push_back(w);
          }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }

    std::vector<char> x_mark(g.vertex_count(), 0);
    for (int v : x) x_mark[v] = 1;
    long long x_total = (long long)x.size();
    long long x_in_cut = 0;
    for (int v : cut) x_in_cut += x_mark[v];
    std::vector<long long> x_count(comps.size(), 0);
    for (size_t i = 0; i < comps.size(); ++i)
      for (int v : comps[i]) x_count[i] += x_mark[v];

    int nc = (int)comps.size();
    std::optional<std::vector<int>> best_a;
    for (uint32_t assign = 0; assign < (1u << nc); ++assign) {
      long long xa = 0;
      for (int i = 0; i < nc; ++i)
        if (assign >> i & 1) xa += x_count[i];
      long long xb = x_total - x_in_cut - xa;
      if (xa * alpha.den > alpha.num * x_total) continue;
      if (xb * alpha.den > alpha.num * x_total) continue;
      std::vector<int> a = cut;
      for (int i = 0; i < nc; ++i)
        if (assign >> i & 1) a.insert(a.end(), comps[i].begin(), comps[i].end());
      std::sort(a.begin(), a.end());
      if (!best_a || a < *best_a) best_a = std::move(a);
    }
    if (!best_a) return false;

    std::vector<char> in_a(g.vertex_count(), 0);
    for (int v : *best_a) in_a[v] = 1;
    std::vector<int> b = cut;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!in_a[v]) b.push_back(v);
    std::sort(b.begin(), b.end());
    found = Separation{std::move(*best_a), std::move(b)};
    return true;
  }

  // Candidate cuts in lexicographic order of their sorted sequence, so the
  // first hit realises the documented tie-break.
  bool rec(std::vector<int>& cut, int start) {
    if (try_cut(cut)) return true;
    if ((int)cut.size() == max_order) return false;
    for (int v = start; v < g.vertex_count(); ++v) {
      cut.push_back(v);
      if (rec(cut, v + 1)) return true;
      cut.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<Separation> exhaustive_balanced_separator(const Graph& g,
                                                        const std::vector<int>& x,
                                                        const Rational& alpha,
                                                        int max_order, int cap) {
  if (g.vertex_count() > cap)
    throw ResourceLimitError("exhaustive separator search capped at " +
                             std::to_string(cap) + " vertices, got " +
                             std::to_string(g.vertex_count()));
  for (int v : x) g.check_vertex(v);
  if (alpha < Rational(1, 2) || alpha >= Rational(1))
    throw std::invalid_argument("alpha must lie in [1/2, 1)");
  SeparatorSearch search{g, x, alpha, std::max(0, max_order), std::nullopt};
  std::vector<int> cut;
  search.rec(cut, 0);
  return search.found;
}

// ---------------------------------------------------------------------
// Separator oracle -> tree-decomposition

BalanceSpec BalanceSpec::make(int c, int k, int q, std::vector<int> x) {
  if (c < 2 || k < 1) throw std::invalid_argument("need c >= 2 and k >= 1");
  if (q < c * k + 1)
    throw std::invalid_argument("need q >= c*k + 1, got q=" + std::to_string(q));
  BalanceSpec spec;
  spec.alpha = Rational(c - 1, c);
  spec.x = std::move(x);
  std::sort(spec.x.begin(), spec.x.end());
  spec.max_order = k;
  spec.q = q;
  spec.c = c;
  return spec;
}

namespace {

struct TdBuild {
  std::vector<std::vector<int>> bags;
  std::vector<Edge> tree_edges;

  int add_bag(std::vector<int> bag) {
    bags.push_back(std::move(bag));
    return (int)bags.size() - 1;
  }
};

// ids: current vertex set (original labels, sorted); x: current X subset.
// Returns the root node index.
int td_recurse(const Graph& g, const BalanceSpec& spec, const SeparatorOracle& oracle,
               TdBuild& build, const std::vector<int>& ids, std::vector<int> x) {
  if ((int)ids.size() <= spec.q + spec.max_order) return build.add_bag(ids);

  // Pad X to size q with the lowest fresh vertices.
  std::vector<char> in_x(g.vertex_count(), 0);
  for (int v : x) in_x[v] = 1;
  for (int v : ids) {
    if ((int)x.size() >= spec.q) break;
    if (!in_x[v]) {
      in_x[v] = 1;
      x.push_back(v);
    }
  }
  std::sort(x.begin(), x.end());

  Graph local = g.induced(ids);
  std::vector<int> local_x;
  for (int i = 0; i < (int)ids.size(); ++i)
    if (in_x[ids[i]]) local_x.push_back(i);

  auto sep = oracle(local, local_x);
  if (!sep)
    throw NoSeparatorError("separator oracle found no balanced separation for " +
                               vset_str(x) + " inside a subgraph on " +
                               std::to_string(ids.size()) + " vertices",
                           ids, x);
  validate_separation(local, *sep);
  if (sep->order() > spec.max_order)
    throw OracleContractError("oracle returned a separation of order " +
                              std::to_string(sep->order()) + " > " +
                              std::to_string(spec.max_order));
  if (!is_alpha_balanced(local, *sep, local_x, spec.alpha))
    throw OracleContractError("oracle returned a separation that is not " +
                              spec.alpha.str() + "-balanced");

  auto lift = [&](const std::vector<int>& local_side) {
    std::vector<int> out;
    out.reserve(local_side.size());
    for (int i : local_side) out.push_back(ids[i]);
    return out;
  };
  std::vector<int> side_a = lift(sep->a), side_b = lift(sep->b);
  std::vector<int> cut = sorted_intersection(side_a, side_b);
  if ((int)side_a.size() == (int)ids.size() || (int)side_b.size() == (int)ids.size())
    throw OracleContractError("oracle returned a one-sided separation");

  int root = build.add_bag(sorted_union(x, cut));
  for (const std::vector<int>* side : {&side_a, &side_b}) {
    std::vector<int> xi = sorted_union(sorted_intersection(x, *side), cut);
    int child = td_recurse(g, spec, oracle, build, *side, std::move(xi));
    build.tree_edges.push_back({root, child});
  }
  return root;
}

}  // namespace

TreeDecomposition td_from_separator_oracle(const Graph& g, const BalanceSpec& spec,
                                           const SeparatorOracle& oracle) {
  for (int v : spec.x) g.check_vertex(v);
  if ((int)spec.x.size() > spec.q)
    throw std::invalid_argument("initial X larger than q");
  std::vector<int> ids(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) ids[i] = i;
  TdBuild build;
  if (g.vertex_count() == 0) return TreeDecomposition{Graph(0), {}};
  td_recurse(g, spec, oracle, build, ids, spec.x);
  TreeDecomposition td{Graph((int)build.bags.size(), build.tree_edges),
                       std::move(build.bags)};
  td_validate(g, td);
  return td;
}

// ---------------------------------------------------------------------
// Exact treewidth: subset DP over elimination prefixes.
//
// f(S) = min over v in S of max(f(S \ v), q(S \ v, v)) where q(S, v) counts
// the vertices outside S u {v} reachable from v through S. f(V) is the
// treewidth.

namespace {

constexpr int kTwHardCap = 25;

// Back-degree of v when eliminated after the set s (v not in s).
inline int back_degree(const std::vector<uint32_t>& adj, uint32_t s, int v) {
  uint32_t reached = 1u << v;
  uint32_t nb = adj[v];
  for (;;) {
    uint32_t grow = nb & s & ~reached;
    if (!grow) break;
    reached |= grow;
    while (grow) {
      int b = std::countr_zero(grow);
      grow &= grow - 1;
      nb |= adj[b];
    }
  }
  return std::popcount(nb & ~s & ~(1u << v));
}

std::vector<uint32_t> adjacency_masks(const Graph& g) {
  std::vector<uint32_t> adj(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  return adj;
}

void check_tw_cap(const Graph& g, int cap) {
  int n = g.vertex_count();
  if (n > std::min(cap, kTwHardCap))
    throw ResourceLimitError("exact treewidth capped at " +
                             std::to_string(std::min(cap, kTwHardCap)) +
                             " vertices, got " + std::to_string(n));
}

TreeDecomposition decomposition_from_order(const Graph& g,
                                           const std::vector<int>& order) {
  int n = g.vertex_count();
  auto adj = adjacency_masks(g);
  std::vector<int> when(n);
  for (int i = 0; i < n; ++i) when[order[i]] = i;

  TreeDecomposition td;
  std::vector<Edge> tree_edges;
  td.bags.resize(n);
  uint32_t before = 0;
  std::vector<uint32_t> upward(n, 0);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    uint32_t reached = 1u << v, nb = adj[v];
    for (;;) {
      uint32_t grow = nb & before & ~reached;
      if (!grow) break;
      reached |= grow;
      while (grow) {
        int b = std::countr_zero(grow);
        grow &= grow - 1;
        nb |= adj[b];
      }
    }
    upward[v] = nb & ~before & ~(1u << v);
    std::vector<int> bag{v};
    for (uint32_t m = upward[v]; m;) {
      int b = std::countr_zero(m);
      m &= m - 1;
      bag.push_back(b);
    }
    std::sort(bag.begin(), bag.end());
    td.bags[i] = std::move(bag);
    before |= 1u << v;
  }
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (upward[v]) {
      int attach = n;
      for (uint32_t m = upward[v]; m;) {
        int b = std::countr_zero(m);
        m &= m - 1;
        attach = std::min(attach, when[b]);
      }
      tree_edges.push_back({i, attach});
    } else if (i + 1 < n) {
      tree_edges.push_back({i, i + 1});
    }
  }
  td.tree = Graph(n, tree_edges);
  return td;
}

TreewidthResult treewidth_dp(const Graph& g, int cap, bool parallel) {
  check_tw_cap(g, cap);
  int n = g.vertex_count();
  if (n == 0) return {-1, TreeDecomposition{Graph(0), {}}};

  auto adj = adjacency_masks(g);
  size_t total = (size_t)1 << n;
  std::vector<uint8_t> f(total, 0);

  if (parallel) {
    std::vector<uint32_t> layer;
    for (int cnt = 1; cnt <= n; ++cnt) {
      layer.clear();
      // Gosper's hack: all masks with popcount cnt, ascending.
      uint32_t mask = (cnt == 32) ? ~0u : (1u << cnt) - 1;
      while (mask < total) {
        layer.push_back(mask);
        uint32_t c = mask & -mask, r = mask + c;
        mask = ((r ^ mask) >> 2) / c | r;
        if (c == 0) break;
      }
#pragma omp parallel for schedule(dynamic, 256)
      for (long long idx = 0; idx < (long long)layer.size(); ++idx) {
        uint32_t s = layer[idx];
        int best = 255;
        for (uint32_t m = s; m;) {
          int v = std::countr_zero(m);
          m &= m - 1;
          uint32_t rest = s & ~(1u << v);
          int cost = std::max((int)f[rest], back_degree(adj, rest, v));
          best = std::min(best, cost);
        }
        f[s] = (uint8_t)best;
      }
    }
  } else {
    for (uint32_t s = 1; s < total; ++s) {
      int best = 255;
      for (uint32_t m = s; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        uint32_t rest = s & ~(1u << v);
        int cost = std::max((int)f[rest], back_degree(adj, rest, v));
        best = std::min(best, cost);
      }
      f[s] = (uint8_t)best;
    }
  }

  // Recover an optimal elimination order, back to front.
  std::vector<int> order(n);
  uint32_t s = (uint32_t)(total - 1);
  for (int i = n - 1; i >= 0; --i) {
    int chosen = -1;
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      uint32_t rest = s & ~(1u << v);
      if (std::max((int)f[rest], back_degree(adj, rest, v)) == f[s]) {
        chosen = v;
        break;
      }
    }
    order[i] = chosen;
    s &= ~(1u << chosen);
  }

  TreewidthResult result;
  result.width = f[total - 1];
  result.decomposition = decomposition_from_order(g, order);
  td_validate(g, result.decomposition);
  return result;
}

}  // namespace

TreewidthResult treewidth_exact(const Graph& g, int cap) {
  return treewidth_dp(g, cap, true);
}

TreewidthResult treewidth_exact_serial(const Graph& g, int cap) {
  return treewidth_dp(g, cap, false);
}

int treewidth(const Graph& g, int cap) { return treewidth_exact(g, cap).width; }

}  // namespace twh
