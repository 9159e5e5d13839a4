// Independent test oracles. These deliberately use different algorithms
// from the library (branch-and-bound over elimination orderings, recursion
// over delete/contract sequences) so the two sides can check each other.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "twhad/graph.hpp"
#include "twhad/rng.hpp"

namespace twh::testing {

// Contract edge (u, v): v merges into u, labels above v shift down.
inline Graph contract_edge(const Graph& g, int u, int v) {
  std::vector<Edge> e;
  for (auto [a, b] : g.edges()) {
    if (a == v) a = u;
    if (b == v) b = u;
    if (a == b) continue;
    if (a > v) --a;
    if (b > v) --b;
    if (a > b) std::swap(a, b);
    e.push_back({a, b});
  }
  int uu = u > v ? u - 1 : u;
  (void)uu;
  return Graph(g.vertex_count() - 1, e);
}

inline Graph delete_edge(const Graph& g, int u, int v) {
  std::vector<Edge> e;
  for (auto [a, b] : g.edges())
    if (!(a == std::min(u, v) && b == std::max(u, v))) e.push_back({a, b});
  return Graph(g.vertex_count(), e);
}

// Is there a vertex bijection carrying E(h) into E(g)?
inline bool spanning_subgraph_iso(const Graph& h, const Graph& g) {
  int n = g.vertex_count();
  if (h.vertex_count() != n) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [a, b] : h.edges())
      if (!g.has_edge(perm[a], perm[b])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Minor containment by brute recursion over delete/contract operations.
// Only for tiny hosts.
inline bool minor_bruteforce(const Graph& g, const Graph& h) {
  if (g.vertex_count() < h.vertex_count()) return false;
  if (g.edge_count() < h.edge_count()) return false;
  if (g.vertex_count() == h.vertex_count() && spanning_subgraph_iso(h, g))
    return true;
  for (int v = 0; v < g.vertex_count() && g.vertex_count() > h.vertex_count(); ++v)
    if (minor_bruteforce(g.without_vertex(v), h)) return true;
  for (auto [u, v] : g.edges()) {
    if (minor_bruteforce(contract_edge(g, u, v), h)) return true;
    if (g.vertex_count() == h.vertex_count() &&
        minor_bruteforce(delete_edge(g, u, v), h))
      return true;
  }
  return false;
}

// Induced minor containment: vertex deletions and contractions only.
inline bool induced_minor_bruteforce(const Graph& g, const Graph& h) {
  if (g.vertex_count() < h.vertex_count()) return false;
  if (g.vertex_count() == h.vertex_count()) return isomorphic_small(g, h);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (induced_minor_bruteforce(g.without_vertex(v), h)) return true;
  for (auto [u, v] : g.edges())
    if (induced_minor_bruteforce(contract_edge(g, u, v), h)) return true;
  return false;
}

// Exact treewidth by branch-and-bound over elimination orderings on an
// explicitly filled graph.
inline void tw_bb(std::vector<uint64_t> adj, uint64_t rem, int cur, int& best) {
  if (cur >= best) return;
  if (rem == 0) {
    best = cur;
    return;
  }
  for (uint64_t m = rem; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    uint64_t nb = adj[v] & rem & ~(1ULL << v);
    int deg = std::popcount(nb);
    if (std::max(cur, deg) >= best) continue;
    auto filled = adj;
    for (uint64_t x = nb; x;) {
      int a = std::countr_zero(x);
      x &= x - 1;
      filled[a] |= nb & ~(1ULL << a);
    }
    tw_bb(filled, rem & ~(1ULL << v), std::max(cur, deg), best);
  }
}

inline int treewidth_bruteforce(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return -1;
  std::vector<uint64_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1ULL << v;
    adj[v] |= 1ULL << u;
  }
  int best = n - 1;
  if (g.edge_count() == 0) return 0;
  tw_bb(adj, (n == 64) ? ~0ULL : ((1ULL << n) - 1), 0, best);
  return best;
}

inline Graph random_graph(Rng& rng, int n, double p) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) e.push_back({u, v});
  return Graph(n, e);
}

inline Graph random_tree(Rng& rng, int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.push_back({rng.range(0, v - 1), v});
  return Graph(n, e);
}

inline Graph random_connected_graph(Rng& rng, int n, double p) {
  auto tree = random_tree(rng, n);
  auto e = tree.edges();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) e.push_back({u, v});
  return Graph(n, e);
}

}  // namespace twh::testing
