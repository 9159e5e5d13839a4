#include "twhad/minors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
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

bool sets_adjacent(const Graph& host, const std::vector<int>& a,
                   const std::vector<int>& b) {
  for (int u : a)
    for (int v : b)
      if (host.has_edge(u, v)) return true;
  return false;
}

void validate_branch_sets(const Graph& host, const Graph& pattern,
                          const std::vector<std::vector<int>>& sets, bool induced) {
  if ((int)sets.size() != pattern.vertex_count())
    throw ValidationError("model has " + std::to_string(sets.size()) +
                          " branch sets for a pattern on " +
                          std::to_string(pattern.vertex_count()) + " vertices");
  std::vector<int> owner(host.vertex_count(), -1);
  for (int p = 0; p < (int)sets.size(); ++p) {
    if (sets[p].empty())
      throw ValidationError("branch set of pattern vertex " + std::to_string(p) +
                            " is empty");
    for (int v : sets[p]) {
      host.check_vertex(v);
      if (owner[v] != -1)
        throw ValidationError("branch sets of pattern vertices " +
                              std::to_string(owner[v]) + " and " + std::to_string(p) +
                              " overlap at host vertex " + std::to_string(v));
      owner[v] = p;
    }
    if (!host.connected_subset(sets[p]))
      throw ValidationError("branch set " + vset_str(sets[p]) + " of pattern vertex " +
                            std::to_string(p) + " is not connected");
  }
  for (int p = 0; p < pattern.vertex_count(); ++p)
    for (int q = p + 1; q < pattern.vertex_count(); ++q) {
      bool adj = sets_adjacent(host, sets[p], sets[q]);
      if (pattern.has_edge(p, q) && !adj)
        throw ValidationError("pattern edge " + std::to_string(p) + "-" +
                              std::to_string(q) + " has no host edge between its "
                              "branch sets");
      if (induced && !pattern.has_edge(p, q) && adj)
        throw ValidationError("pattern non-edge " + std::to_string(p) + "-" +
                              std::to_string(q) +
                              " has a host edge between its branch sets");
    }
}

}  // namespace

void validate_model(const Graph& host, const MinorModel& m) {
  validate_branch_sets(host, m.pattern, m.branch_sets, false);
}

void validate_model(const Graph& host, const InducedMinorModel& m) {
  validate_branch_sets(host, m.pattern, m.branch_sets, true);
}

// ---------------------------------------------------------------------
// Branch-set backtracking

namespace {

struct ModelSearch {
  const Graph& host;
  const Graph& pattern;
  bool induced;
  bool symmetric;  // complete pattern: branch sets interchangeable

  int hn = 0, pn = 0;
  std::vector<uint64_t> hadj;
  std::vector<int> order;           // pattern vertices, assignment order
  std::vector<int> slot_of;         // pattern vertex -> position in order
  std::vector<uint64_t> sets;       // per position
  std::vector<uint64_t> set_nbhd;   // N(B) \ B per position
  std::vector<int> pending;         // per position: unassigned pattern neighbours
  uint64_t used = 0;
  bool found = false;

  explicit ModelSearch(const Graph& h, const Graph& p, bool ind)
      : host(h), pattern(p), induced(ind) {
    hn = h.vertex_count();
    pn = p.vertex_count();
    symmetric = !induced && p.edge_count() == pn * (pn - 1) / 2;
    hadj.assign(hn, 0);
    for (auto [u, v] : h.edges()) {
      hadj[u] |= 1ULL << v;
      hadj[v] |= 1ULL << u;
    }
    order.resize(pn);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return p.degree(a) > p.degree(b); });
    slot_of.assign(pn, -1);
    for (int i = 0; i < pn; ++i) slot_of[order[i]] = i;
    sets.resize(pn);
    set_nbhd.resize(pn);
    pending.resize(pn);
  }

  uint64_t neighborhood(uint64_t set) const {
    uint64_t nb = 0;
    for (uint64_t m = set; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      nb |= hadj[v];
    }
    return nb & ~set;
  }

  bool feasible_after(int assigned) const {
    uint64_t unused = ~used & ((hn == 64) ? ~0ULL : ((1ULL << hn) - 1));
    if (std::popcount(unused) < pn - assigned) return false;
    for (int j = 0; j < assigned; ++j)
      if (std::popcount(set_nbhd[j] & unused) < pending[j]) return false;
    return true;
  }

  bool compatible(int i, uint64_t set, uint64_t nb) const {
    int pv = order[i];
    for (int j = 0; j < i; ++j) {
      bool padj = pattern.has_edge(pv, order[j]);
      bool hadjacent = (nb & sets[j]) != 0;
      if (padj && !hadjacent) return false;
      if (induced && !padj && hadjacent) return false;
    }
    (void)set;
    return true;
  }

  bool assign(int i, uint64_t set) {
    uint64_t nb = neighborhood(set);
    if (!compatible(i, set, nb)) return false;
    sets[i] = set;
    set_nbhd[i] = nb;
    used |= set;
    int pv = order[i];
    pending[i] = 0;
    for (int q : pattern.neighbors(pv))
      if (slot_of[q] > i) ++pending[i];
    for (int j = 0; j < i; ++j)
      if (pattern.has_edge(pv, order[j])) --pending[j];
    if (feasible_after(i + 1) && search(i + 1, symmetric ? std::countr_zero(set) : -1))
      return true;
    for (int j = 0; j < i; ++j)
      if (pattern.has_edge(pv, order[j])) ++pending[j];
    used &= ~set;
    return false;
  }

  // Enumerates connected subsets of the unused vertices whose minimum is
  // `seed`; yields smaller sets before their extensions. `nb` is the open
  // neighbourhood of `set`, maintained incrementally.
  bool grow(int i, uint64_t set, uint64_t nb, uint64_t banned) {
    if (assign(i, set)) return true;
    uint64_t unused = ~used & ((hn == 64) ? ~0ULL : ((1ULL << hn) - 1));
    if (std::popcount(unused & ~set) < pn - i - 1) return false;
    uint64_t cand = nb & unused & ~banned;
    if (!cand) return false;
    int x = std::countr_zero(cand);
    uint64_t bit = 1ULL << x;
    if (grow(i, set | bit, (nb | hadj[x]) & ~(set | bit), banned)) return true;
    return grow(i, set, nb, banned | bit);
  }

  bool search(int i, int min_seed) {
    if (i == pn) {
      found = true;
      return true;
    }
    uint64_t unused = ~used & ((hn == 64) ? ~0ULL : ((1ULL << hn) - 1));
    for (uint64_t m = unused; m;) {
      int seed = std::countr_zero(m);
      m &= m - 1;
      if (seed <= min_seed) continue;
      uint64_t below = (1ULL << seed) - 1;
      if (grow(i, 1ULL << seed, hadj[seed] & ~(1ULL << seed), below)) return true;
    }
    return false;
  }

  std::optional<std::vector<std::vector<int>>> run() {
    if (pn > hn) return std::nullopt;
    if (pn == 0) return std::vector<std::vector<int>>{};
    if (!search(0, -1)) return std::nullopt;
    std::vector<std::vector<int>> out(pn);
    for (int i = 0; i < pn; ++i) {
      for (uint64_t s = sets[i]; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        out[order[i]].push_back(v);
      }
      std::sort(out[order[i]].begin(), out[order[i]].end());
    }
    return out;
  }
};

void check_minor_cap(const Graph& host, int cap) {
  if (host.vertex_count() > cap)
    throw ResourceLimitError("minor search capped at " + std::to_string(cap) +
                             " host vertices, got " +
                             std::to_string(host.vertex_count()));
  if (host.vertex_count() > 64)
    throw ResourceLimitError("minor search requires at most 64 host vertices");
}

// Complete-pattern fast path for dense hosts. When n - t is small it is
// far cheaper to enumerate delete/contract sequences of that depth (with
// failure memoisation) than to assemble branch sets: branch-set search has
// nothing to prune on when almost every pair is adjacent.
struct CliqueOpsSearch {
  int target;
  std::map<std::vector<uint64_t>, char> failed;

  std::optional<std::vector<std::vector<int>>> clique_hit(
      const std::vector<uint64_t>& rows, const std::vector<std::vector<int>>& sets) {
    int n = (int)rows.size();
    // Max clique on <= a dozen vertices via complement independent set.
    std::vector<uint64_t> comp(n);
    uint64_t all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    for (int v = 0; v < n; ++v) comp[v] = all & ~rows[v] & ~(1ULL << v);
    // Greedy-first then exact search for an independent set of size target
    // in the complement.
    std::vector<int> chosen;
    std::function<bool(uint64_t, int)> pick = [&](uint64_t allowed, int need) {
      if (need == 0) return true;
      if (std::popcount(allowed) < need) return false;
      while (allowed) {
        int v = std::countr_zero(allowed);
        allowed &= allowed - 1;
        chosen.push_back(v);
        if (pick(allowed & ~comp[v], need - 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (!pick(all, target)) return std::nullopt;
    std::vector<std::vector<int>> model;
    for (int v : chosen) model.push_back(sets[v]);
    return model;
  }

  std::optional<std::vector<std::vector<int>>> run(
      std::vector<uint64_t> rows, std::vector<std::vector<int>> sets) {
    int n = (int)rows.size();
    if (n < target) return std::nullopt;
    if (auto hit = clique_hit(rows, sets)) return hit;
    if (n == target) return std::nullopt;
    if (failed.count(rows)) return std::nullopt;

    auto drop = [&](const std::vector<uint64_t>& r, int v) {
      std::vector<uint64_t> out;
      uint64_t low = (1ULL << v) - 1;
      for (int u = 0; u < (int)r.size(); ++u) {
        if (u == v) continue;
        uint64_t row = r[u];
        out.push_back((row & low) | ((row >> (v + 1)) << v));
      }
      return out;
    };

    for (int v = 0; v < n; ++v) {
      auto sub_sets = sets;
      sub_sets.erase(sub_sets.begin() + v);
      if (auto hit = run(drop(rows, v), std::move(sub_sets))) return hit;
    }
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (!(rows[u] >> v & 1)) continue;
        auto merged = rows;
        merged[u] |= merged[v];
        for (int w = 0; w < n; ++w)
          if (merged[w] >> v & 1) merged[w] |= 1ULL << u;
        merged[u] &= ~(1ULL << u);
        for (int w = 0; w < n; ++w) merged[w] &= ~(1ULL << v);
        auto sub_sets = sets;
        sub_sets[u].insert(sub_sets[u].end(), sets[v].begin(), sets[v].end());
        std::sort(sub_sets[u].begin(), sub_sets[u].end());
        sub_sets.erase(sub_sets.begin() + v);
        if (auto hit = run(drop(merged, v), std::move(sub_sets))) return hit;
      }
    failed.emplace(std::move(rows), 1);
    return std::nullopt;
  }
};

std::optional<MinorModel> clique_minor_dense(const Graph& host, int t) {
  int n = host.vertex_count();
  std::vector<uint64_t> rows(n, 0);
  for (auto [u, v] : host.edges()) {
    rows[u] |= 1ULL << v;
    rows[v] |= 1ULL << u;
  }
  std::vector<std::vector<int>> sets(n);
  for (int v = 0; v < n; ++v) sets[v] = {v};
  CliqueOpsSearch search{t, {}};
  auto model = search.run(std::move(rows), std::move(sets));
  if (!model) return std::nullopt;
  MinorModel m{complete_graph(t), std::move(*model)};
  validate_model(host, m);
  return m;
}

}  // namespace

std::optional<MinorModel> contains_minor(const Graph& host, const Graph& pattern,
                                         int cap) {
  check_minor_cap(host, cap);
  int pn = pattern.vertex_count();
  if (pn >= 1 && pattern.edge_count() == pn * (pn - 1) / 2 &&
      pn <= host.vertex_count() && host.vertex_count() - pn <= 3)
    return clique_minor_dense(host, pn);
  ModelSearch search(host, pattern, false);
  auto sets = search.run();
  if (!sets) return std::nullopt;
  MinorModel m{pattern, std::move(*sets)};
  validate_model(host, m);
  return m;
}

std::optional<InducedMinorModel> contains_induced_minor(const Graph& host,
                                                        const Graph& pattern,
                                                        int cap) {
  check_minor_cap(host, cap);
  ModelSearch search(host, pattern, true);
  auto sets = search.run();
  if (!sets) return std::nullopt;
  InducedMinorModel m{pattern, std::move(*sets)};
  validate_model(host, m);
  return m;
}

HadwigerResult hadwiger_witness(const Graph& g, int cap) {
  check_minor_cap(g, cap);
  if (g.vertex_count() == 0) return {0, MinorModel{Graph(0), {}}};

  // had(G) >= omega(G), and had(G) <= tw(G) + 1 since K_t has treewidth
  // t - 1 and treewidth is minor-monotone. Both ends are cheap at this
  // scale and they often pin the answer without any refutation search.
  auto clique = max_independent_set(g.complement(), std::max(cap, 40));
  int lower = std::max(1, (int)clique.size());
  int upper = g.vertex_count();
  if (g.vertex_count() <= 20)
    upper = std::min(upper, treewidth_exact(g).width + 1);

  HadwigerResult result;
  result.number = lower;
  result.witness.pattern = complete_graph(lower);
  for (int i = 0; i < lower; ++i) result.witness.branch_sets.push_back({clique[i]});
  validate_model(g, result.witness);

  for (int t = lower + 1; t <= upper; ++t) {
    auto m = contains_minor(g, complete_graph(t), cap);
    if (!m) break;
    result.number = t;
    result.witness = std::move(*m);
  }
  return result;
}

int hadwiger(const Graph& g, int cap) { return hadwiger_witness(g, cap).number; }

// ---------------------------------------------------------------------
// Maximum independent set

namespace {

struct MisSolver {
  std::vector<uint64_t> adj;
  int n;

  explicit MisSolver(const Graph& g) : n(g.vertex_count()) {
    adj.assign(n, 0);
    for (auto [u, v] : g.edges()) {
      adj[u] |= 1ULL << v;
      adj[v] |= 1ULL << u;
    }
  }

  int alpha(uint64_t allowed) {
    if (!allowed) return 0;
    // Degree-0 and degree-1 vertices are always safe to take.
    int taken = 0;
    bool reduced = true;
    while (reduced && allowed) {
      reduced = false;
      for (uint64_t m = allowed; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        int deg = std::popcount(adj[v] & allowed);
        if (deg <= 1) {
          ++taken;
          allowed &= ~(adj[v] | (1ULL << v));
          reduced = true;
          break;
        }
      }
    }
    if (!allowed) return taken;
    int pivot = -1, pivot_deg = -1;
    for (uint64_t m = allowed; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      int deg = std::popcount(adj[v] & allowed);
      if (deg > pivot_deg) {
        pivot_deg = deg;
        pivot = v;
      }
    }
    int with = 1 + alpha(allowed & ~(adj[pivot] | (1ULL << pivot)));
    int without = alpha(allowed & ~(1ULL << pivot));
    return taken + std::max(with, without);
  }
};

}  // namespace

std::vector<int> max_independent_set(const Graph& g, int cap) {
  if (g.vertex_count() > cap)
    throw ResourceLimitError("independent-set oracle capped at " +
                             std::to_string(cap) + " vertices, got " +
                             std::to_string(g.vertex_count()));
  if (g.vertex_count() > 64)
    throw ResourceLimitError("independent-set oracle requires at most 64 vertices");
  int n = g.vertex_count();
  if (n == 0) return {};
  MisSolver solver(g);
  uint64_t all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
  int target = solver.alpha(all);
  // Lexicographically least optimum: keep v iff an optimum through v exists.
  std::vector<int> out;
  uint64_t allowed = all;
  int need = target;
  for (int v = 0; v < n && need > 0; ++v) {
    if (!(allowed >> v & 1)) continue;
    uint64_t rest = allowed & ~(solver.adj[v] | (1ULL << v));
    if (1 + solver.alpha(rest) == need) {
      out.push_back(v);
      allowed = rest;
      --need;
    } else {
      allowed &= ~(1ULL << v);
    }
  }
  return out;
}

int clique_number(const Graph& g, int cap) {
  return (int)max_independent_set(g.complement(), cap).size();
}

// ---------------------------------------------------------------------
// Menger: maximum linkage plus a matching minimum separation

void validate_linkage(const Graph& g, const Linkage& l) {
  std::vector<char> in_s(g.vertex_count(), 0), in_t(g.vertex_count(), 0),
      seen(g.vertex_count(), 0);
  for (int v : l.s) {
    g.check_vertex(v);
    in_s[v] = 1;
  }
  for (int v : l.t) {
    g.check_vertex(v);
    in_t[v] = 1;
  }
  for (auto& path : l.paths) {
    if (path.empty()) throw ValidationError("empty path in linkage");
    for (int v : path) {
      g.check_vertex(v);
      if (seen[v])
        throw ValidationError("linkage paths share vertex " + std::to_string(v));
      seen[v] = 1;
    }
    for (size_t i = 0; i + 1 < path.size(); ++i)
      if (!g.has_edge(path[i], path[i + 1]))
        throw ValidationError("missing edge " + std::to_string(path[i]) + "-" +
                              std::to_string(path[i + 1]) + " along a linkage path");
    if (!in_s[path.front()] || !in_t[path.back()])
      throw ValidationError("linkage path does not run from S to T");
    for (size_t i = 1; i + 1 < path.size(); ++i)
      if (in_s[path[i]] || in_t[path[i]])
        throw ValidationError("linkage path visits S u T internally at " +
                              std::to_string(path[i]));
  }
}

namespace {

struct FlowNetwork {
  struct Arc {
    int to, rev, cap;
    bool forward;
  };
  std::vector<std::vector<Arc>> arcs;

  explicit FlowNetwork(int nodes) : arcs(nodes) {}

  void add(int from, int to, int cap) {
    arcs[from].push_back({to, (int)arcs[to].size(), cap, true});
    arcs[to].push_back({from, (int)arcs[from].size() - 1, 0, false});
  }

  // Units pushed through a forward arc.
  int flow_on(int from, int idx) const {
    const Arc& a = arcs[from][idx];
    return arcs[a.to][a.rev].cap;
  }

  int augment_bfs(int s, int t) {
    std::vector<std::pair<int, int>> parent(arcs.size(), {-1, -1});
    std::queue<int> queue;
    queue.push(s);
    parent[s] = {s, -1};
    while (!queue.empty() && parent[t].first == -1) {
      int u = queue.front();
      queue.pop();
      for (int i = 0; i < (int)arcs[u].size(); ++i) {
        const Arc& a = arcs[u][i];
        if (a.cap > 0 && parent[a.to].first == -1) {
          parent[a.to] = {u, i};
          queue.push(a.to);
        }
      }
    }
    if (parent[t].first == -1) return 0;
    for (int v = t; v != s;) {
      auto [u, i] = parent[v];
      arcs[u][i].cap -= 1;
      arcs[arcs[u][i].to][arcs[u][i].rev].cap += 1;
      v = u;
    }
    return 1;
  }

  std::vector<char> residual_reachable(int s) {
    std::vector<char> seen(arcs.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const Arc& a : arcs[u])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
    }
    return seen;
  }
};

}  // namespace

MengerResult menger_linkage(const Graph& g, std::vector<int> s_set,
                            std::vector<int> t_set) {
  std::sort(s_set.begin(), s_set.end());
  s_set.erase(std::unique(s_set.begin(), s_set.end()), s_set.end());
  std::sort(t_set.begin(), t_set.end());
  t_set.erase(std::unique(t_set.begin(), t_set.end()), t_set.end());
  for (int v : s_set) g.check_vertex(v);
  for (int v : t_set) g.check_vertex(v);

  int n = g.vertex_count();
  const int big = n + 2;
  auto vin = [](int v) { return 2 * v; };
  auto vout = [](int v) { return 2 * v + 1; };
  int source = 2 * n, sink = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (int v = 0; v < n; ++v) net.add(vin(v), vout(v), 1);
  for (auto [u, v] : g.edges()) {
    net.add(vout(u), vin(v), big);
    net.add(vout(v), vin(u), big);
  }
  for (int v : s_set) net.add(source, vin(v), big);
  for (int v : t_set) net.add(vout(v), sink, big);

  while (net.augment_bfs(source, sink) > 0) {
  }

  // Extract vertex-disjoint paths by walking the unit flows. Unit vertex
  // capacities mean at most one unit leaves each v_out, so the walk from
  // every saturated source arc is unique and ends at the sink.
  Linkage linkage{{}, s_set, t_set};
  for (int i = 0; i < (int)net.arcs[source].size(); ++i) {
    const auto& src_arc = net.arcs[source][i];
    if (!src_arc.forward || net.flow_on(source, i) == 0) continue;
    std::vector<int> path{src_arc.to / 2};
    for (;;) {
      int node = vout(path.back());
      int next = -1;
      for (int j = 0; j < (int)net.arcs[node].size(); ++j) {
        if (!net.arcs[node][j].forward) continue;
        if (net.flow_on(node, j) > 0) {
          next = net.arcs[node][j].to;
          break;
        }
      }
      if (next == sink || next == -1) break;
      path.push_back(next / 2);
    }
    linkage.paths.push_back(std::move(path));
  }

  // Matching separation from the residual cut.
  auto reach = net.residual_reachable(source);
  std::vector<int> cut;
  for (int v = 0; v < n; ++v)
    if (reach[vin(v)] && !reach[vout(v)]) cut.push_back(v);
  std::vector<char> in_cut(n, 0);
  for (int v : cut) in_cut[v] = 1;
  std::vector<char> side_a(n, 0);
  std::vector<int> stack;
  for (int v : s_set)
    if (!in_cut[v] && !side_a[v]) {
      side_a[v] = 1;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u))
      if (!in_cut[w] && !side_a[w]) {
        side_a[w] = 1;
        stack.push_back(w);
      }
  }
  Separation sep;
  for (int v = 0; v < n; ++v) {
    if (side_a[v] || in_cut[v]) sep.a.push_back(v);
    if (!side_a[v]) sep.b.push_back(v);
  }

  validate_linkage(g, linkage);
  validate_separation(g, sep);
  for (int v : s_set)
    if (!side_a[v] && !in_cut[v])
      throw ValidationError("source vertex " + std::to_string(v) +
                            " escaped side A of the Menger separation");
  for (int v : t_set)
    if (side_a[v])
      throw ValidationError("target vertex " + std::to_string(v) +
                            " landed strictly in side A of the Menger separation");
  if ((int)linkage.paths.size() != sep.order())
    throw ValidationError("linkage size " + std::to_string(linkage.paths.size()) +
                          " does not match separation order " +
                          std::to_string(sep.order()));
  return {std::move(linkage), std::move(sep)};
}

// ---------------------------------------------------------------------

Linkage induced_sublinkage(const Graph& g, const Linkage& l, int k, int t, int cap) {
  validate_linkage(g, l);
  int paths = (int)l.paths.size();
  std::vector<Edge> contracted_edges;
  for (int i = 0; i < paths; ++i)
    for (int j = i + 1; j < paths; ++j)
      if (sets_adjacent(g, l.paths[i], l.paths[j])) contracted_edges.push_back({i, j});
  Graph contracted(paths, contracted_edges);
  auto independent = max_independent_set(contracted, cap);
  if ((int)independent.size() < k) {
    std::string msg = "independent set of the contracted linkage graph has size " +
                      std::to_string(independent.size()) + " < " + std::to_string(k) +
                      " (Hadwiger number above " + std::to_string(t) +
                      "); contracted edges:";
    for (auto [u, v] : contracted.edges())
      msg += " " + std::to_string(u) + "-" + std::to_string(v);
    throw StructuralError(msg, independent);
  }
  Linkage out{{}, l.s, l.t};
  for (int i = 0; i < k; ++i) out.paths.push_back(l.paths[independent[i]]);
  return out;
}

namespace {

template <typename Model>
Graph contract_impl(const Graph& g, const Model& m) {
  validate_model(g, m);
  int p = (int)m.branch_sets.size();
  std::vector<Edge> e;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (sets_adjacent(g, m.branch_sets[i], m.branch_sets[j])) e.push_back({i, j});
  return Graph(p, e);
}

template <typename Model>
Model compose_impl(const Model& outer, const Model& inner) {
  Model out;
  out.pattern = inner.pattern;
  for (auto& inner_set : inner.branch_sets) {
    std::vector<int> merged;
    for (int a : inner_set) {
      const auto& host_set = outer.branch_sets.at(a);
      merged.insert(merged.end(), host_set.begin(), host_set.end());
    }
    std::sort(merged.begin(), merged.end());
    out.branch_sets.push_back(std::move(merged));
  }
  return out;
}

}  // namespace

Graph contract_model(const Graph& g, const InducedMinorModel& m) {
  return contract_impl(g, m);
}
Graph contract_model(const Graph& g, const MinorModel& m) {
  return contract_impl(g, m);
}

InducedMinorModel compose_models(const InducedMinorModel& outer,
                                 const InducedMinorModel& inner) {
  return compose_impl(outer, inner);
}
MinorModel compose_models(const MinorModel& outer, const MinorModel& inner) {
  return compose_impl(outer, inner);
}

int induced_grid_number(const Graph& g, int cap) {
  if (g.vertex_count() > cap)
    throw ResourceLimitError("induced grid number capped at " + std::to_string(cap) +
                             " vertices, got " + std::to_string(g.vertex_count()));
  if (g.vertex_count() == 0) return 0;
  int best = 0;
  for (int k = 1; k * k <= g.vertex_count(); ++k) {
    if (!contains_induced_minor(g, make_grid(k, k).graph, cap)) break;
    best = k;
  }
  return best;
}

}  // namespace twh
