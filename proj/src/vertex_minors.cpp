#include "twhad/vertex_minors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "twhad/errors.hpp"

namespace twh {

Graph local_complement(const Graph& g, int v) {
  g.check_vertex(v);
  const auto& nb = g.neighbors(v);
  auto edges = g.edges();
  std::vector<Edge> out;
  std::set<Edge> drop;
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j) {
      Edge e{nb[i], nb[j]};
      if (g.has_edge(e.first, e.second))
        drop.insert(e);
      else
        out.push_back(e);
    }
  for (auto e : edges)
    if (!drop.count(e)) out.push_back(e);
  return Graph(g.vertex_count(), out);
}

VmApplyResult apply_vm_sequence(const Graph& g, const std::vector<VmStep>& steps) {
  int n = g.vertex_count();
  std::vector<char> alive(n, 1);
  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  for (const auto& step : steps) {
    int v = step.vertex;
    if (v < 0 || v >= n || !alive[v])
      throw ValidationError("step refers to vertex " + std::to_string(v) +
                            " which is absent at application time");
    if (step.kind == VmStep::Kind::LocalComplement) {
      std::vector<int> nb(adj[v].begin(), adj[v].end());
      for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j) {
          int a = nb[i], b = nb[j];
          if (adj[a].count(b)) {
            adj[a].erase(b);
            adj[b].erase(a);
          } else {
            adj[a].insert(b);
            adj[b].insert(a);
          }
        }
    } else {
      alive[v] = 0;
      for (int w : adj[v]) adj[w].erase(v);
      adj[v].clear();
    }
  }
  VmApplyResult out;
  std::vector<int> index(n, -1);
  for (int v = 0; v < n; ++v)
    if (alive[v]) {
      index[v] = (int)out.labels.size();
      out.labels.push_back(v);
    }
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    if (alive[v])
      for (int w : adj[v])
        if (v < w) edges.push_back({index[v], index[w]});
  out.graph = Graph((int)out.labels.size(), edges);
  return out;
}

// ---------------------------------------------------------------------

InducedInSubdivision minor_to_induced_in_1subdivision(const Graph& g,
                                                      const MinorModel& m) {
  validate_model(g, m);
  InducedInSubdivision out;
  out.subdivision = subdivide_uniform(g, 2);
  const auto& sub = out.subdivision;

  std::vector<int> owner(g.vertex_count(), -1);
  for (int p = 0; p < (int)m.branch_sets.size(); ++p)
    for (int v : m.branch_sets[p]) owner[v] = p;

  auto sets = m.branch_sets;
  // Midpoints of edges inside a branch set keep the set connected after
  // subdividing.
  std::map<Edge, int> midpoint;
  for (size_t e = 0; e < sub.original_edges.size(); ++e) {
    auto [u, v] = sub.original_edges[e];
    midpoint[{u, v}] = sub.interior[e][0];
    if (owner[u] != -1 && owner[u] == owner[v])
      sets[owner[u]].push_back(sub.interior[e][0]);
  }
  // One connecting edge per pattern edge; its midpoint goes to the
  // lower-indexed pattern vertex.
  for (auto [p, q] : m.pattern.edges()) {
    bool linked = false;
    for (auto [u, v] : sub.original_edges) {
      int a = owner[u], b = owner[v];
      if ((a == p && b == q) || (a == q && b == p)) {
        sets[p].push_back(midpoint.at({u, v}));
        linked = true;
        break;
      }
    }
    if (!linked)
      throw ValidationError("no host edge found for pattern edge " +
                            std::to_string(p) + "-" + std::to_string(q));
  }
  for (auto& s : sets) std::sort(s.begin(), s.end());
  out.model = InducedMinorModel{m.pattern, std::move(sets)};
  validate_model(sub.graph, out.model);
  return out;
}

// ---------------------------------------------------------------------
// Minor model -> vertex-minor sequence

namespace {

// Mutable view of the contracted graph the reduction walks down. All ids
// are labels of the subdivision graph.
struct ReductionState {
  std::set<int> vertices;                 // surviving original g-vertices
  std::map<Edge, int> midpoint;           // current edge -> its midpoint label
  std::map<int, std::set<int>> adj;       // adjacency of the contracted graph
  std::vector<VmStep> steps;

  bool has_edge(int u, int v) const {
    auto it = adj.find(u);
    return it != adj.end() && it->second.count(v);
  }
  int mid(int u, int v) const { return midpoint.at({std::min(u, v), std::max(u, v)}); }

  void remove_edge(int u, int v) {
    adj[u].erase(v);
    adj[v].erase(u);
    midpoint.erase({std::min(u, v), std::max(u, v)});
  }

  void delete_vertex(int v) {
    steps.push_back(VmStep::del(v));
    auto nbs = adj[v];
    for (int w : nbs) {
      steps.push_back(VmStep::del(mid(v, w)));
      remove_edge(v, w);
    }
    adj.erase(v);
    vertices.erase(v);
  }

  // Contract the edge (u, v) through its midpoint; u disappears, v keeps
  // the merged neighbourhood with u's midpoints.
  void contract_into(int u, int v) {
    steps.push_back(VmStep::lc(u));
    steps.push_back(VmStep::lc(mid(u, v)));
    steps.push_back(VmStep::del(u));
    steps.push_back(VmStep::del(mid(u, v)));
    remove_edge(u, v);
    auto u_nbs = adj[u];
    for (int w : u_nbs) {
      int m = mid(u, w);
      remove_edge(u, w);
      if (has_edge(v, w)) {
        steps.push_back(VmStep::del(m));  // parallel connection, drop one
      } else {
        adj[v].insert(w);
        adj[w].insert(v);
        midpoint[{std::min(v, w), std::max(v, w)}] = m;
      }
    }
    adj.erase(u);
    vertices.erase(u);
  }
};

}  // namespace

VmReduction minor_to_vm_sequence(const Graph& g, const MinorModel& m,
                                 const Subdivision& sub) {
  validate_model(g, m);
  if (!sub.proper)
    throw ValidationError("vertex-minor reduction requires a proper subdivision");
  if (sub.original_n != g.vertex_count() || sub.original_edges != g.edges())
    throw ValidationError("subdivision does not correspond to the given graph");

  ReductionState st;
  for (int v = 0; v < g.vertex_count(); ++v) st.vertices.insert(v);

  // Shorten every path to a single midpoint: repeatedly complement at the
  // vertex before the path's end and delete it.
  for (size_t e = 0; e < sub.original_edges.size(); ++e) {
    auto [u, v] = sub.original_edges[e];
    auto path = sub.interior[e];
    while (path.size() > 1) {
      int last = path.back();
      st.steps.push_back(VmStep::lc(last));
      st.steps.push_back(VmStep::del(last));
      path.pop_back();
    }
    st.midpoint[{u, v}] = path[0];
    st.adj[u].insert(v);
    st.adj[v].insert(u);
  }

  std::vector<int> owner(g.vertex_count(), -1);
  for (int p = 0; p < (int)m.branch_sets.size(); ++p)
    for (int v : m.branch_sets[p]) owner[v] = p;

  int pattern_n = m.pattern.vertex_count();
  while ((int)st.vertices.size() > pattern_n) {
    int unused = -1;
    for (int v : st.vertices)
      if (owner[v] == -1) {
        unused = v;
        break;
      }
    if (unused != -1) {
      st.delete_vertex(unused);
      continue;
    }
    // Every vertex is used; contract the least branch-set edge.
    bool contracted = false;
    for (const auto& [edge, mid] : st.midpoint) {
      (void)mid;
      auto [u, v] = edge;
      if (owner[u] != -1 && owner[u] == owner[v]) {
        st.contract_into(u, v);
        contracted = true;
        break;
      }
    }
    if (!contracted)
      throw ValidationError("no unused vertex and no intra-branch-set edge left");
  }

  // Base case: branch sets are singletons now. Materialise the pattern
  // edges, then delete every midpoint.
  std::vector<int> image(pattern_n, -1);
  for (int v : st.vertices) image[owner[v]] = v;
  VmReduction out;
  for (auto [p, q] : m.pattern.edges())
    st.steps.push_back(VmStep::lc(st.mid(image[p], image[q])));
  for (const auto& [edge, mid] : st.midpoint) {
    (void)edge;
    st.steps.push_back(VmStep::del(mid));
  }
  out.steps = std::move(st.steps);
  out.image = std::move(image);
  return out;
}

// ---------------------------------------------------------------------
// Crossing elimination

void validate_drawing(const MarkedDrawing& d) {
  std::set<int> marked;
  for (const auto& c : d.crossings) {
    d.graph.check_vertex(c.vertex);
    if (!marked.insert(c.vertex).second)
      throw ValidationError("crossing vertex " + std::to_string(c.vertex) +
                            " is marked twice");
    if (d.graph.degree(c.vertex) != 4)
      throw ValidationError("crossing vertex " + std::to_string(c.vertex) +
                            " has degree " + std::to_string(d.graph.degree(c.vertex)) +
                            ", expected 4");
    std::vector<int> rot(c.rotation.begin(), c.rotation.end());
    std::sort(rot.begin(), rot.end());
    if (rot != d.graph.neighbors(c.vertex))
      throw ValidationError("rotation of crossing vertex " +
                            std::to_string(c.vertex) +
                            " does not list its neighbourhood");
  }
}

CrossingElimination eliminate_crossings_vm(const MarkedDrawing& d) {
  validate_drawing(d);
  CrossingElimination out;
  auto sub = subdivide_uniform(d.graph, 2);

  std::map<Edge, int> midpoint;
  for (size_t e = 0; e < sub.original_edges.size(); ++e)
    midpoint[sub.original_edges[e]] = sub.interior[e][0];
  auto mid = [&](int u, int v) { return midpoint.at({std::min(u, v), std::max(u, v)}); };

  auto edges = sub.graph.edges();
  for (const auto& c : d.crossings) {
    std::array<int, 4> m{};
    for (int i = 0; i < 4; ++i) m[i] = mid(c.vertex, c.rotation[i]);
    for (int i = 0; i < 4; ++i) {
      int a = m[i], b = m[(i + 1) % 4];
      edges.push_back({std::min(a, b), std::max(a, b)});
    }
    out.steps.push_back(VmStep::lc(c.vertex));
    out.steps.push_back(VmStep::del(c.vertex));
  }
  out.augmented = Graph(sub.graph.vertex_count(), edges);

  // Recover the drawn graph by tracing straight through every crossing.
  std::set<int> crossing_set;
  std::map<int, std::array<int, 4>> rotation;
  for (const auto& c : d.crossings) {
    crossing_set.insert(c.vertex);
    rotation[c.vertex] = c.rotation;
  }
  std::vector<int> real;  // non-crossing vertices, ascending
  std::vector<int> index_of(d.graph.vertex_count(), -1);
  for (int v = 0; v < d.graph.vertex_count(); ++v)
    if (!crossing_set.count(v)) {
      index_of[v] = (int)real.size();
      real.push_back(v);
    }
  std::set<std::pair<int, int>> used;  // directed half-edges already traced
  std::vector<Edge> underlying_edges;
  for (int u : real) {
    for (int first : d.graph.neighbors(u)) {
      if (used.count({u, first})) continue;
      int prev = u, cur = first;
      while (crossing_set.count(cur)) {
        const auto& rot = rotation[cur];
        int pos = -1;
        for (int i = 0; i < 4; ++i)
          if (rot[i] == prev) pos = i;
        int next = rot[(pos + 2) % 4];
        prev = cur;
        cur = next;
      }
      used.insert({u, first});
      used.insert({cur, prev});  // suppress the reverse trace
      if (cur == u)
        throw StructuralError("edge tracing returned to its origin at vertex " +
                              std::to_string(u), {u});
      int a = index_of[u], b = index_of[cur];
      underlying_edges.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  std::sort(underlying_edges.begin(), underlying_edges.end());
  auto dup = std::adjacent_find(underlying_edges.begin(), underlying_edges.end());
  if (dup != underlying_edges.end())
    throw StructuralError("tracing produced a parallel edge", {dup->first});
  out.underlying = Graph((int)real.size(), underlying_edges);
  out.vertex_ids = real;
  return out;
}

// ---------------------------------------------------------------------
// Proper-subdivision recognition by degree-2 smoothing

bool recognize_proper_subdivision(const Graph& g, const Graph& h,
                                  const std::vector<int>& branch_vertex) {
  if ((int)branch_vertex.size() != h.vertex_count()) return false;
  std::vector<char> is_branch(g.vertex_count(), 0);
  for (int v : branch_vertex) {
    if (v < 0 || v >= g.vertex_count()) return false;
    if (is_branch[v]) return false;
    is_branch[v] = 1;
  }
  // Properness: no branch path may be a single edge.
  for (size_t p = 0; p < branch_vertex.size(); ++p)
    for (size_t q = p + 1; q < branch_vertex.size(); ++q)
      if (g.has_edge(branch_vertex[p], branch_vertex[q])) return false;

  std::vector<std::set<int>> adj(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> alive(g.vertex_count(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!alive[v] || is_branch[v] || adj[v].size() != 2) continue;
      int a = *adj[v].begin(), b = *std::next(adj[v].begin());
      if (adj[a].count(b)) continue;  // smoothing would create a parallel edge
      alive[v] = 0;
      adj[a].erase(v);
      adj[b].erase(v);
      adj[v].clear();
      adj[a].insert(b);
      adj[b].insert(a);
      changed = true;
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (alive[v] && !is_branch[v]) return false;
  for (int p = 0; p < h.vertex_count(); ++p)
    for (int q = 0; q < h.vertex_count(); ++q) {
      if (p == q) continue;
      bool edge = adj[branch_vertex[p]].count(branch_vertex[q]) > 0;
      if (edge != h.has_edge(p, q)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------
// Pruning induced 3-subdivision models to subdivision witnesses

namespace {

struct BlobShaper {
  // Current graph as adjacency sets over the original labels; vertices
  // outside `alive` are gone.
  std::vector<std::set<int>> adj;
  std::vector<char> alive;
  std::vector<VmStep>& steps;

  void kill(int v) {
    steps.push_back(VmStep::del(v));
    alive[v] = 0;
    for (int w : adj[v]) adj[w].erase(v);
    adj[v].clear();
  }

  void lc(int v) {
    steps.push_back(VmStep::lc(v));
    std::vector<int> nb(adj[v].begin(), adj[v].end());
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        int a = nb[i], b = nb[j];
        if (adj[a].count(b)) {
          adj[a].erase(b);
          adj[b].erase(a);
        } else {
          adj[a].insert(b);
          adj[b].insert(a);
        }
      }
  }
};

struct ShapeCheck {
  bool ok = false;
  bool line_graph = false;
  int branch = -1;  // designated branch vertex (centre / path vertex)
  std::array<int, 3> triangle{-1, -1, -1};
};

// Is G[subset u terminals] one of: point, path ending at the terminals,
// subdivided claw with the terminals as leaves, or the line graph of a
// subdivided claw?
ShapeCheck check_shape(const BlobShaper& bs, const std::vector<int>& subset,
                       const std::vector<int>& terminals) {
  ShapeCheck result;
  std::set<int> all(subset.begin(), subset.end());
  for (int t : terminals) all.insert(t);
  auto deg = [&](int v) {
    int d = 0;
    for (int w : bs.adj[v])
      if (all.count(w)) ++d;
    return d;
  };
  // connectivity
  if (all.empty()) return result;
  std::set<int> seen;
  std::vector<int> stack{*all.begin()};
  seen.insert(stack[0]);
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : bs.adj[u])
      if (all.count(w) && !seen.count(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
  }
  if (seen.size() != all.size()) return result;
  for (int t : terminals)
    if (deg(t) != 1) return result;

  int n = (int)all.size();
  int m = 0;
  for (int v : all)
    m += deg(v);
  m /= 2;
  int r = (int)terminals.size();

  if (r == 0) {
    result.ok = (n == 1);
    result.branch = subset.empty() ? -1 : subset[0];
    return result;
  }
  std::vector<int> leaves, deg3;
  for (int v : all) {
    int d = deg(v);
    if (d > 3) return result;
    if (d <= 1) leaves.push_back(v);
    if (d == 3) deg3.push_back(v);
  }
  std::set<int> term_set(terminals.begin(), terminals.end());
  if (r <= 2) {
    // a path whose endpoints are exactly the terminals (plus, for r == 1,
    // one free end)
    if (m != n - 1 || !deg3.empty() || (int)leaves.size() != 2) {
      // a single edge between terminal and one vertex also has 2 leaves;
      // n == 1 cannot occur since terminals are present
      return result;
    }
    int outside_terms = 0, free_end = -1;
    for (int v : leaves)
      if (!term_set.count(v)) {
        ++outside_terms;
        free_end = v;
      }
    if (outside_terms != 2 - r) return result;
    result.ok = true;
    result.branch = (r == 1) ? free_end : subset[0];
    return result;
  }
  // r == 3
  if (m == n - 1) {
    // subdivided claw: one centre of degree 3, terminals are the leaves
    if (deg3.size() != 1 || leaves.size() != 3) return result;
    for (int v : leaves)
      if (!term_set.count(v)) return result;
    result.ok = true;
    result.branch = deg3[0];
    return result;
  }
  if (m == n) {
    // one cycle; it must be a triangle of degree-<=3 vertices carrying
    // three pendant paths towards the terminals
    if (leaves.size() != 3 || deg3.size() > 3) return result;
    for (int v : leaves)
      if (!term_set.count(v)) return result;
    // find the cycle: iteratively strip leaves
    std::set<int> core(all);
    bool stripped = true;
    while (stripped) {
      stripped = false;
      for (int v : std::vector<int>(core.begin(), core.end())) {
        int d = 0;
        for (int w : bs.adj[v])
          if (core.count(w)) ++d;
        if (d <= 1) {
          core.erase(v);
          stripped = true;
        }
      }
    }
    if (core.size() != 3) return result;
    std::vector<int> tri(core.begin(), core.end());
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (!bs.adj[tri[i]].count(tri[j])) return result;
    for (int v : all)
      if (deg(v) == 3 && !core.count(v)) return result;
    result.ok = true;
    result.line_graph = true;
    result.triangle = {tri[0], tri[1], tri[2]};
    return result;
  }
  return result;
}

}  // namespace

SubdivisionWitness maxdeg3_vm_from_3subdivision(const Graph& g, const Graph& h,
                                                const InducedMinorModel& m) {
  for (int v = 0; v < h.vertex_count(); ++v)
    if (h.degree(v) > 3)
      throw ValidationError("pattern vertex " + std::to_string(v) +
                            " has degree above 3");
  auto expected = subdivide_uniform(h, 4);
  if (!(m.pattern == expected.graph))
    throw ValidationError("model pattern is not the 3-subdivision of h");
  validate_model(g, m);

  SubdivisionWitness out;
  BlobShaper bs{std::vector<std::set<int>>(g.vertex_count()),
                std::vector<char>(g.vertex_count(), 1), out.steps};
  for (auto [u, v] : g.edges()) {
    bs.adj[u].insert(v);
    bs.adj[v].insert(u);
  }

  std::vector<int> owner(g.vertex_count(), -1);
  for (int p = 0; p < (int)m.branch_sets.size(); ++p)
    for (int v : m.branch_sets[p]) owner[v] = p;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (owner[v] == -1) bs.kill(v);

  int nh = h.vertex_count();
  auto h_edges = h.edges();

  // Prune every edge blob to a shortest (hence induced) path between the
  // neighbourhoods of its two end blobs, and pick the middle vertex.
  std::vector<int> attach(h_edges.size(), -1);  // a_e
  for (size_t e = 0; e < h_edges.size(); ++e) {
    auto [hu, hv] = h_edges[e];
    std::vector<int> zone;
    for (int j = 0; j < 3; ++j)
      for (int v : m.branch_sets[nh + 3 * (int)e + j])
        if (bs.alive[v]) zone.push_back(v);
    std::sort(zone.begin(), zone.end());
    std::set<int> zone_set(zone.begin(), zone.end());
    auto touches = [&](int v, int hvert) {
      for (int w : bs.adj[v])
        if (bs.alive[w] && owner[w] == hvert) return true;
      return false;
    };
    // BFS from the side touching Y_hu.
    std::map<int, int> parent;
    std::vector<int> frontier;
    for (int v : zone)
      if (touches(v, hu)) {
        parent[v] = v;
        frontier.push_back(v);
      }
    int goal = -1;
    while (!frontier.empty() && goal == -1) {
      std::vector<int> next;
      for (int v : frontier) {
        if (touches(v, hv)) {
          goal = v;
          break;
        }
        for (int w : bs.adj[v])
          if (zone_set.count(w) && !parent.count(w)) {
            parent[w] = v;
            next.push_back(w);
          }
      }
      frontier = std::move(next);
    }
    if (goal == -1)
      throw StructuralError("edge blob lost its connection while pruning", zone);
    std::vector<int> path{goal};
    while (parent[path.back()] != path.back()) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    if (path.size() < 3)
      throw StructuralError("edge blob path has fewer than three vertices", path);
    std::set<int> keep(path.begin(), path.end());
    for (int v : zone)
      if (!keep.count(v)) bs.kill(v);
    attach[e] = path[(path.size() - 1) / 2];
  }

  // Shape every vertex blob.
  out.branch_vertex.assign(nh, -1);
  for (int u = 0; u < nh; ++u) {
    std::vector<int> terminals;
    for (size_t e = 0; e < h_edges.size(); ++e)
      if (h_edges[e].first == u || h_edges[e].second == u)
        terminals.push_back(attach[e]);
    // component of Y_u once the attachment vertices are blocked
    std::set<int> term_set(terminals.begin(), terminals.end());
    std::set<int> blob;
    std::vector<int> stack{m.branch_sets[u][0]};
    blob.insert(stack[0]);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : bs.adj[v])
        if (bs.alive[w] && !term_set.count(w) && !blob.count(w)) {
          blob.insert(w);
          stack.push_back(w);
        }
    }
    std::vector<int> blob_list(blob.begin(), blob.end());

    // Keep the whole blob when it already has a legal shape; otherwise
    // take the smallest working subset (by size, then lexicographically).
    ShapeCheck shape = check_shape(bs, blob_list, terminals);
    std::vector<int> chosen = blob_list;
    int bn = (int)blob_list.size();
    for (int size = 1; size <= bn && !shape.ok; ++size) {
      std::vector<int> pick(size);
      std::function<bool(int, int)> combo = [&](int start, int depth) {
        if (depth == size) {
          shape = check_shape(bs, pick, terminals);
          if (shape.ok) chosen = pick;
          return shape.ok;
        }
        for (int i = start; i < bn; ++i) {
          pick[depth] = blob_list[i];
          if (combo(i + 1, depth + 1)) return true;
        }
        return false;
      };
      combo(0, 0);
    }
    if (!shape.ok)
      throw StructuralError("vertex blob cannot be pruned to a path, a subdivided "
                            "claw, or its line graph",
                            blob_list);
    std::set<int> keep(chosen.begin(), chosen.end());
    for (int v : blob_list)
      if (!keep.count(v)) bs.kill(v);

    if (shape.line_graph) {
      // One local complementation at a triangle vertex with a pendant
      // continuation turns the line graph back into a tree.
      int t = -1, centre = -1;
      for (int cand : shape.triangle) {
        if (term_set.count(cand)) continue;
        for (int x : bs.adj[cand]) {
          bool in_triangle = x == shape.triangle[0] || x == shape.triangle[1] ||
                             x == shape.triangle[2];
          if (!in_triangle && !term_set.count(x)) {
            t = cand;
            centre = x;
            break;
          }
        }
        if (t != -1) break;
      }
      if (t == -1)
        throw StructuralError("line-graph blob has no repairable triangle vertex",
                              chosen);
      bs.lc(t);
      bs.kill(t);
      out.branch_vertex[u] = centre;
    } else {
      out.branch_vertex[u] = shape.branch;
    }
  }
  return out;
}

}  // namespace twh
