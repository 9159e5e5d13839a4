#include "twhad/ordered.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "twhad/errors.hpp"

namespace twh {

std::vector<int> OrderedGraph::ranks() const {
  std::vector<int> rank(by_rank.size());
  for (int r = 0; r < (int)by_rank.size(); ++r) rank[by_rank[r]] = r;
  return rank;
}

void validate_ordered_graph(const OrderedGraph& og) {
  if ((int)og.by_rank.size() != og.graph.vertex_count())
    throw ValidationError("order length does not match the vertex count");
  std::vector<char> seen(og.graph.vertex_count(), 0);
  for (int v : og.by_rank) {
    og.graph.check_vertex(v);
    if (seen[v])
      throw ValidationError("vertex " + std::to_string(v) + " appears twice in the order");
    seen[v] = 1;
  }
}

namespace {

// Edges as rank pairs (lo, hi), sorted; scanning them in this order makes
// every "first witness" deterministic.
std::vector<std::pair<Edge, Edge>> rank_edges(const OrderedGraph& og,
                                              std::vector<Edge>* out_by_vertex) {
  auto rank = og.ranks();
  std::vector<std::pair<Edge, Edge>> edges;  // (rank pair, vertex pair)
  for (auto [u, v] : og.graph.edges()) {
    int ru = rank[u], rv = rank[v];
    if (ru > rv) std::swap(ru, rv);
    edges.push_back({{ru, rv}, {og.by_rank[ru], og.by_rank[rv]}});
  }
  std::sort(edges.begin(), edges.end());
  if (out_by_vertex) {
    out_by_vertex->clear();
    for (auto& e : edges) out_by_vertex->push_back(e.second);
  }
  return edges;
}

bool ranks_cross(Edge a, Edge b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

}  // namespace

std::optional<std::pair<Edge, Edge>> crossing_pair_witness(const OrderedGraph& og) {
  validate_ordered_graph(og);
  auto edges = rank_edges(og, nullptr);
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j)
      if (ranks_cross(edges[i].first, edges[j].first))
        return std::pair<Edge, Edge>{edges[i].second, edges[j].second};
  return std::nullopt;
}

XfreeCheck is_x_free(const OrderedGraph& og) {
  validate_ordered_graph(og);
  auto edges = rank_edges(og, nullptr);
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j) {
      if (!ranks_cross(edges[i].first, edges[j].first)) continue;
      auto [u, v] = edges[i].second;
      auto [x, y] = edges[j].second;
      if (og.graph.has_edge(u, x) || og.graph.has_edge(u, y) ||
          og.graph.has_edge(v, x) || og.graph.has_edge(v, y))
        continue;
      return {false, std::pair<Edge, Edge>{edges[i].second, edges[j].second}};
    }
  return {true, std::nullopt};
}

XfreeSepResult xfree_separator_or_clique(const OrderedGraph& og,
                                         const std::vector<int>& x, int t) {
  validate_ordered_graph(og);
  if (t < 1) throw std::invalid_argument("need t >= 1");
  if ((int)x.size() != 12 * t)
    throw std::invalid_argument("X must have exactly 12t = " +
                                std::to_string(12 * t) + " vertices, got " +
                                std::to_string(x.size()));
  auto check = is_x_free(og);
  if (!check.xfree)
    throw ValidationError("graph is not x-free; offending pair " +
                          std::to_string(check.witness->first.first) + "-" +
                          std::to_string(check.witness->first.second) + " / " +
                          std::to_string(check.witness->second.first) + "-" +
                          std::to_string(check.witness->second.second));

  int n = og.graph.vertex_count();
  auto rank = og.ranks();
  std::vector<int> x_ranks;
  for (int v : x) {
    og.graph.check_vertex(v);
    x_ranks.push_back(rank[v]);
  }
  std::sort(x_ranks.begin(), x_ranks.end());
  if (std::adjacent_find(x_ranks.begin(), x_ranks.end()) != x_ranks.end())
    throw std::invalid_argument("X has repeated vertices");

  // Quartile intervals: each contains exactly 3t members of X; boundary
  // right after the last member of a quartile.
  std::array<std::pair<int, int>, 4> interval;  // rank ranges, inclusive
  int lo = 0;
  for (int q = 0; q < 4; ++q) {
    int hi = (q == 3) ? n - 1 : x_ranks[3 * t * (q + 1) - 1];
    interval[q] = {lo, hi};
    lo = hi + 1;
  }
  auto interval_vertices = [&](int q) {
    std::vector<int> out;
    for (int r = interval[q].first; r <= interval[q].second; ++r)
      out.push_back(og.by_rank[r]);
    std::sort(out.begin(), out.end());
    return out;
  };

  Rational alpha(3, 4);
  XfreeSepResult result{};

  // Oriented linkage paths sorted by leftmost end, trimmed to 3t. The
  // detour paths split by where their second vertex lies relative to the
  // two linked intervals; one of the outer classes is structurally empty.
  struct Family {
    std::vector<std::vector<int>> direct;  // length-1 paths
    std::vector<std::vector<int>> below, between, above;
  };
  auto run_pair = [&](int qa, int qb, XfreeSepResult::Route sep_route,
                      std::optional<Family>& family) -> bool {
    auto res = menger_linkage(og.graph, interval_vertices(qa), interval_vertices(qb));
    if (res.separation.order() < 3 * t) {
      if (!is_alpha_balanced(og.graph, res.separation, x, alpha))
        throw StructuralError("Menger separation failed the balance check");
      result.route = sep_route;
      result.separation = res.separation;
      return true;
    }
    auto paths = res.linkage.paths;
    for (auto& p : paths) {
      bool front_in_a = rank[p.front()] >= interval[qa].first &&
                        rank[p.front()] <= interval[qa].second;
      if (!front_in_a) std::reverse(p.begin(), p.end());
    }
    std::sort(paths.begin(), paths.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                return rank[a.front()] < rank[b.front()];
              });
    paths.resize(3 * t);
    Family fam;
    for (auto& p : paths) {
      int second = rank[p[1]];
      if (second < interval[qa].first)
        fam.below.push_back(p);
      else if (second > interval[qa].second && second < interval[qb].first)
        fam.between.push_back(p);
      else if (second > interval[qb].second)
        fam.above.push_back(p);
      else
        fam.direct.push_back(p);
    }
    family = std::move(fam);
    return false;
  };

  std::optional<Family> fam13, fam24;
  if (run_pair(0, 2, XfreeSepResult::Route::SeparationFirstPair, fam13))
    return result;
  if (run_pair(1, 3, XfreeSepResult::Route::SeparationSecondPair, fam24))
    return result;

  auto finish_clique = [&](MinorModel model, XfreeSepResult::Route route) {
    validate_model(og.graph, model);
    result.route = route;
    result.clique = std::move(model);
    return result;
  };

  if ((int)fam13->direct.size() >= t && (int)fam24->direct.size() >= t) {
    // Every length-1 path of one family crosses every one of the other;
    // x-freeness makes those pairs adjacent, giving K_{t,t} and so K_{t+1}.
    std::vector<std::vector<int>> sets;
    for (int i = 0; i + 1 < t; ++i) {
      std::vector<int> merged = fam13->direct[i];
      merged.insert(merged.end(), fam24->direct[i].begin(), fam24->direct[i].end());
      std::sort(merged.begin(), merged.end());
      sets.push_back(std::move(merged));
    }
    auto tail = [&](std::vector<int> p) {
      std::sort(p.begin(), p.end());
      return p;
    };
    sets.push_back(tail(fam13->direct[t - 1]));
    sets.push_back(tail(fam24->direct[t - 1]));
    return finish_clique(MinorModel{complete_graph(t + 1), std::move(sets)},
                         XfreeSepResult::Route::CrossingMatching);
  }

  // Some family is short on direct paths, so one of its detour classes has
  // more than t paths; those are pairwise adjacent.
  for (const Family* fam : {&*fam13, &*fam24})
    for (const auto* cls : {&fam->below, &fam->between, &fam->above})
      if ((int)cls->size() >= t + 1) {
        std::vector<std::vector<int>> sets;
        for (int i = 0; i <= t; ++i) {
          auto p = (*cls)[i];
          std::sort(p.begin(), p.end());
          sets.push_back(std::move(p));
        }
        return finish_clique(MinorModel{complete_graph(t + 1), std::move(sets)},
                             XfreeSepResult::Route::AdjacentPaths);
      }
  throw StructuralError(
      "no separator and no clique assembly applies; the instance violates the "
      "x-free dichotomy");
}

// ---------------------------------------------------------------------
// Outer-string diagrams

void validate_string_diagram(const StringDiagram& d) {
  std::vector<Point> roots;
  for (const auto& s : d.strings) {
    if (s.points.size() < 2)
      throw ValidationError("string " + std::to_string(s.id) +
                            " needs a root and at least one interior point");
    for (const auto& p : s.points) check_coordinate_range(p);
    if (unit_circle_side(s.points[0]) != 0)
      throw ValidationError("root of string " + std::to_string(s.id) +
                            " is not on the unit circle");
    for (size_t i = 1; i < s.points.size(); ++i) {
      if (unit_circle_side(s.points[i]) >= 0)
        throw ValidationError("string " + std::to_string(s.id) +
                              " leaves the open disk after its root");
      if (s.points[i] == s.points[i - 1])
        throw ValidationError("string " + std::to_string(s.id) +
                              " repeats a point");
    }
    for (const auto& r : roots)
      if (r == s.points[0])
        throw ValidationError("two strings share the root " + r.x.str() + "," +
                              r.y.str());
    roots.push_back(s.points[0]);
  }
}

OrderedGraph outer_string_graph(const StringDiagram& d) {
  validate_string_diagram(d);
  int n = (int)d.strings.size();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (polylines_intersect(d.strings[i].points, d.strings[j].points))
        edges.push_back({i, j});

  // Clockwise root order starting at the lexicographically least root.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return ccw_angle_less(d.strings[a].points[0], d.strings[b].points[0]);
  });
  int start_pos = 0;
  for (int pos = 1; pos < n; ++pos)
    if (d.strings[idx[pos]].points[0] < d.strings[idx[start_pos]].points[0])
      start_pos = pos;
  std::vector<int> by_rank;
  for (int step = 0; step < n; ++step)
    by_rank.push_back(idx[((start_pos - step) % n + n) % n]);

  OrderedGraph og{Graph(n, edges), by_rank};
  validate_ordered_graph(og);
  return og;
}

}  // namespace twh
