#include "twhad/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "twhad/errors.hpp"

namespace twh {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  words_ = (n + 63) / 64;
  adj_.resize(n);
  bits_.assign((size_t)n * words_, 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    if (!has_edge(u, v)) {
      set_bit(u, v);
      set_bit(v, u);
      adj_[u].push_back(v);
      adj_[v].push_back(u);
      ++m_;
    }
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw ValidationError("vertex " + std::to_string(v) + " out of range [0," +
                          std::to_string(n_) + ")");
}

void Graph::set_bit(int u, int v) {
  bits_[(size_t)u * words_ + (v >> 6)] |= 1ULL << (v & 63);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  auto e = edges();
  e.push_back({u, v});
  return Graph(n_, e);
}

Graph Graph::without_vertex(int v) const {
  check_vertex(v);
  std::vector<Edge> e;
  for (auto [a, b] : edges()) {
    if (a == v || b == v) continue;
    e.push_back({a > v ? a - 1 : a, b > v ? b - 1 : b});
  }
  return Graph(n_ - 1, e);
}

Graph Graph::induced(const std::vector<int>& verts) const {
  std::vector<int> index(n_, -1);
  for (int i = 0; i < (int)verts.size(); ++i) {
    check_vertex(verts[i]);
    if (index[verts[i]] != -1)
      throw ValidationError("duplicate vertex " + std::to_string(verts[i]) +
                            " in induced-subgraph selection");
    index[verts[i]] = i;
  }
  std::vector<Edge> e;
  for (int i = 0; i < (int)verts.size(); ++i)
    for (int w : adj_[verts[i]])
      if (index[w] > i) e.push_back({i, index[w]});
  return Graph((int)verts.size(), e);
}

Graph Graph::complement() const {
  std::vector<Edge> e;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) e.push_back({u, v});
  return Graph(n_, e);
}

std::vector<int> Graph::component_of(int v) const {
  check_vertex(v);
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{v}, comp;
  seen[v] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    comp.push_back(u);
    for (int w : adj_[u])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<char> seen(n_, 0);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < n_; ++v) {
    if (seen[v]) continue;
    auto comp = component_of(v);
    for (int u : comp) seen[u] = 1;
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  return (int)component_of(0).size() == n_;
}

bool Graph::connected_subset(const std::vector<int>& verts) const {
  if (verts.empty()) return false;
  return induced(verts).is_connected();
}

bool Graph::is_tree() const {
  return n_ >= 1 && m_ == n_ - 1 && is_connected();
}

bool Graph::is_bipartite() const {
  std::vector<int> colour(n_, -1);
  for (int s = 0; s < n_; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj_[u]) {
        if (colour[w] == -1) {
          colour[w] = colour[u] ^ 1;
          stack.push_back(w);
        } else if (colour[w] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool Graph::has_triangle() const {
  for (auto [u, v] : edges())
    for (int w : adj_[u])
      if (w != v && has_edge(v, w)) return true;
  return false;
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  auto e = path_graph(n).edges();
  if (n >= 3) e.push_back({0, n - 1});
  return Graph(n, e);
}

namespace {
bool iso_rec(const Graph& a, const Graph& b, std::vector<int>& map,
             std::vector<char>& used, int next) {
  int n = a.vertex_count();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (a.degree(next) != b.degree(cand)) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      if (a.has_edge(prev, next) != b.has_edge(map[prev], cand)) ok = false;
    if (!ok) continue;
    map[next] = cand;
    used[cand] = 1;
    if (iso_rec(a, b, map, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}
}  // namespace

bool isomorphic_small(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  int n = a.vertex_count();
  if (n > 9) throw ResourceLimitError("isomorphic_small is capped at 9 vertices");
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  return iso_rec(a, b, map, used, 0);
}

// ---------------------------------------------------------------------

int GridCoordMap::vertex(int r, int c) const {
  if (!in_range(r, c))
    throw ValidationError("grid coordinate (" + std::to_string(r) + "," +
                          std::to_string(c) + ") out of range");
  return (r - 1) * cols + (c - 1);
}

std::pair<int, int> GridCoordMap::coord(int v) const {
  if (v < 0 || v >= rows * cols)
    throw ValidationError("grid vertex " + std::to_string(v) + " out of range");
  return {v / cols + 1, v % cols + 1};
}

GridGraph make_grid(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("grid dimensions must be positive");
  GridCoordMap coords{m, n};
  std::vector<Edge> e;
  for (int r = 1; r <= m; ++r)
    for (int c = 1; c <= n; ++c) {
      if (c < n) e.push_back({coords.vertex(r, c), coords.vertex(r, c + 1)});
      if (r < m) e.push_back({coords.vertex(r, c), coords.vertex(r + 1, c)});
    }
  return {Graph(m * n, e), coords};
}

GridGraph make_strong_grid(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("grid dimensions must be positive");
  GridCoordMap coords{m, n};
  std::vector<Edge> e;
  for (int r = 1; r <= m; ++r)
    for (int c = 1; c <= n; ++c)
      for (int dr = 0; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc <= 0) continue;  // each pair once
          int r2 = r + dr, c2 = c + dc;
          if (coords.in_range(r2, c2))
            e.push_back({coords.vertex(r, c), coords.vertex(r2, c2)});
        }
  return {Graph(m * n, e), coords};
}

Graph make_path_power(int n, int t) {
  if (n < 1 || t < 1) throw std::invalid_argument("path power needs n, t >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n && j - i <= t; ++j) e.push_back({i, j});
  return Graph(n, e);
}

// ---------------------------------------------------------------------

Subdivision subdivide(const Graph& g, const std::map<Edge, int>& lengths) {
  Subdivision out;
  out.original_n = g.vertex_count();
  out.original_edges = g.edges();
  out.proper = true;  // vacuous for edgeless graphs
  int next = g.vertex_count();
  std::vector<Edge> e;
  for (auto edge : out.original_edges) {
    auto it = lengths.find(edge);
    if (it == lengths.end())
      throw std::invalid_argument("no length for edge (" + std::to_string(edge.first) +
                                  "," + std::to_string(edge.second) + ")");
    int len = it->second;
    if (len < 1)
      throw std::invalid_argument("subdivision length must be positive, got " +
                                  std::to_string(len));
    if (len < 2) out.proper = false;
    std::vector<int> inner;
    int prev = edge.first;
    for (int i = 0; i + 1 < len; ++i) {
      inner.push_back(next);
      e.push_back({prev, next});
      prev = next++;
    }
    e.push_back({prev, edge.second});
    out.interior.push_back(std::move(inner));
  }
  out.graph = Graph(next, e);
  return out;
}

Subdivision subdivide_uniform(const Graph& g, int length) {
  std::map<Edge, int> lengths;
  for (auto e : g.edges()) lengths[e] = length;
  return subdivide(g, lengths);
}

// ---------------------------------------------------------------------

CyclicOrder::CyclicOrder(std::vector<int> elements) : elems_(std::move(elements)) {
  if (!elems_.empty()) {
    auto mn = std::min_element(elems_.begin(), elems_.end());
    std::rotate(elems_.begin(), mn, elems_.end());
  }
  for (int i = 0; i < (int)elems_.size(); ++i) {
    if (!pos_.emplace(elems_[i], i).second)
      throw ValidationError("repeated label " + std::to_string(elems_[i]) +
                            " in cyclic order");
  }
}

int CyclicOrder::position(int label) const {
  auto it = pos_.find(label);
  if (it == pos_.end())
    throw ValidationError("label " + std::to_string(label) + " not in cyclic order");
  return it->second;
}

bool CyclicOrder::between(int a, int b, int x) const {
  if (a == b || a == x || b == x)
    throw std::invalid_argument("cyclic betweenness needs distinct labels");
  int n = size();
  int pa = position(a);
  int rb = ((position(b) - pa) % n + n) % n;
  int rx = ((position(x) - pa) % n + n) % n;
  return rb < rx;
}

bool chords_cross(const CyclicOrder& c, int a, int b, int x, int y) {
  // Exactly one of x, y inside the arc from a to b.
  bool x_in = c.between(a, x, b);
  bool y_in = c.between(a, y, b);
  return x_in != y_in;
}

}  // namespace twh
