#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace twh {

using Edge = std::pair<int, int>;

// Finite simple undirected graph on vertices 0..n-1.
//
// Graphs are immutable values: every edit produces a new graph. Adjacency
// is kept twice, as sorted neighbour lists and as a bit matrix, so both
// iteration and pair queries are cheap. Certificate validation dominates
// the workload here and copies of desk-scale graphs are free.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (bits_[(size_t)u * words_ + (v >> 6)] >> (v & 63)) & 1;
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(int v) const { return (int)neighbors(v).size(); }

  // All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_vertex(int v) const;  // relabels w > v to w-1

  // Subgraph induced by `verts`; vertex i of the result is verts[i].
  Graph induced(const std::vector<int>& verts) const;
  Graph complement() const;

  // Connected component containing v, sorted.
  std::vector<int> component_of(int v) const;
  std::vector<std::vector<int>> components() const;
  bool is_connected() const;  // vacuously true for n == 0
  bool connected_subset(const std::vector<int>& verts) const;

  bool is_tree() const;
  bool is_bipartite() const;
  bool has_triangle() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

  void check_vertex(int v) const;

 private:
  void set_bit(int u, int v);

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<uint64_t> bits_;  // row-major n x words_
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// Brute-force isomorphism for tiny graphs (n <= 9).
bool isomorphic_small(const Graph& a, const Graph& b);

// ---------------------------------------------------------------------
// Grids

// Bijection between vertices 0..rows*cols-1 and 1-based (row, col)
// coordinates; row-major.
struct GridCoordMap {
  int rows = 0;
  int cols = 0;
  int vertex(int r, int c) const;  // 1-based coordinates
  std::pair<int, int> coord(int v) const;
  bool in_range(int r, int c) const {
    return 1 <= r && r <= rows && 1 <= c && c <= cols;
  }
};

struct GridGraph {
  Graph graph;
  GridCoordMap coords;
};

// (m x n)-grid: (r,c) ~ (r',c') when one coordinate matches and the other
// differs by exactly one.
GridGraph make_grid(int m, int n);

// Strong product of paths: adjacent whenever both coordinate gaps are <= 1
// (king moves).
GridGraph make_strong_grid(int m, int n);

// Path power: vertices 0..n-1, edge whenever 0 < |i - j| <= t.
Graph make_path_power(int n, int t);

// ---------------------------------------------------------------------
// Subdivisions

// Result of replacing every edge of a graph by a path. Original vertices
// keep their indices; interior vertices are appended in the order of
// edges() and then along each path from the lower endpoint.
struct Subdivision {
  Graph graph;
  std::vector<Edge> original_edges;              // parallel to paths
  std::vector<std::vector<int>> interior;        // per edge, in order u -> v
  int original_n = 0;
  bool proper = false;                           // all path lengths >= 2
};

// `lengths[e]` is the number of edges of the path replacing edge e
// (1 keeps the edge as is). Missing or non-positive lengths are rejected.
Subdivision subdivide(const Graph& g, const std::map<Edge, int>& lengths);
Subdivision subdivide_uniform(const Graph& g, int length);

// ---------------------------------------------------------------------
// Cyclic orders

// A circular arrangement of distinct integer labels with the derived
// ternary betweenness relation. Canonical form starts at the minimum
// label so equal orders compare equal.
class CyclicOrder {
 public:
  CyclicOrder() = default;
  explicit CyclicOrder(std::vector<int> elements);

  int size() const { return (int)elems_.size(); }
  const std::vector<int>& elements() const { return elems_; }
  int at(int pos) const { return elems_[((pos % size()) + size()) % size()]; }
  bool contains(int label) const { return pos_.count(label) > 0; }
  int position(int label) const;

  // True iff (a, b, x) is in the derived ternary relation: reading the
  // circle from a, b appears strictly before x.
  bool between(int a, int b, int x) const;

  friend bool operator==(const CyclicOrder& a, const CyclicOrder& b) {
    return a.elems_ == b.elems_;
  }

 private:
  std::vector<int> elems_;
  std::map<int, int> pos_;
};

inline bool cyclic_between(const CyclicOrder& c, int a, int b, int x) {
  return c.between(a, b, x);
}

// Chords {a,b}, {x,y} of a cyclic order cross when their endpoints
// interleave: (a, x, b, y) or (a, y, b, x) around the circle.
bool chords_cross(const CyclicOrder& c, int a, int b, int x, int y);

}  // namespace twh
