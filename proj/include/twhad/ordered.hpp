#pragma once

#include <optional>
#include <vector>

#include "twhad/decomposition.hpp"
#include "twhad/geometry.hpp"
#include "twhad/graph.hpp"
#include "twhad/minors.hpp"

namespace twh {

// Graph with a total order on its vertices; by_rank[r] is the vertex in
// position r.
struct OrderedGraph {
  Graph graph;
  std::vector<int> by_rank;

  std::vector<int> ranks() const;  // inverse permutation
};

void validate_ordered_graph(const OrderedGraph& og);

// Edges uv, xy with four distinct endpoints cross when their positions
// interleave: u < x < v < y in the order.
std::optional<std::pair<Edge, Edge>> crossing_pair_witness(const OrderedGraph& og);

struct XfreeCheck {
  bool xfree = true;
  std::optional<std::pair<Edge, Edge>> witness;  // a crossing pair with no
                                                 // connecting edge
};

// An ordered graph is x-free when every crossing pair uv, xy has at least
// one of ux, uy, vx, vy as an edge.
XfreeCheck is_x_free(const OrderedGraph& og);

struct XfreeSepResult {
  enum class Route {
    SeparationFirstPair,   // Menger cut between the 1st and 3rd quartile
    SeparationSecondPair,  // Menger cut between the 2nd and 4th quartile
    CrossingMatching,      // K_{t,t} from length-1 paths of both linkages
    AdjacentPaths,         // t+1 mutually adjacent linkage paths
  };
  Route route;
  std::optional<Separation> separation;  // 3/4-balanced for X, order < 3t
  std::optional<MinorModel> clique;      // K_{t+1} model
};

// The separator-or-clique dichotomy for x-free ordered graphs: split X
// into quartiles along the order, run Menger between opposite interval
// pairs, and either return a small balanced cut or assemble a K_{t+1}
// minor from crossing length-1 paths (preferred) or from mutually
// adjacent paths. Requires |x| == 12 t.
XfreeSepResult xfree_separator_or_clique(const OrderedGraph& og,
                                         const std::vector<int>& x, int t);

// ---------------------------------------------------------------------
// Outer-string diagrams

// Polylines with exact rational coordinates in the closed unit disk; the
// first point of each string (its root) lies on the boundary circle, all
// other points strictly inside.
struct StringDiagram {
  struct String {
    int id = 0;
    std::vector<Point> points;
  };
  std::vector<String> strings;
};

void validate_string_diagram(const StringDiagram& d);

// Intersection graph of the strings (vertex i is strings[i]), ordered
// clockwise by root starting from the lexicographically least root. The
// result always admits this order as an x-free one.
OrderedGraph outer_string_graph(const StringDiagram& d);

}  // namespace twh
