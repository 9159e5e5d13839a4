#pragma once

#include <array>
#include <vector>

#include "twhad/graph.hpp"
#include "twhad/minors.hpp"

namespace twh {

// One rewriting step: locally complement at a vertex, or delete it.
// Steps always name vertices by their index in the graph the whole
// sequence started from, so certificates replay bit-exactly.
struct VmStep {
  enum class Kind { LocalComplement, Delete };
  Kind kind;
  int vertex;

  static VmStep lc(int v) { return {Kind::LocalComplement, v}; }
  static VmStep del(int v) { return {Kind::Delete, v}; }

  friend bool operator==(const VmStep& a, const VmStep& b) {
    return a.kind == b.kind && a.vertex == b.vertex;
  }
};

// Toggle all edges inside the neighbourhood of v.
Graph local_complement(const Graph& g, int v);

struct VmApplyResult {
  Graph graph;
  std::vector<int> labels;  // labels[i] = index of vertex i in the input graph
};

// Applies the steps in order. Deleted vertices leave index holes which the
// returned labelling resolves.
VmApplyResult apply_vm_sequence(const Graph& g, const std::vector<VmStep>& steps);

// ---------------------------------------------------------------------
// Minor -> induced minor inside the 1-subdivision

struct InducedInSubdivision {
  Subdivision subdivision;  // the 1-subdivision of the original host
  InducedMinorModel model;  // model of m.pattern inside subdivision.graph
};

// Given a minor model of h in g, produce an induced minor model of h in
// the 1-subdivision of g: each branch set keeps its internal subdivision
// vertices, and one chosen connecting edge per pattern edge contributes
// its subdivision vertex to the lower-indexed side.
InducedInSubdivision minor_to_induced_in_1subdivision(const Graph& g,
                                                      const MinorModel& m);

// ---------------------------------------------------------------------
// Minor -> vertex-minor sequence on a proper subdivision

struct VmReduction {
  std::vector<VmStep> steps;
  // image[p] = label (in the subdivision) of the vertex realising pattern
  // vertex p after the steps are applied.
  std::vector<int> image;
};

// Emits a sequence of local complementations and deletions turning the
// proper subdivision `sub` of g into a graph isomorphic to m.pattern,
// with the isomorphism returned. The reduction first shortens every
// subdivision path to a single midpoint, then repeatedly deletes unused
// vertices (lowest index first) or contracts a branch-set edge through
// its midpoint, and finally materialises the pattern edges by local
// complementation at the surviving midpoints.
VmReduction minor_to_vm_sequence(const Graph& g, const MinorModel& m,
                                 const Subdivision& sub);

// ---------------------------------------------------------------------
// Crossing elimination on marked drawings

// A planarised drawing: crossing vertices have degree exactly 4 and carry
// their clockwise rotation. Opposite rotation entries belong to the same
// underlying edge.
struct MarkedDrawing {
  Graph graph;
  struct Crossing {
    int vertex;
    std::array<int, 4> rotation;
  };
  std::vector<Crossing> crossings;
};

void validate_drawing(const MarkedDrawing& d);

struct CrossingElimination {
  Graph augmented;            // the 1-subdivision plus the rotation cycles
  std::vector<VmStep> steps;  // lc + delete at every crossing vertex
  Graph underlying;           // the drawn graph, recovered by tracing
  std::vector<int> vertex_ids;  // underlying vertex -> label in `augmented`
};

// Builds the cycle-augmented 1-subdivision of the drawing and the step
// sequence that resolves every crossing into its two straight-through
// connections. Applying the steps to `augmented` yields a proper
// subdivision of `underlying`.
CrossingElimination eliminate_crossings_vm(const MarkedDrawing& d);

// ---------------------------------------------------------------------
// Degree-3 patterns from induced 3-subdivisions

struct SubdivisionWitness {
  std::vector<VmStep> steps;
  std::vector<int> branch_vertex;  // pattern vertex -> surviving label
};

// Given an induced minor model of the 3-subdivision of h (max degree 3)
// in g, emits steps whose application leaves a proper subdivision of h.
// Blobs are pruned to a path, a subdivided claw, or the line graph of a
// subdivided claw; the line-graph case is repaired by one local
// complementation at a triangle vertex.
SubdivisionWitness maxdeg3_vm_from_3subdivision(const Graph& g, const Graph& h,
                                                const InducedMinorModel& m);

// Smooth all degree-2 vertices outside the declared branch vertices and
// test whether the result is exactly h (under the declared map) with every
// branch path of length at least two.
bool recognize_proper_subdivision(const Graph& g, const Graph& h,
                                  const std::vector<int>& branch_vertex);

}  // namespace twh
