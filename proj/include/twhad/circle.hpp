#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twhad/decomposition.hpp"
#include "twhad/graph.hpp"
#include "twhad/minors.hpp"

namespace twh {

// Chord diagram (C, D): a cyclic order on the 2n endpoint labels plus n
// pairwise independent chords; every label is an endpoint of exactly one
// chord. Chord i of `chords` is vertex i of the crossing graph.
struct ChordDiagram {
  CyclicOrder order;
  std::vector<std::pair<int, int>> chords;
};

void validate_chord_diagram(const ChordDiagram& cd);

// Parse "1 2 1 2": the sequence of chord ids around the circle. Endpoint
// labels are the positions 0..2n-1; chords are indexed by first appearance.
ChordDiagram chord_diagram_from_ids(const std::vector<int>& ids);

// Vertex per chord, edge iff the chords cross.
Graph crossing_graph(const ChordDiagram& cd);

// ---------------------------------------------------------------------
// GF(2) perturbations

struct Gf2Matrix {
  int n = 0;
  std::vector<uint64_t> rows;  // n <= 64, row bitmasks

  bool get(int i, int j) const { return rows[i] >> j & 1; }
  void set(int i, int j, bool v) {
    if (v)
      rows[i] |= 1ULL << j;
    else
      rows[i] &= ~(1ULL << j);
  }
  bool symmetric() const;
};

int gf2_rank(Gf2Matrix m);

// Small graph allowed to carry loops; colours are 0-based.
struct LoopyGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalised u <= v, loops u == v

  bool has(int u, int v) const;
};

// Colouring zeta plus the auxiliary loopy graph H; adjacency between
// colour classes is XOR-ed by H.
struct PerturbationModel {
  int k = 0;
  LoopyGraph h;
  std::vector<int> zeta;
};

void validate_perturbation_model(const PerturbationModel& m, int n);

// Derives the colour-perturbation model of a symmetric GF(2) matrix: the
// colour of vertex i is the index of column i in the sorted column space,
// k is the full space size 2^rank, and colours j, j' are H-adjacent when
// the corresponding bilinear entry is 1.
PerturbationModel perturbation_model_from_matrix(const Gf2Matrix& p);

// Edge vw iff (vw in G0) xor (zeta(v) zeta(w) in H); loops act on
// same-colour pairs.
Graph apply_perturbation(const Graph& g0, const PerturbationModel& m);

// ---------------------------------------------------------------------
// The good-colour lemma and the perturbed separator

struct GoodColour {
  int colour = -1;
  std::pair<Edge, Edge> crossing;
  std::pair<Edge, Edge> non_crossing;
};

// Given a cyclic order on the 4k vertices of K_{4k} and a k-colouring of
// its edges, some colour class contains both a crossing and a
// non-crossing pair of non-incident edges. colour_of maps normalised
// edges (u < v) to 0..k-1.
GoodColour good_colour(const CyclicOrder& c,
                       const std::vector<std::vector<int>>& colour_of, int k);

struct PerturbedSepResult {
  enum class Route {
    Separation,          // small Menger cut between two segment chord sets
    MonochromaticGrid,   // K_{t,t} from two monochromatic chord families
    ContractedLinkage,   // clique found in a contracted linkage graph
    Fallback,            // exhaustive K_{t+1} search
  };
  Route route;
  std::optional<Separation> separation;  // (4k-1)/4k-balanced, order < k(4k+9)t
  std::optional<MinorModel> clique;      // K_{t+1} model
};

// The separator-or-clique dichotomy for perturbed circle graphs: cut the
// endpoint circle into 4k segments balanced on roots of X, run Menger
// between the chord sets of every segment pair, and either return a small
// balanced cut or assemble K_{t+1} from monochromatic crossing families
// via the good-colour lemma. Requires |x| == 4 k^2 (4k+9) t.
PerturbedSepResult perturbed_separator_or_clique(const ChordDiagram& cd,
                                                 const PerturbationModel& m,
                                                 const std::vector<int>& x, int t,
                                                 int clique_cap = 64);

}  // namespace twh
