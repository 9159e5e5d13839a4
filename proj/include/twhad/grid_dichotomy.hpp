#pragma once

#include <optional>
#include <utility>

#include "twhad/graph.hpp"
#include "twhad/minors.hpp"

namespace twh {

// Host graph on the coordinate set [N] x [N] with N = t(2k+1): all grid
// edges present, arbitrary further edges permitted.
struct DichotomyInput {
  Graph host;
  GridCoordMap coords;
  int k = 0;
  int t = 0;
};

void validate_dichotomy_input(const DichotomyInput& in);

// Either an induced (k x k)-grid model (from a block whose interior has no
// jump edge) or a K_t minor model assembled from crossing paths in every
// block. jump_free_block reports which block produced the induced branch,
// 0-based row-major.
struct DichotomyResult {
  std::optional<InducedMinorModel> induced_grid;
  std::optional<MinorModel> clique;
  std::optional<std::pair<int, int>> jump_free_block;
};

// An edge is a jump when it spans at least 2 in some coordinate. Blocks
// are scanned in row-major order; the first block whose interior is
// jump-free wins. Otherwise every block contributes two crossing corner
// paths, blocks contract to K_4s, the block grid contracts to the strong
// product P_{t+1} x P_{t+1}, and the K_{2s} construction inside it yields
// K_t for whichever of t, t+1 is even.
DichotomyResult grid_dichotomy(const DichotomyInput& in);

// The explicit K_{2s} minor model in the strong grid P_{2s} x P_{2s}:
// 2s diagonal path-shaped branch sets, pairwise adjacent.
struct StrongGridClique {
  GridGraph host;
  MinorModel model;
};
StrongGridClique k2s_in_strong_grid(int s);

// From an induced minor model of the (2t x (4t-1))-grid, select the
// boundary/odd-row/offset cells, shrink their branch sets to
// inclusion-minimal connected sets preserving the contracted pattern, and
// return the union: a planar induced subgraph of treewidth at least t.
std::vector<int> extract_planar_high_tw(const Graph& g, const InducedMinorModel& m,
                                        int t, int t_cap = 2);

}  // namespace twh
