#pragma once

#include <optional>
#include <vector>

#include "twhad/decomposition.hpp"
#include "twhad/graph.hpp"

namespace twh {

// Minor model: branch_sets[p] is the branch set of pattern vertex p.
// Branch sets are pairwise disjoint, each induces a connected subgraph,
// and every pattern edge has a host edge between its two branch sets.
struct MinorModel {
  Graph pattern;
  std::vector<std::vector<int>> branch_sets;
};

// Same data; additionally every pattern NON-edge must have NO host edge
// between its two branch sets.
struct InducedMinorModel {
  Graph pattern;
  std::vector<std::vector<int>> branch_sets;
};

// Throw ValidationError naming the violation: overlapping sets, a
// disconnected set, a pattern edge with no host edge, or (induced only)
// a forbidden adjacency.
void validate_model(const Graph& host, const MinorModel& m);
void validate_model(const Graph& host, const InducedMinorModel& m);

inline MinorModel as_minor_model(const InducedMinorModel& m) {
  return {m.pattern, m.branch_sets};
}

// Backtracking branch-set search. Pattern vertices are assigned in order
// of decreasing degree; branch sets are enumerated over host vertices in
// ascending order, so the first model found is deterministic.
std::optional<MinorModel> contains_minor(const Graph& host, const Graph& pattern,
                                         int cap = 16);
std::optional<InducedMinorModel> contains_induced_minor(const Graph& host,
                                                        const Graph& pattern,
                                                        int cap = 16);

struct HadwigerResult {
  int number = 0;
  MinorModel witness;  // a K_number model
};

// Largest t with a K_t minor, plus a witnessing model.
HadwigerResult hadwiger_witness(const Graph& g, int cap = 16);
int hadwiger(const Graph& g, int cap = 16);

// A maximum independent set; among the maximum ones, the lexicographically
// least as a sorted sequence.
std::vector<int> max_independent_set(const Graph& g, int cap = 40);
int clique_number(const Graph& g, int cap = 40);

// Vertex-disjoint (S,T)-paths, each internally disjoint from S u T.
// A vertex of S n T counts as a path of a single vertex.
struct Linkage {
  std::vector<std::vector<int>> paths;
  std::vector<int> s;
  std::vector<int> t;
};

void validate_linkage(const Graph& g, const Linkage& l);

struct MengerResult {
  Linkage linkage;
  Separation separation;  // S subset of A, T subset of B, order == |linkage|
};

// Maximum (S,T)-linkage together with a matching minimum-order separation,
// via unit-vertex-capacity max-flow.
MengerResult menger_linkage(const Graph& g, std::vector<int> s_set,
                            std::vector<int> t_set);

// Extracts at least k pairwise non-adjacent paths from the linkage by
// taking a maximum independent set of the contracted path graph. When the
// independent set is smaller than k the contracted graph is reported as
// witness (possible only if its Hadwiger number exceeds t).
Linkage induced_sublinkage(const Graph& g, const Linkage& l, int k, int t,
                           int cap = 40);

// The pattern-shaped graph left after contracting every branch set and
// deleting the unused vertices.
Graph contract_model(const Graph& g, const InducedMinorModel& m);
Graph contract_model(const Graph& g, const MinorModel& m);

// Model of inner.pattern in the host of `outer`.
InducedMinorModel compose_models(const InducedMinorModel& outer,
                                 const InducedMinorModel& inner);
MinorModel compose_models(const MinorModel& outer, const MinorModel& inner);

// Largest k such that the (k x k)-grid is an induced minor.
int induced_grid_number(const Graph& g, int cap = 12);

}  // namespace twh
