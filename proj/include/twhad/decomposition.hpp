#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "twhad/graph.hpp"
#include "twhad/rational.hpp"

namespace twh {

// Tree-decomposition (T, beta): bags[i] is the bag of tree node i.
struct TreeDecomposition {
  Graph tree;
  std::vector<std::vector<int>> bags;

  int width() const {
    int w = -1;
    for (auto& b : bags) w = std::max(w, (int)b.size() - 1);
    return w;
  }
};

// Checks the three decomposition axioms against g and returns the width.
// Violations raise ValidationError naming the witness: an uncovered edge,
// a vertex whose bag trace is disconnected, or a vertex with no bag.
int td_validate(const Graph& g, const TreeDecomposition& td);

// Separation (A, B): A u B = V and no edge joins A\B to B\A.
// Order is |A n B|.
struct Separation {
  std::vector<int> a;  // sorted
  std::vector<int> b;  // sorted

  int order() const { return (int)cut().size(); }
  std::vector<int> cut() const;  // A n B, sorted
};

void validate_separation(const Graph& g, const Separation& s);

// |X n (A\B)| <= alpha|X| and |X n (B\A)| <= alpha|X|, decided exactly.
bool is_alpha_balanced(const Graph& g, const Separation& s,
                       const std::vector<int>& x, const Rational& alpha);

// Brute-force separator oracle: the lexicographically least alpha-balanced
// separation for x of order at most max_order, or nullopt if none exists.
// Ties: least A n B as a sorted sequence, then least A.
std::optional<Separation> exhaustive_balanced_separator(
    const Graph& g, const std::vector<int>& x, const Rational& alpha,
    int max_order, int cap = 16);

// Parameters of the separator-to-decomposition recursion. alpha is
// (c-1)/c and admissibility requires q >= c*k + 1.
struct BalanceSpec {
  Rational alpha;
  std::vector<int> x;  // initial set, |x| <= q
  int max_order = 0;   // k
  int q = 0;
  int c = 0;

  static BalanceSpec make(int c, int k, int q, std::vector<int> x);
};

using SeparatorOracle = std::function<std::optional<Separation>(
    const Graph&, const std::vector<int>&)>;

// Builds a tree-decomposition of width at most q + k - 1 from a balanced
// separator oracle, by the standard recursion: pad X to size q with the
// lowest-index fresh vertices, split on the returned separation (A1, A2),
// recurse on G[A_i] with X_i = (X n A_i) u (A1 n A2), and join the two
// child roots under a fresh bag X u (A1 n A2).
//
// The oracle receives induced subgraphs with local labels 0..n'-1 ordered
// by the original vertex ids. Oracle failure raises NoSeparatorError with
// the offending query (in original labels); a returned separation that is
// not alpha-balanced of order <= k raises OracleContractError.
TreeDecomposition td_from_separator_oracle(const Graph& g, const BalanceSpec& spec,
                                           const SeparatorOracle& oracle);

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
};

// Exact treewidth by dynamic programming over vertex subsets, processing
// popcount layers with OpenMP. Default cap 20; memory is 2^n bytes plus
// layer index lists, refused above the cap rather than approximated.
TreewidthResult treewidth_exact(const Graph& g, int cap = 20);

// Serial reference implementation of the same recurrence, kept for
// testing and benchmarked against the parallel kernel.
TreewidthResult treewidth_exact_serial(const Graph& g, int cap = 20);

int treewidth(const Graph& g, int cap = 20);  // width only

}  // namespace twh
