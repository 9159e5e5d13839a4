#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twhad/circle.hpp"
#include "twhad/graph.hpp"
#include "twhad/ordered.hpp"
#include "twhad/rng.hpp"

namespace twh {

// Deterministic instance generators: the same (seed, parameters) always
// produce the same bytes. Each instance derives its own stream by
// splitting the master seed on the instance index.

Graph gen_random_graph(Rng rng, int n, double p);
Graph gen_interval_graph(Rng rng, int n);
ChordDiagram gen_chord_diagram(Rng rng, int n);      // uniform perfect matching
StringDiagram gen_outer_string(Rng rng, int n, int segments);
Gf2Matrix gen_perturbation_matrix(Rng rng, int n, int rank);  // rank exact

// ---------------------------------------------------------------------
// Bound-verification experiments

enum class BoundFamily {
  Chordal,        // interval graphs: tw == had - 1 exactly
  OuterString,    // tw <= 15 had - 2
  CirclePerturb,  // tw <= 65 k^3 had and tw <= 65 * 2^{3r} had
  DuchetMeyniel,  // 2 alpha had >= n
};

std::optional<BoundFamily> bound_family_from_name(const std::string& name);
std::string bound_family_name(BoundFamily family);

struct InstanceRecord {
  int index = 0;
  uint64_t seed = 0;
  std::string params;
  int n = 0;
  int treewidth = -1;
  int hadwiger = 0;
  long long bound = 0;
  bool pass = false;
  bool skipped = false;      // instance exceeded an oracle cap
  std::string certificate;   // what the bound was checked against
  double wall_ms = 0.0;
};

struct ExperimentReport {
  BoundFamily family;
  uint64_t seed = 0;
  int trials = 0;
  std::vector<InstanceRecord> records;
  int failures = 0;
  int skipped = 0;
  Rational max_ratio{0, 1};  // max tw / had over completed instances

  std::string to_json_lines(bool with_timing = true) const;
  std::string to_csv_summary() const;
};

struct VerifyOptions {
  int trials = 100;
  uint64_t seed = 1;
  int max_n = 12;
  int tw_cap = 20;
  int minor_cap = 16;
};

// Generates `trials` instances of the family, runs the exact oracles, and
// checks the family bound on every instance. Oracle-cap violations skip
// the instance and are logged, never silently passed. Instances evaluate
// in parallel; records stay ordered by index.
ExperimentReport verify_bound(BoundFamily family, const VerifyOptions& options);

}  // namespace twh
