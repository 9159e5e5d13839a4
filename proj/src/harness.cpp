#include "twhad/harness.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "twhad/bounds.hpp"
#include "twhad/decomposition.hpp"
#include "twhad/errors.hpp"
#include "twhad/minors.hpp"

namespace twh {

Graph gen_random_graph(Rng rng, int n, double p) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) e.push_back({u, v});
  return Graph(n, e);
}

Graph gen_interval_graph(Rng rng, int n) {
  std::vector<std::pair<int, int>> intervals;
  for (int i = 0; i < n; ++i) {
    int a = rng.range(0, 4 * n), b = rng.range(0, 4 * n);
    intervals.push_back({std::min(a, b), std::max(a, b)});
  }
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (intervals[i].first <= intervals[j].second &&
          intervals[j].first <= intervals[i].second)
        e.push_back({i, j});
  return Graph(n, e);
}

ChordDiagram gen_chord_diagram(Rng rng, int n) {
  // Uniform perfect matching of the 2n positions: repeatedly match the
  // first free position with a uniformly random later free one.
  std::vector<int> free_pos(2 * n);
  for (int i = 0; i < 2 * n; ++i) free_pos[i] = i;
  std::vector<int> ids(2 * n, 0);
  int next_id = 1;
  while (!free_pos.empty()) {
    int a = free_pos.front();
    free_pos.erase(free_pos.begin());
    int pick = (int)rng.below(free_pos.size());
    int b = free_pos[pick];
    free_pos.erase(free_pos.begin() + pick);
    ids[a] = ids[b] = next_id++;
  }
  return chord_diagram_from_ids(ids);
}

StringDiagram gen_outer_string(Rng rng, int n, int segments) {
  StringDiagram d;
  std::vector<long long> used_params;
  for (int i = 0; i < n; ++i) {
    StringDiagram::String s;
    s.id = i;
    // Rational point on the unit circle via the tangent parametrisation;
    // distinct parameters give distinct roots.
    long long mparam = 0;
    for (;;) {
      mparam = rng.range(-60, 60);
      if (std::find(used_params.begin(), used_params.end(), mparam) ==
          used_params.end())
        break;
    }
    used_params.push_back(mparam);
    long long den = 1 + mparam * mparam;
    s.points.push_back({Rational(1 - mparam * mparam, den),
                        Rational(2 * mparam, den)});
    int pts = rng.range(1, std::max(1, segments));
    for (int j = 0; j < pts; ++j) {
      for (;;) {
        Point p{Rational(rng.range(-30, 30), 31), Rational(rng.range(-30, 30), 31)};
        if (unit_circle_side(p) < 0 && !(p == s.points.back())) {
          s.points.push_back(p);
          break;
        }
      }
    }
    d.strings.push_back(std::move(s));
  }
  validate_string_diagram(d);
  return d;
}

Gf2Matrix gen_perturbation_matrix(Rng rng, int n, int rank) {
  if (rank < 0 || rank > n)
    throw std::invalid_argument("rank must lie in [0, n]");
  // Sum of `rank` random symmetric rank-1 summands x x^T, re-sampled until
  // the rank is exact.
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Gf2Matrix m;
    m.n = n;
    m.rows.assign(n, 0);
    for (int r = 0; r < rank; ++r) {
      uint64_t x = 0;
      while (x == 0 && n > 0) x = rng.next() & ((n == 64) ? ~0ULL : ((1ULL << n) - 1));
      for (int i = 0; i < n; ++i)
        if (x >> i & 1) m.rows[i] ^= x;
    }
    if (gf2_rank(m) == rank) return m;
  }
  throw StructuralError("rank-exact sampling failed to converge");
}

// ---------------------------------------------------------------------

std::optional<BoundFamily> bound_family_from_name(const std::string& name) {
  if (name == "chordal") return BoundFamily::Chordal;
  if (name == "outer-string") return BoundFamily::OuterString;
  if (name == "circle-perturb") return BoundFamily::CirclePerturb;
  if (name == "duchet-meyniel") return BoundFamily::DuchetMeyniel;
  return std::nullopt;
}

std::string bound_family_name(BoundFamily family) {
  switch (family) {
    case BoundFamily::Chordal: return "chordal";
    case BoundFamily::OuterString: return "outer-string";
    case BoundFamily::CirclePerturb: return "circle-perturb";
    case BoundFamily::DuchetMeyniel: return "duchet-meyniel";
  }
  return "?";
}

namespace {

void run_instance(BoundFamily family, const VerifyOptions& options,
                  InstanceRecord& rec, Rng rng) {
  auto start = std::chrono::steady_clock::now();
  switch (family) {
    case BoundFamily::Chordal: {
      int n = rng.range(2, options.max_n);
      Graph g = gen_interval_graph(rng, n);
      rec.params = "interval n=" + std::to_string(n);
      rec.n = n;
      rec.treewidth = treewidth(g, options.tw_cap);
      rec.hadwiger = hadwiger(g, options.minor_cap);
      rec.bound = rec.hadwiger - 1;
      rec.certificate = "tw == had - 1";
      rec.pass = rec.treewidth == rec.hadwiger - 1;
      break;
    }
    case BoundFamily::OuterString: {
      int n = rng.range(2, options.max_n);
      auto diagram = gen_outer_string(rng, n, 4);
      auto og = outer_string_graph(diagram);
      rec.params = "outer-string n=" + std::to_string(n);
      rec.n = n;
      rec.treewidth = treewidth(og.graph, options.tw_cap);
      rec.hadwiger = hadwiger(og.graph, options.minor_cap);
      rec.bound = bound_outer_string(rec.hadwiger);
      rec.certificate = "tw <= 15 had - 2";
      rec.pass = rec.treewidth <= rec.bound;
      break;
    }
    case BoundFamily::CirclePerturb: {
      int n = rng.range(2, options.max_n);
      int rank = rng.range(0, 2);
      auto diagram = gen_chord_diagram(rng, n);
      auto matrix = gen_perturbation_matrix(rng, n, rank);
      auto model = perturbation_model_from_matrix(matrix);
      Graph g = apply_perturbation(crossing_graph(diagram), model);
      rec.params = "circle n=" + std::to_string(n) + " r=" + std::to_string(rank) +
                   " k=" + std::to_string(model.k);
      rec.n = n;
      rec.treewidth = treewidth(g, options.tw_cap);
      rec.hadwiger = hadwiger(g, options.minor_cap);
      long long by_colour = bound_perturbed_colour(model.k, rec.hadwiger);
      long long by_rank = bound_perturbed_rank(rank, rec.hadwiger);
      rec.bound = std::min(by_colour, by_rank);
      rec.certificate = "tw <= 65 k^3 had and tw <= 65 * 8^r had";
      rec.pass = rec.treewidth <= by_colour && rec.treewidth <= by_rank;
      break;
    }
    case BoundFamily::DuchetMeyniel: {
      int n = rng.range(1, options.max_n);
      double p = 0.1 + 0.05 * (double)rng.below(9);
      Graph g = gen_random_graph(rng, n, p);
      rec.params = "random n=" + std::to_string(n);
      rec.n = n;
      rec.treewidth = treewidth(g, options.tw_cap);
      rec.hadwiger = hadwiger(g, options.minor_cap);
      long long alpha = (long long)max_independent_set(g).size();
      rec.bound = 2 * alpha * rec.hadwiger;
      rec.certificate = "2 alpha had >= n";
      rec.pass = rec.bound >= n;
      break;
    }
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
}

}  // namespace

ExperimentReport verify_bound(BoundFamily family, const VerifyOptions& options) {
  ExperimentReport report;
  report.family = family;
  report.seed = options.seed;
  report.trials = options.trials;
  report.records.resize(options.trials);

  Rng master(options.seed);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < options.trials; ++i) {
    auto& rec = report.records[i];
    rec.index = i;
    rec.seed = options.seed;
    try {
      run_instance(family, options, rec, master.split(i));
    } catch (const ResourceLimitError& e) {
      rec.skipped = true;
      rec.certificate = e.what();
    }
  }
  for (const auto& rec : report.records) {
    if (rec.skipped)
      ++report.skipped;
    else if (!rec.pass)
      ++report.failures;
    if (!rec.skipped && rec.hadwiger > 0) {
      Rational ratio(rec.treewidth, rec.hadwiger);
      if (report.max_ratio < ratio) report.max_ratio = ratio;
    }
  }
  return report;
}

std::string ExperimentReport::to_json_lines(bool with_timing) const {
  std::ostringstream out;
  for (const auto& r : records) {
    out << "{\"family\":\"" << bound_family_name(family) << "\""
        << ",\"index\":" << r.index << ",\"seed\":" << r.seed << ",\"params\":\""
        << r.params << "\",\"n\":" << r.n << ",\"tw\":" << r.treewidth
        << ",\"had\":" << r.hadwiger << ",\"bound\":" << r.bound << ",\"pass\":"
        << (r.pass ? "true" : "false") << ",\"skipped\":"
        << (r.skipped ? "true" : "false") << ",\"certificate\":\"" << r.certificate
        << "\"";
    if (with_timing) out << ",\"wall_ms\":" << r.wall_ms;
    out << "}\n";
  }
  return out.str();
}

std::string ExperimentReport::to_csv_summary() const {
  std::ostringstream out;
  out << "family,trials,failures,skipped,max_ratio\n";
  out << bound_family_name(family) << "," << trials << "," << failures << ","
      << skipped << "," << max_ratio.str() << "\n";
  return out.str();
}

}  // namespace twh
