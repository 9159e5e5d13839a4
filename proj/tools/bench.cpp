// Benchmark of the OpenMP treewidth kernel against the serial reference,
// plus the parallel experiment driver. Both sides must agree exactly; the
// serial implementation exists so the parallel one can be checked.
//
//   bench [max_n] [trials]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "twhad/decomposition.hpp"
#include "twhad/graph.hpp"
#include "twhad/harness.hpp"
#include "twhad/rng.hpp"

using namespace twh;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

Graph random_graph(Rng rng, int n, double p) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) e.push_back({u, v});
  return Graph(n, e);
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = argc > 1 ? std::atoi(argv[1]) : 20;
  int trials = argc > 2 ? std::atoi(argv[2]) : 3;
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled\n");
#endif

  std::printf("%-28s %6s %10s %10s %8s\n", "instance", "tw", "serial ms",
              "parallel ms", "speedup");
  int mismatches = 0;
  for (int n = std::min(14, max_n); n <= max_n; n += 2) {
    for (int trial = 0; trial < trials; ++trial) {
      Graph g = random_graph(Rng(1000 * n + trial), n, 0.3);
      auto t0 = std::chrono::steady_clock::now();
      auto serial = treewidth_exact_serial(g, 25);
      double serial_ms = ms_since(t0);
      auto t1 = std::chrono::steady_clock::now();
      auto parallel = treewidth_exact(g, 25);
      double parallel_ms = ms_since(t1);
      char name[64];
      std::snprintf(name, sizeof name, "random n=%d p=0.3 #%d", n, trial);
      std::printf("%-28s %6d %10.1f %10.1f %7.2fx\n", name, parallel.width,
                  serial_ms, parallel_ms,
                  parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
      if (serial.width != parallel.width) {
        std::printf("MISMATCH: serial %d vs parallel %d\n", serial.width,
                    parallel.width);
        ++mismatches;
      }
    }
  }

  {
    auto [g, coords] = make_grid(4, std::min(5, max_n / 4 + 1));
    auto t0 = std::chrono::steady_clock::now();
    auto serial = treewidth_exact_serial(g, 25);
    double serial_ms = ms_since(t0);
    auto t1 = std::chrono::steady_clock::now();
    auto parallel = treewidth_exact(g, 25);
    double parallel_ms = ms_since(t1);
    std::printf("%-28s %6d %10.1f %10.1f %7.2fx\n", "grid 4 x 5", parallel.width,
                serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
    if (serial.width != parallel.width) ++mismatches;
  }

  {
    VerifyOptions options;
    options.trials = 60;
    options.seed = 99;
    options.max_n = 11;
    auto t0 = std::chrono::steady_clock::now();
    auto report = verify_bound(BoundFamily::DuchetMeyniel, options);
    std::printf("%-28s %6s %10s %10.1f\n", "verify-bound 60 trials", "-", "-",
                ms_since(t0));
    if (report.failures != 0) ++mismatches;
  }

  if (mismatches) {
    std::printf("FAILED: %d mismatches\n", mismatches);
    return 1;
  }
  std::printf("ok: serial and parallel kernels agree\n");
  return 0;
}
