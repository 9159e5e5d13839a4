#include "twhad/bounds.hpp"

#include <stdexcept>

namespace twh {

namespace {

using i128 = __int128;

// Smallest m with m^2 >= v.
long long ceil_sqrt(long long v) {
  if (v < 0) throw std::invalid_argument("negative radicand");
  long long m = 0;
  while (m * m < v) ++m;
  while (m > 0 && (m - 1) * (m - 1) >= v) --m;
  return m;
}

// ceil(a * sqrt(g)): smallest m with m^2 >= a^2 g.
long long ceil_mul_sqrt(long long a, long long g) {
  if (a == 0 || g == 0) return 0;
  i128 target = (i128)a * a * g;
  long long lo = 0, hi = 4;
  while ((i128)hi * hi < target) hi *= 2;
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if ((i128)mid * mid >= target)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace

long long bound_outer_string(long long had) { return 15 * had - 2; }

long long bound_perturbed_colour_tight(long long k, long long had) {
  return (16 * k * k * k + 40 * k * k + 9 * k) * had;
}

long long bound_perturbed_colour(long long k, long long had) {
  return 65 * k * k * k * had;
}

long long bound_perturbed_rank(long long r, long long had) {
  return 65 * (1LL << (3 * r)) * had;
}

long long bound_surface(long long g, long long c, long long had) {
  // ceil(1000 (2 g^{5/2} c^2 + c) had) with g^{5/2} = g^2 sqrt(g)
  return ceil_mul_sqrt(2000 * c * c * had * g * g, g) + 1000 * c * had;
}

long long bound_surface_tight(long long g, long long c, long long had) {
  return ceil_mul_sqrt(1615 * c * c * had * g * g, g) + 960 * c * had;
}

GenusCheck genus_check(long long g) {
  if (g < 0) throw std::invalid_argument("negative Euler genus");
  GenusCheck out;
  out.clique_order = ceil_sqrt(6 * g) + 5;
  out.biclique_side = 2 * g + 3;
  long long s = out.clique_order;
  // 2|E(K_s)| = s(s-1) against 6(s + g - 2)
  out.clique_exceeds = s * (s - 1) > 6 * (s + g - 2);
  // |E(K_{3,d})| = 3d against 2((3 + d) + g - 2)
  long long d = out.biclique_side;
  out.biclique_exceeds = 3 * d > 2 * (3 + d + g - 2);
  return out;
}

}  // namespace twh
