#pragma once

namespace twh {

// Closed-form treewidth bounds in terms of the Hadwiger number, one per
// graph family. All values are exact integers; the surface bounds round
// the irrational g^{5/2} factor up.

// x-free ordered / outer-string graphs: 15 had - 2.
long long bound_outer_string(long long had);

// k-colour perturbations of circle graphs: the polynomial form
// (16k^3 + 40k^2 + 9k) had and its headline relaxation 65 k^3 had.
long long bound_perturbed_colour_tight(long long k, long long had);
long long bound_perturbed_colour(long long k, long long had);

// rank-r perturbations: 65 * 2^{3r} had.
long long bound_perturbed_rank(long long r, long long had);

// (g,c)-outer-string graphs: ceil(10^3 (2 g^{5/2} c^2 + c) had), and the
// sharper constant chain ceil((1615 g^{5/2} c^2 + 960 c) had).
long long bound_surface(long long g, long long c, long long had);
long long bound_surface_tight(long long g, long long c, long long had);

// Euler-genus edge-count checks: K_{ceil(sqrt(6g)) + 5} exceeds the
// orientable bound 3(n + g - 2) and K_{3, 2g+3} exceeds the bipartite
// bound 2(n + g - 2), so neither embeds in Euler genus g.
struct GenusCheck {
  long long clique_order = 0;       // ceil(sqrt(6g)) + 5
  long long biclique_side = 0;      // 2g + 3
  bool clique_exceeds = false;      // K_s fails the Euler bound
  bool biclique_exceeds = false;    // K_{3,d} fails the bipartite bound
};
GenusCheck genus_check(long long g);

}  // namespace twh
