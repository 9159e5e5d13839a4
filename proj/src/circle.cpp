#include "twhad/circle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "twhad/errors.hpp"

namespace twh {

void validate_chord_diagram(const ChordDiagram& cd) {
  if (cd.order.size() != 2 * (int)cd.chords.size())
    throw ValidationError("cyclic order has " + std::to_string(cd.order.size()) +
                          " labels for " + std::to_string(cd.chords.size()) +
                          " chords");
  std::set<int> seen;
  for (auto [a, b] : cd.chords) {
    if (a == b) throw ValidationError("chord with equal endpoints " + std::to_string(a));
    for (int e : {a, b}) {
      if (!cd.order.contains(e))
        throw ValidationError("endpoint " + std::to_string(e) +
                              " missing from the cyclic order");
      if (!seen.insert(e).second)
        throw ValidationError("endpoint " + std::to_string(e) +
                              " used by two chords");
    }
  }
}

ChordDiagram chord_diagram_from_ids(const std::vector<int>& ids) {
  if (ids.size() % 2 != 0)
    throw ParseError("chord diagram needs an even number of endpoints");
  std::map<int, std::vector<int>> positions;
  std::vector<int> labels(ids.size());
  for (int p = 0; p < (int)ids.size(); ++p) {
    labels[p] = p;
    positions[ids[p]].push_back(p);
  }
  ChordDiagram cd;
  cd.order = CyclicOrder(labels);
  std::set<int> emitted;
  for (int p = 0; p < (int)ids.size(); ++p) {
    if (emitted.count(ids[p])) continue;
    emitted.insert(ids[p]);
    const auto& pos = positions[ids[p]];
    if (pos.size() != 2)
      throw ParseError("chord id " + std::to_string(ids[p]) + " appears " +
                       std::to_string(pos.size()) + " times, expected 2");
    cd.chords.push_back({pos[0], pos[1]});
  }
  validate_chord_diagram(cd);
  return cd;
}

Graph crossing_graph(const ChordDiagram& cd) {
  validate_chord_diagram(cd);
  int n = (int)cd.chords.size();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (chords_cross(cd.order, cd.chords[i].first, cd.chords[i].second,
                       cd.chords[j].first, cd.chords[j].second))
        edges.push_back({i, j});
  return Graph(n, edges);
}

// ---------------------------------------------------------------------

bool Gf2Matrix::symmetric() const {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (get(i, j) != get(j, i)) return false;
  return true;
}

int gf2_rank(Gf2Matrix m) {
  int rank = 0;
  for (int col = 0; col < m.n; ++col) {
    int pivot = -1;
    for (int row = rank; row < m.n; ++row)
      if (m.get(row, col)) {
        pivot = row;
        break;
      }
    if (pivot == -1) continue;
    std::swap(m.rows[rank], m.rows[pivot]);
    for (int row = 0; row < m.n; ++row)
      if (row != rank && m.get(row, col)) m.rows[row] ^= m.rows[rank];
    ++rank;
  }
  return rank;
}

bool LoopyGraph::has(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (auto e : edges)
    if (e.first == u && e.second == v) return true;
  return false;
}

void validate_perturbation_model(const PerturbationModel& m, int n) {
  if (m.k < 1) throw ValidationError("perturbation model needs at least one colour");
  if (m.h.n != m.k)
    throw ValidationError("auxiliary graph order differs from the colour count");
  if ((int)m.zeta.size() != n)
    throw ValidationError("colouring covers " + std::to_string(m.zeta.size()) +
                          " vertices, expected " + std::to_string(n));
  for (int c : m.zeta)
    if (c < 0 || c >= m.k)
      throw ValidationError("colour " + std::to_string(c) + " out of range [0," +
                            std::to_string(m.k) + ")");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : m.h.edges) {
    if (u > v || u < 0 || v >= m.k)
      throw ValidationError("auxiliary edge " + std::to_string(u) + "-" +
                            std::to_string(v) + " is not normalised or in range");
    if (!seen.insert({u, v}).second)
      throw ValidationError("parallel auxiliary edge " + std::to_string(u) + "-" +
                            std::to_string(v));
  }
}

PerturbationModel perturbation_model_from_matrix(const Gf2Matrix& p) {
  if (p.n > 64) throw ResourceLimitError("perturbation matrices capped at 64 rows");
  if (!p.symmetric())
    throw ValidationError("perturbation matrix is not symmetric");

  // Column space, sorted as bitmasks; its size is 2^rank. Columns equal
  // rows here by symmetry.
  int rank = gf2_rank(p);
  std::vector<uint64_t> basis;
  for (int i = 0; i < p.n; ++i) {
    uint64_t v = p.rows[i];
    for (uint64_t b : basis) v = std::min(v, v ^ b);
    if (v) basis.push_back(v);
  }
  std::vector<uint64_t> space{0};
  for (uint64_t b : basis) {
    size_t size = space.size();
    for (size_t i = 0; i < size; ++i) space.push_back(space[i] ^ b);
  }
  std::sort(space.begin(), space.end());

  PerturbationModel m;
  m.k = 1 << rank;
  if ((int)space.size() != m.k)
    throw ValidationError("column space enumeration disagrees with the rank");
  m.zeta.resize(p.n);
  for (int i = 0; i < p.n; ++i) {
    auto it = std::lower_bound(space.begin(), space.end(), p.rows[i]);
    m.zeta[i] = (int)(it - space.begin());
  }
  m.h.n = m.k;
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (p.get(j, i)) {
        int a = m.zeta[i], b = m.zeta[j];
        edges.insert({std::min(a, b), std::max(a, b)});
      }
  m.h.edges.assign(edges.begin(), edges.end());
  validate_perturbation_model(m, p.n);
  return m;
}

Graph apply_perturbation(const Graph& g0, const PerturbationModel& m) {
  validate_perturbation_model(m, g0.vertex_count());
  std::vector<Edge> edges;
  for (int u = 0; u < g0.vertex_count(); ++u)
    for (int v = u + 1; v < g0.vertex_count(); ++v) {
      bool base = g0.has_edge(u, v);
      bool flip = m.h.has(m.zeta[u], m.zeta[v]);
      if (base != flip) edges.push_back({u, v});
    }
  return Graph(g0.vertex_count(), edges);
}

// ---------------------------------------------------------------------

GoodColour good_colour(const CyclicOrder& c,
                       const std::vector<std::vector<int>>& colour_of, int k) {
  int n = c.size();
  if (n != 4 * k)
    throw std::invalid_argument("good colour needs a cyclic order on 4k labels");
  const auto& labels = c.elements();
  struct Pair {
    Edge a, b;
  };
  std::vector<std::optional<Pair>> crossing(k), non_crossing(k);
  std::vector<Edge> all_edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all_edges.push_back({labels[i], labels[j]});
  for (size_t i = 0; i < all_edges.size(); ++i)
    for (size_t j = i + 1; j < all_edges.size(); ++j) {
      auto [a1, a2] = all_edges[i];
      auto [b1, b2] = all_edges[j];
      if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) continue;
      int ca = colour_of[std::min(a1, a2)][std::max(a1, a2)];
      if (ca != colour_of[std::min(b1, b2)][std::max(b1, b2)]) continue;
      if (ca < 0 || ca >= k)
        throw std::invalid_argument("edge colour out of range");
      bool cross = chords_cross(c, a1, a2, b1, b2);
      auto& slot = cross ? crossing[ca] : non_crossing[ca];
      if (!slot) slot = Pair{all_edges[i], all_edges[j]};
    }
  for (int col = 0; col < k; ++col)
    if (crossing[col] && non_crossing[col])
      return {col,
              {crossing[col]->a, crossing[col]->b},
              {non_crossing[col]->a, non_crossing[col]->b}};
  throw StructuralError("no colour class carries both pair kinds; the input is "
                        "not a k-colouring of a complete cyclically ordered graph");
}

// ---------------------------------------------------------------------

PerturbedSepResult perturbed_separator_or_clique(const ChordDiagram& cd,
                                                 const PerturbationModel& m,
                                                 const std::vector<int>& x, int t,
                                                 int clique_cap) {
  validate_chord_diagram(cd);
  int n = (int)cd.chords.size();
  validate_perturbation_model(m, n);
  if (t < 1) throw std::invalid_argument("need t >= 1");
  int k = m.k;
  long long x_needed = 4LL * k * k * (4 * k + 9) * t;
  if ((long long)x.size() != x_needed)
    throw std::invalid_argument("X must have exactly 4k^2(4k+9)t = " +
                                std::to_string(x_needed) + " chords, got " +
                                std::to_string(x.size()));

  Graph g = apply_perturbation(crossing_graph(cd), m);

  std::vector<char> in_x(n, 0);
  for (int v : x) {
    g.check_vertex(v);
    in_x[v] = 1;
  }

  // Cut the endpoint circle into s = 4k segments, each holding exactly
  // 2k(4k+9)t roots of X; trailing non-root endpoints go to the last
  // segment they precede.
  int s = 4 * k;
  long long roots_per_segment = 2LL * k * (4 * k + 9) * t;
  std::vector<int> chord_of(cd.order.size());
  for (int i = 0; i < n; ++i) {
    chord_of[cd.order.position(cd.chords[i].first)] = i;
    chord_of[cd.order.position(cd.chords[i].second)] = i;
  }
  std::vector<int> segment_of(cd.order.size(), s - 1);
  {
    int seg = 0;
    long long count = 0;
    for (int pos = 0; pos < cd.order.size(); ++pos) {
      segment_of[pos] = seg;
      if (in_x[chord_of[pos]]) {
        if (++count == roots_per_segment && seg < s - 1) {
          ++seg;
          count = 0;
        }
      }
    }
  }

  std::vector<std::vector<int>> chords_touching(s);
  for (int i = 0; i < n; ++i) {
    int sa = segment_of[cd.order.position(cd.chords[i].first)];
    int sb = segment_of[cd.order.position(cd.chords[i].second)];
    chords_touching[sa].push_back(i);
    if (sb != sa) chords_touching[sb].push_back(i);
  }
  for (auto& d : chords_touching) std::sort(d.begin(), d.end());

  long long cut_bound = (long long)k * (4 * k + 9) * t;
  Rational alpha(4 * k - 1, 4 * k);
  PerturbedSepResult result{};

  // All segment pairs in canonical order; a small cut anywhere wins.
  std::vector<MengerResult> menger(s * s);
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b) {
      menger[a * s + b] = menger_linkage(g, chords_touching[a], chords_touching[b]);
      if (menger[a * s + b].separation.order() < cut_bound) {
        auto& sep = menger[a * s + b].separation;
        if (!is_alpha_balanced(g, sep, x, alpha))
          throw StructuralError("Menger separation failed the balance check");
        result.route = PerturbedSepResult::Route::Separation;
        result.separation = sep;
        return result;
      }
    }

  // Proof path: monochromatic families in every pairwise intersection.
  std::vector<std::vector<int>> family(s * s);
  std::vector<std::vector<int>> family_colour(s, std::vector<int>(s, -1));
  bool families_ok = true;
  for (int a = 0; a < s && families_ok; ++a)
    for (int b = a + 1; b < s && families_ok; ++b) {
      std::vector<int> shared;
      std::set_intersection(chords_touching[a].begin(), chords_touching[a].end(),
                            chords_touching[b].begin(), chords_touching[b].end(),
                            std::back_inserter(shared));
      std::vector<std::vector<int>> by_colour(k);
      for (int chord : shared) by_colour[m.zeta[chord]].push_back(chord);
      int best = -1;
      for (int col = 0; col < k; ++col)
        if ((int)by_colour[col].size() >= t) {
          best = col;
          break;
        }
      if (best == -1) {
        families_ok = false;
        break;
      }
      by_colour[best].resize(t);
      family[a * s + b] = by_colour[best];
      family_colour[a][b] = best;
    }

  if (families_ok) {
    std::vector<int> seg_labels(s);
    for (int i = 0; i < s; ++i) seg_labels[i] = i;
    CyclicOrder aux(seg_labels);
    std::vector<std::vector<int>> colour_of(s, std::vector<int>(s, -1));
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b)
        colour_of[a][b] = colour_of[b][a] = family_colour[a][b];
    auto good = good_colour(aux, colour_of, k);
    bool loop = m.h.has(good.colour, good.colour);
    auto chosen = loop ? good.non_crossing : good.crossing;
    auto normalise = [](Edge e) {
      return Edge{std::min(e.first, e.second), std::max(e.first, e.second)};
    };
    auto e1 = normalise(chosen.first), e2 = normalise(chosen.second);
    const auto& f1 = family[e1.first * s + e1.second];
    const auto& f2 = family[e2.first * s + e2.second];
    // f1 x f2 is complete in the perturbed graph: K_{t,t}, so K_{t+1}.
    std::vector<std::vector<int>> sets;
    for (int i = 0; i + 1 < t; ++i) {
      std::vector<int> merged{f1[i], f2[i]};
      std::sort(merged.begin(), merged.end());
      sets.push_back(std::move(merged));
    }
    sets.push_back({f1[t - 1]});
    sets.push_back({f2[t - 1]});
    MinorModel clique{complete_graph(t + 1), std::move(sets)};
    validate_model(g, clique);
    result.route = PerturbedSepResult::Route::MonochromaticGrid;
    result.clique = std::move(clique);
    return result;
  }

  // The intersections are too small for the proof path; the big linkages
  // must then carry a clique minor. Contract a linkage between the first
  // deficient pair and search the contracted graph first, then fall back
  // to the host itself.
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b) {
      std::vector<int> shared;
      std::set_intersection(chords_touching[a].begin(), chords_touching[a].end(),
                            chords_touching[b].begin(), chords_touching[b].end(),
                            std::back_inserter(shared));
      std::vector<char> drop(n, 0);
      for (int v : shared) drop[v] = 1;
      std::vector<int> keep_ids;
      for (int v = 0; v < n; ++v)
        if (!drop[v]) keep_ids.push_back(v);
      Graph reduced = g.induced(keep_ids);
      std::vector<int> local(n, -1);
      for (int i = 0; i < (int)keep_ids.size(); ++i) local[keep_ids[i]] = i;
      std::vector<int> sa, sb;
      for (int v : chords_touching[a])
        if (!drop[v]) sa.push_back(local[v]);
      for (int v : chords_touching[b])
        if (!drop[v]) sb.push_back(local[v]);
      auto linkage = menger_linkage(reduced, sa, sb).linkage;
      if ((int)linkage.paths.size() < t + 1) continue;
      std::vector<Edge> contracted_edges;
      for (size_t i = 0; i < linkage.paths.size(); ++i)
        for (size_t j = i + 1; j < linkage.paths.size(); ++j) {
          bool adjacent = false;
          for (int u : linkage.paths[i])
            for (int v : linkage.paths[j])
              if (reduced.has_edge(u, v)) adjacent = true;
          if (adjacent) contracted_edges.push_back({(int)i, (int)j});
        }
      Graph contracted((int)linkage.paths.size(), contracted_edges);
      auto inner = contains_minor(contracted, complete_graph(t + 1),
                                  contracted.vertex_count());
      if (!inner) continue;
      std::vector<std::vector<int>> sets;
      for (auto& branch : inner->branch_sets) {
        std::vector<int> merged;
        for (int path_id : branch)
          for (int v : linkage.paths[path_id]) merged.push_back(keep_ids[v]);
        std::sort(merged.begin(), merged.end());
        sets.push_back(std::move(merged));
      }
      MinorModel clique{complete_graph(t + 1), std::move(sets)};
      validate_model(g, clique);
      result.route = PerturbedSepResult::Route::ContractedLinkage;
      result.clique = std::move(clique);
      return result;
    }

  auto direct = contains_minor(g, complete_graph(t + 1), clique_cap);
  if (!direct)
    throw StructuralError(
        "neither a balanced separation nor a K_{t+1} minor was found; the "
        "input violates the perturbed-circle dichotomy");
  result.route = PerturbedSepResult::Route::Fallback;
  result.clique = std::move(*direct);
  return result;
}

}  // namespace twh
