#include "twhad/grid_dichotomy.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

#include "twhad/errors.hpp"

namespace twh {

void validate_dichotomy_input(const DichotomyInput& in) {
  if (in.k < 1 || in.t < 1)
    throw std::invalid_argument("dichotomy needs k, t >= 1");
  int side = in.t * (2 * in.k + 1);
  if (in.coords.rows != side || in.coords.cols != side)
    throw ValidationError("coordinate map must cover [" + std::to_string(side) +
                          "]^2");
  if (in.host.vertex_count() != side * side)
    throw ValidationError("host must have exactly " + std::to_string(side * side) +
                          " vertices");
  for (int r = 1; r <= side; ++r)
    for (int c = 1; c <= side; ++c) {
      if (c < side && !in.host.has_edge(in.coords.vertex(r, c), in.coords.vertex(r, c + 1)))
        throw ValidationError("missing grid edge at row " + std::to_string(r) +
                              ", column " + std::to_string(c));
      if (r < side && !in.host.has_edge(in.coords.vertex(r, c), in.coords.vertex(r + 1, c)))
        throw ValidationError("missing grid edge at column " + std::to_string(c) +
                              ", row " + std::to_string(r));
    }
}

namespace {

struct BlockView {
  const DichotomyInput& in;
  int a, b;  // 0-based block coordinates
  int side;  // 2k + 1

  int global(int r, int c) const {  // local 1-based -> vertex id
    return in.coords.vertex(a * side + r, b * side + c);
  }
  bool interior(int r, int c) const {
    return 2 <= r && r <= side - 1 && 2 <= c && c <= side - 1;
  }

  // First jump edge with both ends in the block interior, scanning
  // vertices in ascending order. Returned in local coordinates.
  std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> first_jump()
      const {
    for (int r = 2; r <= side - 1; ++r)
      for (int c = 2; c <= side - 1; ++c) {
        int v = global(r, c);
        for (int w : in.host.neighbors(v)) {
          if (w < v) continue;
          auto [wr, wc] = in.coords.coord(w);
          int lr = wr - a * side, lc = wc - b * side;
          if (!interior(lr, lc)) continue;
          if (std::abs(lr - r) >= 2 || std::abs(lc - c) >= 2)
            return {{{r, c}, {lr, lc}}};
        }
      }
    return std::nullopt;
  }
};

// Corner-class assignment of one block: every frame vertex plus the two
// crossing paths map into one of the four corner classes.
struct BlockClasses {
  // indexed [corner_r][corner_c] with 0 = low side, 1 = high side
  std::array<std::array<std::vector<int>, 2>, 2> cls;
};

// Builds the two crossing corner paths from a jump and splits the block
// into four corner classes. `swap_axes` transposes the construction when
// the jump spans the second coordinate.
BlockClasses build_block_classes(const BlockView& block) {
  auto jump = block.first_jump();
  if (!jump)
    throw StructuralError("block has no interior jump edge", {block.a, block.b});
  auto [p1, p2] = *jump;
  bool swap_axes = std::abs(p1.first - p2.first) < 2;
  auto local = [&](int r, int c) {
    return swap_axes ? block.global(c, r) : block.global(r, c);
  };
  if (swap_axes) {
    p1 = {p1.second, p1.first};
    p2 = {p2.second, p2.first};
  }
  if (p1.first > p2.first) std::swap(p1, p2);
  auto [x1, y1] = p1;
  auto [x2, y2] = p2;
  int x = x1 + 1;  // least free row strictly between the jump rows
  int side = block.side;

  BlockClasses out;
  auto& c00 = out.cls[0][0];
  auto& c0L = out.cls[swap_axes ? 1 : 0][swap_axes ? 0 : 1];
  auto& cL0 = out.cls[swap_axes ? 0 : 1][swap_axes ? 1 : 0];
  auto& cLL = out.cls[1][1];

  // P: (1,1) .. (1,y1) .. (x1,y1) -jump- (x2,y2) .. (side,y2) .. (side,side)
  for (int c = 1; c <= y1; ++c) c00.push_back(local(1, c));
  for (int r = 2; r <= x1; ++r) c00.push_back(local(r, y1));
  for (int r = x2; r <= side - 1; ++r) cLL.push_back(local(r, y2));
  for (int c = y2; c <= side; ++c) cLL.push_back(local(side, c));
  // Q: (1,side) .. (x,side) .. (x,1) .. (side,1), split after (x,2)
  for (int r = 1; r <= x; ++r) c0L.push_back(local(r, side));
  for (int c = 2; c <= side - 1; ++c) c0L.push_back(local(x, c));
  cL0.push_back(local(x, 1));
  for (int r = x + 1; r <= side; ++r) cL0.push_back(local(r, 1));
  // frame leftovers
  for (int c = y1 + 1; c <= side - 1; ++c) c00.push_back(local(1, c));
  for (int r = x + 1; r <= side - 1; ++r) c0L.push_back(local(r, side));
  for (int c = 2; c <= y2 - 1; ++c) cL0.push_back(local(side, c));
  for (int r = 2; r <= x - 1; ++r) c00.push_back(local(r, 1));
  return out;
}

InducedMinorModel induced_grid_model(const BlockView& block, int k) {
  int off_r = block.a * block.side, off_c = block.b * block.side;
  std::vector<std::vector<int>> sets(k * k);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      std::vector<std::pair<int, int>> cells;
      if ((i + j) % 2 == 0)
        cells = {{2 * i, 2 * j - 1}, {2 * i, 2 * j}, {2 * i, 2 * j + 1}};
      else
        cells = {{2 * i - 1, 2 * j}, {2 * i, 2 * j}, {2 * i + 1, 2 * j}};
      auto& set = sets[(i - 1) * k + (j - 1)];
      for (auto [r, c] : cells)
        if (block.interior(r, c))
          set.push_back(block.in.coords.vertex(off_r + r, off_c + c));
      std::sort(set.begin(), set.end());
    }
  return InducedMinorModel{make_grid(k, k).graph, std::move(sets)};
}

}  // namespace

StrongGridClique k2s_in_strong_grid(int s) {
  if (s < 1) throw std::invalid_argument("need s >= 1");
  StrongGridClique out;
  out.host = make_strong_grid(2 * s, 2 * s);
  std::vector<std::vector<int>> sets;
  auto add = [&](const std::vector<std::pair<int, int>>& cells) {
    std::vector<int> set;
    for (auto [r, c] : cells) set.push_back(out.host.coords.vertex(r, c));
    std::sort(set.begin(), set.end());
    sets.push_back(std::move(set));
  };
  for (int i = 1; i <= s; ++i) {
    std::vector<std::pair<int, int>> q;
    for (int x = 1; x <= 2 * i - 1; ++x) q.push_back({x, 2 * i - x});
    for (int x = 2 * i; x <= 2 * s; ++x) q.push_back({x, x - 2 * i + 1});
    add(q);
  }
  for (int i = 1; i <= s; ++i) {
    std::vector<std::pair<int, int>> r;
    for (int x = 1; x <= 2 * i - 1; ++x) r.push_back({x, x + 2 * s + 1 - 2 * i});
    for (int x = 2 * i; x <= 2 * s; ++x) r.push_back({x, 2 * s + 2 * i - x});
    add(r);
  }
  out.model = MinorModel{complete_graph(2 * s), std::move(sets)};
  validate_model(out.host.graph, out.model);
  return out;
}

DichotomyResult grid_dichotomy(const DichotomyInput& in) {
  validate_dichotomy_input(in);
  int side = 2 * in.k + 1;
  int t = in.t;

  std::vector<char> jump_free(t * t, 0);
#pragma omp parallel for collapse(2) schedule(dynamic)
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b) {
      BlockView block{in, a, b, side};
      jump_free[a * t + b] = !block.first_jump().has_value();
    }

  DichotomyResult result;
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b)
      if (jump_free[a * t + b]) {
        BlockView block{in, a, b, side};
        result.induced_grid = induced_grid_model(block, in.k);
        result.jump_free_block = {a, b};
        validate_model(in.host, *result.induced_grid);
        return result;
      }

  // Every block has a jump: contract each block to a K_4 on its corners,
  // merge the corner classes of meeting blocks into the nodes of
  // P_{t+1} x P_{t+1}, and read off K_t from the diagonal-path clique of
  // the even one of t, t+1.
  std::vector<std::vector<int>> node((t + 1) * (t + 1));
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b) {
      BlockView block{in, a, b, side};
      auto classes = build_block_classes(block);
      for (int dr = 0; dr <= 1; ++dr)
        for (int dc = 0; dc <= 1; ++dc) {
          auto& target = node[(a + dr) * (t + 1) + (b + dc)];
          auto& cls = classes.cls[dr][dc];
          target.insert(target.end(), cls.begin(), cls.end());
        }
    }

  int s = (t % 2 == 0) ? t / 2 : (t + 1) / 2;
  auto clique2s = k2s_in_strong_grid(s);
  std::vector<std::vector<int>> sets;
  for (int j = 0; j < t; ++j) {
    std::vector<int> merged;
    for (int cell : clique2s.model.branch_sets[j]) {
      auto [r, c] = clique2s.host.coords.coord(cell);  // within [2s] <= t+1
      auto& cluster = node[(r - 1) * (t + 1) + (c - 1)];
      merged.insert(merged.end(), cluster.begin(), cluster.end());
    }
    std::sort(merged.begin(), merged.end());
    sets.push_back(std::move(merged));
  }
  result.clique = MinorModel{complete_graph(t), std::move(sets)};
  validate_model(in.host, *result.clique);
  return result;
}

// ---------------------------------------------------------------------
// Appendix extraction

std::vector<int> extract_planar_high_tw(const Graph& g, const InducedMinorModel& m,
                                        int t, int t_cap) {
  if (t < 1) throw std::invalid_argument("need t >= 1");
  if (t > t_cap)
    throw ResourceLimitError("planar extraction capped at t = " +
                             std::to_string(t_cap));
  int rows = 2 * t, cols = 4 * t - 1;
  auto pattern = make_grid(rows, cols);
  if (!(m.pattern == pattern.graph))
    throw ValidationError("model pattern is not the (" + std::to_string(rows) +
                          " x " + std::to_string(cols) + ")-grid");
  validate_model(g, m);

  // Selected cells: the two boundary columns, the odd rows, and two
  // staggered families that hang the even rows onto the odd ones.
  std::set<std::pair<int, int>> selected;
  for (int i = 1; i <= rows; ++i) {
    selected.insert({i, 1});
    selected.insert({i, cols});
  }
  for (int i = 1; i <= rows; i += 2)
    for (int j = 1; j <= cols; ++j) selected.insert({i, j});
  for (int i = 2; i <= rows; i += 4)
    for (int j = 3; j <= cols; j += 4) selected.insert({i, j});
  for (int i = 4; i <= rows; i += 4)
    for (int j = 1; j <= cols; j += 4) selected.insert({i, j});

  std::vector<std::pair<int, int>> cells(selected.begin(), selected.end());
  int nc = (int)cells.size();
  std::map<std::pair<int, int>, int> cell_index;
  for (int i = 0; i < nc; ++i) cell_index[cells[i]] = i;

  std::vector<std::vector<int>> sets(nc);
  for (int i = 0; i < nc; ++i)
    sets[i] = m.branch_sets[pattern.coords.vertex(cells[i].first, cells[i].second)];

  std::vector<std::vector<int>> neighbours(nc);
  for (int i = 0; i < nc; ++i) {
    auto [r, c] = cells[i];
    for (auto [dr, dc] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {0, -1}, {-1, 0}}) {
      auto it = cell_index.find({r + dr, c + dc});
      if (it != cell_index.end()) neighbours[i].push_back(it->second);
    }
  }

  auto sets_adjacent = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (int u : a)
      for (int v : b)
        if (g.has_edge(u, v)) return true;
    return false;
  };

  // Shrink to inclusion-minimal sets: drop a vertex whenever the set stays
  // non-empty and connected and all pattern adjacencies survive.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < nc; ++i) {
      for (size_t pos = 0; pos < sets[i].size(); ++pos) {
        if (sets[i].size() == 1) break;
        std::vector<int> reduced = sets[i];
        reduced.erase(reduced.begin() + pos);
        if (!g.connected_subset(reduced)) continue;
        bool keeps_pattern = true;
        for (int j : neighbours[i])
          if (!sets_adjacent(reduced, sets[j])) keeps_pattern = false;
        if (!keeps_pattern) continue;
        sets[i] = std::move(reduced);
        changed = true;
        --pos;
      }
    }
  }

  std::vector<int> out;
  for (auto& s : sets) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace twh
