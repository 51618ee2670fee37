#include "troptab/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace troptab {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> sub_partitions(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int row, int cap) {
    if (row > outer.length()) {
      out.emplace_back(cur);
      return;
    }
    for (int v = std::min(cap, outer[row]); v >= 0; --v) {
      cur.push_back(v);
      rec(row + 1, v);
      cur.pop_back();
    }
  };
  rec(1, outer.empty() ? 0 : outer[1]);
  return out;
}

std::vector<SkewTableau> skew_tableaux(const Partition& outer, const Partition& inner, int m) {
  std::vector<SkewTableau> out;
  if (!outer.contains(inner)) return out;
  const int d = outer.length();
  std::vector<std::vector<int>> grid(d);
  for (int r = 1; r <= d; ++r) grid[r - 1].assign(outer[r], 0);
  std::vector<std::pair<int, int>> cells;
  for (int r = 1; r <= d; ++r)
    for (int c = inner[r] + 1; c <= outer[r]; ++c) cells.emplace_back(r - 1, c - 1);

  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      out.push_back(SkewTableau::from_grid(grid));
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0 && grid[r][c - 1] > 0) lo = std::max(lo, grid[r][c - 1]);
    if (r > 0 && grid[r - 1][c] > 0) lo = std::max(lo, grid[r - 1][c] + 1);
    for (int v = lo; v <= m; ++v) {
      grid[r][c] = v;
      rec(idx + 1);
    }
    grid[r][c] = 0;
  };
  rec(0);
  return out;
}

std::vector<SkewTableau> straight_tableaux(const Partition& shape, int m) {
  return skew_tableaux(shape, Partition{}, m);
}

std::vector<SkewTableau> straight_tableaux_up_to(int max_boxes, int m) {
  std::vector<SkewTableau> out;
  for (int n = 0; n <= max_boxes; ++n)
    for (const auto& p : partitions(n)) {
      if (p.length() > m) continue;
      auto ts = straight_tableaux(p, m);
      out.insert(out.end(), ts.begin(), ts.end());
    }
  return out;
}

std::vector<SkewTableau> standard_tableaux(const Partition& outer, const Partition& inner) {
  std::vector<SkewTableau> out;
  if (!outer.contains(inner)) return out;
  const int n = outer.size() - inner.size();
  const int d = outer.length();
  std::vector<std::vector<int>> grid(d);
  for (int r = 1; r <= d; ++r) grid[r - 1].assign(inner[r], 0);
  // Place 1..n one at a time in a box addable to the current filled shape.
  std::function<void(int)> rec = [&](int label) {
    if (label > n) {
      out.push_back(SkewTableau::from_grid(grid));
      return;
    }
    for (int r = 0; r < d; ++r) {
      const int c = static_cast<int>(grid[r].size());
      if (c >= outer[r + 1]) continue;
      if (r > 0 && static_cast<int>(grid[r - 1].size()) <= c) continue;
      grid[r].push_back(label);
      rec(label + 1);
      grid[r].pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<std::vector<int>> words(int length, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(length, 1);
  if (m < 1) return length == 0 ? std::vector<std::vector<int>>{{}} : out;
  for (;;) {
    out.push_back(cur);
    int i = length - 1;
    while (i >= 0 && cur[i] == m) cur[i--] = 1;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

}  // namespace troptab
