#include "troptab/tableau_ops.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "troptab/error.hpp"

namespace troptab {

namespace {

using Grid = std::vector<std::vector<int>>;

std::optional<int> filled(const Grid& g, int r, int c) {
  if (r < 0 || r >= static_cast<int>(g.size())) return std::nullopt;
  if (c < 0 || c >= static_cast<int>(g[r].size())) return std::nullopt;
  if (g[r][c] <= 0) return std::nullopt;
  return g[r][c];
}

std::string at_text(int row, int col) {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

}  // namespace

SlideResult jdt_slide(const SkewTableau& t, const Corner& c) {
  const Partition& mu = t.inner();
  if (c.kind != Corner::Kind::Inside || !mu.is_removable_row(c.row) || mu[c.row] != c.col)
    throw Error(ErrorKind::NotAnInsideCorner, at_text(c.row, c.col) + " is not an inside corner");

  Grid g = t.grid();
  int r = c.row - 1, col = c.col - 1;
  g[r][col] = -1;
  for (;;) {
    auto below = filled(g, r + 1, col);
    auto right = filled(g, r, col + 1);
    if (!below && !right) break;
    if (!right || (below && *below <= *right)) {
      g[r][col] = *below;
      g[r + 1][col] = -1;
      ++r;
    } else {
      g[r][col] = *right;
      g[r][col + 1] = -1;
      ++col;
    }
  }
  g[r].pop_back();
  return {SkewTableau::from_grid(g), Corner{r + 1, col + 1, Corner::Kind::Outside}};
}

SlideResult jdt_slide_row(const SkewTableau& t, int row) {
  if (!t.inner().is_removable_row(row))
    throw Error(ErrorKind::NotAnInsideCorner, "row " + std::to_string(row) + " has no inside corner");
  return jdt_slide(t, Corner{row, t.inner()[row], Corner::Kind::Inside});
}

SlideResult reverse_slide(const SkewTableau& t, const Corner& c) {
  const Partition& lam = t.outer();
  if (c.kind != Corner::Kind::Outside || !lam.is_addable_row(c.row) || c.col != lam[c.row] + 1)
    throw Error(ErrorKind::NotAnOutsideCorner, at_text(c.row, c.col) + " is not an outside corner");

  Grid g = t.grid();
  if (c.row > static_cast<int>(g.size())) g.emplace_back();
  int r = c.row - 1, col = c.col - 1;
  g[r].push_back(-1);
  for (;;) {
    auto up = filled(g, r - 1, col);
    auto left = filled(g, r, col - 1);
    if (!up && !left) break;
    if (!left || (up && *up >= *left)) {
      g[r][col] = *up;
      g[r - 1][col] = -1;
      --r;
    } else {
      g[r][col] = *left;
      g[r][col - 1] = -1;
      --col;
    }
  }
  g[r][col] = 0;
  return {SkewTableau::from_grid(g), Corner{r + 1, col + 1, Corner::Kind::Inside}};
}

SlideResult reverse_slide_row(const SkewTableau& t, int row) {
  if (!t.outer().is_addable_row(row))
    throw Error(ErrorKind::NotAnOutsideCorner, "row " + std::to_string(row) + " has no outside corner");
  return reverse_slide(t, Corner{row, t.outer()[row] + 1, Corner::Kind::Outside});
}

SkewTableau rectify(const SkewTableau& t, std::vector<int>& end_rows) {
  SkewTableau cur = t;
  while (!cur.inner().empty()) {
    auto res = jdt_slide(cur, cur.inside_corners().front());
    end_rows.push_back(res.corner.row);
    cur = std::move(res.tableau);
  }
  return cur;
}

SkewTableau rectify(const SkewTableau& t) {
  std::vector<int> ignored;
  return rectify(t, ignored);
}

SkewTableau row_bump(const SkewTableau& t, int value) {
  if (!t.is_straight()) throw Error(ErrorKind::InvalidTableau, "row_bump needs a straight tableau");
  if (value <= 0) throw Error(ErrorKind::InvalidTableau, "entries must be positive");
  Grid rows = t.rows();
  for (auto& row : rows) {
    auto it = std::upper_bound(row.begin(), row.end(), value);
    if (it == row.end()) {
      row.push_back(value);
      return SkewTableau::straight(std::move(rows));
    }
    std::swap(*it, value);
  }
  rows.push_back({value});
  return SkewTableau::straight(std::move(rows));
}

ColumnBumpResult column_bump_at(int value, const SkewTableau& t) {
  if (!t.is_straight()) throw Error(ErrorKind::InvalidTableau, "column_bump needs a straight tableau");
  if (value <= 0) throw Error(ErrorKind::InvalidTableau, "entries must be positive");
  Grid rows = t.rows();
  for (int c = 0;; ++c) {
    int height = 0;
    while (height < static_cast<int>(rows.size()) && static_cast<int>(rows[height].size()) > c)
      ++height;
    int pos = 0;
    while (pos < height && rows[pos][c] < value) ++pos;
    if (pos == height) {
      if (height == static_cast<int>(rows.size())) rows.emplace_back();
      rows[height].push_back(value);
      return {SkewTableau::straight(std::move(rows)), Corner{height + 1, c + 1, Corner::Kind::Outside}};
    }
    std::swap(rows[pos][c], value);
  }
}

SkewTableau column_bump(int value, const SkewTableau& t) {
  return column_bump_at(value, t).tableau;
}

EjectResult reverse_column_bump(const SkewTableau& t, const Corner& c) {
  if (!t.is_straight()) throw Error(ErrorKind::InvalidTableau, "reverse_column_bump needs a straight tableau");
  const Partition& lam = t.outer();
  if (!lam.is_removable_row(c.row) || lam[c.row] != c.col)
    throw Error(ErrorKind::NotAnOutsideCorner, at_text(c.row, c.col) + " is not a corner of the tableau");
  Grid rows = t.rows();
  int y = rows[c.row - 1].back();
  rows[c.row - 1].pop_back();
  for (int cc = c.col - 2; cc >= 0; --cc) {
    int pos = -1;
    for (int i = 0; i < static_cast<int>(rows.size()) && static_cast<int>(rows[i].size()) > cc; ++i)
      if (rows[i][cc] <= y) pos = i;
    std::swap(rows[pos][cc], y);
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return {y, SkewTableau::straight(std::move(rows))};
}

SkewTableau p_tableau(const std::vector<int>& word) {
  SkewTableau t;
  for (int x : word) t = row_bump(t, x);
  return t;
}

SkewTableau tableau_product(const SkewTableau& a, const SkewTableau& b) {
  SkewTableau t = a;
  for (int x : b.row_word()) t = row_bump(t, x);
  return t;
}

SkewTableau evacuation_dual(const SkewTableau& z, int m) {
  if (!z.is_straight()) throw Error(ErrorKind::InvalidTableau, "evacuation_dual needs a straight tableau");
  if (z.max_entry() > m)
    throw Error(ErrorKind::EntryExceedsAlphabet,
                "entry " + std::to_string(z.max_entry()) + " exceeds m = " + std::to_string(m));
  if (z.empty()) return z;
  const int h = z.num_rows();
  const int width = z.outer()[1];
  Grid g(h);
  for (int i = 0; i < h; ++i) {
    const auto& src = z.rows()[h - 1 - i];
    g[i].assign(width - static_cast<int>(src.size()), 0);
    for (auto it = src.rbegin(); it != src.rend(); ++it) g[i].push_back(m + 1 - *it);
  }
  return rectify(SkewTableau::from_grid(g));
}

SkewTableau u_tableau(const Partition& mu) {
  Grid rows;
  for (int i = 1; i <= mu.length(); ++i) rows.emplace_back(mu[i], i);
  return SkewTableau::straight(std::move(rows));
}

}  // namespace troptab
