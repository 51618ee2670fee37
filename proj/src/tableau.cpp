#include "troptab/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "troptab/error.hpp"

namespace troptab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw Error(ErrorKind::InvalidTableau, "row lengths must be positive and weakly decreasing");
  }
}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (int r = 1; r <= other.length(); ++r)
    if (other[r] > (*this)[r]) return false;
  return true;
}

bool Partition::is_addable_row(int row) const noexcept {
  if (row < 1 || row > length() + 1) return false;
  return row == 1 || (*this)[row - 1] > (*this)[row];
}

bool Partition::is_removable_row(int row) const noexcept {
  if (row < 1 || row > length()) return false;
  return (*this)[row] > (*this)[row + 1];
}

Partition Partition::with_box_added(int row) const {
  std::vector<int> p = parts_;
  if (row == length() + 1) p.push_back(0);
  p.at(row - 1) += 1;
  return Partition(std::move(p));
}

Partition Partition::with_box_removed(int row) const {
  std::vector<int> p = parts_;
  p.at(row - 1) -= 1;
  return Partition(std::move(p));
}

SkewTableau::SkewTableau(Partition inner, std::vector<std::vector<int>> filled_rows)
    : inner_(std::move(inner)), rows_(std::move(filled_rows)) {
  while (!rows_.empty() && rows_.back().empty() &&
         inner_[static_cast<int>(rows_.size())] == 0)
    rows_.pop_back();
  if (inner_.length() > static_cast<int>(rows_.size())) rows_.resize(inner_.length());

  std::vector<int> outer(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    outer[r] = inner_[static_cast<int>(r) + 1] + static_cast<int>(rows_[r].size());
  for (std::size_t r = 0; r < outer.size(); ++r) {
    if (outer[r] == 0)
      throw Error(ErrorKind::InvalidTableau, "empty row " + std::to_string(r + 1) + " inside the shape");
  }
  outer_ = Partition(outer);

  for (int r = 1; r <= num_rows(); ++r) {
    const auto& row = rows_[r - 1];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] <= 0)
        throw Error(ErrorKind::InvalidTableau, "entries must be positive");
      if (c > 0 && row[c] < row[c - 1])
        throw Error(ErrorKind::InvalidTableau,
                    "row " + std::to_string(r) + " is not weakly increasing");
    }
    if (r == 1) continue;
    for (int col = inner_[r] + 1; col <= outer_[r]; ++col) {
      if (col > outer_[r - 1]) continue;  // unreachable for a partition
      if (at(r - 1, col) >= at(r, col))
        throw Error(ErrorKind::InvalidTableau,
                    "column " + std::to_string(col) + " is not strictly increasing");
    }
  }
}

SkewTableau SkewTableau::straight(std::vector<std::vector<int>> rows) {
  return SkewTableau(Partition{}, std::move(rows));
}

int SkewTableau::size() const noexcept {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

int SkewTableau::max_entry() const noexcept {
  int m = 0;
  for (const auto& r : rows_)
    if (!r.empty()) m = std::max(m, r.back());
  return m;
}

int SkewTableau::at(int row, int col) const {
  if (row < 1 || row > num_rows() || col < 1 || col > outer_[row])
    throw std::out_of_range("box outside the tableau");
  if (col <= inner_[row]) return 0;
  return rows_[row - 1][col - inner_[row] - 1];
}

int SkewTableau::count_at_most(int row, int value) const noexcept {
  if (row < 1 || row > num_rows()) return 0;
  const auto& r = rows_[row - 1];
  return inner_[row] + static_cast<int>(std::upper_bound(r.begin(), r.end(), value) - r.begin());
}

std::vector<int> SkewTableau::row_word() const {
  std::vector<int> word;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    word.insert(word.end(), it->begin(), it->end());
  return word;
}

std::vector<std::vector<int>> SkewTableau::grid() const {
  std::vector<std::vector<int>> g(rows_.size());
  for (int r = 1; r <= num_rows(); ++r) {
    g[r - 1].assign(inner_[r], 0);
    g[r - 1].insert(g[r - 1].end(), rows_[r - 1].begin(), rows_[r - 1].end());
  }
  return g;
}

SkewTableau SkewTableau::from_grid(const std::vector<std::vector<int>>& grid) {
  std::vector<int> inner;
  std::vector<std::vector<int>> rows;
  for (const auto& g : grid) {
    auto first = std::find_if(g.begin(), g.end(), [](int v) { return v != 0; });
    if (std::any_of(first, g.end(), [](int v) { return v == 0; }))
      throw Error(ErrorKind::InvalidTableau, "inner boxes must form a left-justified prefix");
    inner.push_back(static_cast<int>(first - g.begin()));
    rows.emplace_back(first, g.end());
  }
  while (!rows.empty() && rows.back().empty() && inner.back() == 0) {
    rows.pop_back();
    inner.pop_back();
  }
  return SkewTableau(Partition(inner), std::move(rows));
}

std::vector<Corner> SkewTableau::inside_corners() const {
  std::vector<Corner> out;
  for (int r = 1; r <= inner_.length(); ++r)
    if (inner_.is_removable_row(r)) out.push_back({r, inner_[r], Corner::Kind::Inside});
  return out;
}

std::vector<Corner> SkewTableau::outside_corners() const {
  std::vector<Corner> out;
  for (int r = 1; r <= outer_.length(); ++r)
    if (outer_.is_removable_row(r) && outer_[r] > inner_[r])
      out.push_back({r, outer_[r], Corner::Kind::Outside});
  return out;
}

bool SkewTableau::is_standard() const {
  std::vector<int> seen;
  for (const auto& r : rows_) seen.insert(seen.end(), r.begin(), r.end());
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != static_cast<int>(i) + 1) return false;
  return true;
}

bool operator<(const SkewTableau& a, const SkewTableau& b) {
  return std::tie(a.inner(), a.rows()) < std::tie(b.inner(), b.rows());
}

}  // namespace troptab
