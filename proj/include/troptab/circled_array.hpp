#pragma once

#include <vector>

#include "troptab/wmatrix.hpp"

namespace troptab {

/// Rows of circled numbers, each weakly increasing. Trailing empty rows are
/// trimmed, so equality is equality of canonical forms.
class CircledArray {
 public:
  CircledArray() = default;
  explicit CircledArray(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
  bool empty() const noexcept { return rows_.empty(); }

  /// Number of circled `value` in 1-based `row`.
  int count(int value, int row) const;
  /// counts[j][i] = number of (i+1)'s in row j+1, for num_rows x max_value.
  std::vector<std::vector<int>> counts(int max_value, int num_rows) const;
  static CircledArray from_counts(const std::vector<std::vector<int>>& counts);

  friend bool operator==(const CircledArray&, const CircledArray&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// w_j: W[1][j] ones, W[2][j] twos, ...
std::vector<int> one_rowed_array(const WMatrix& w, int j);

/// M <- x. Row 1 of M (circled) and x (boxed) are merged with circled v
/// placed before boxed v; the circles move by one box-ball step (circles
/// leaving the right end are dropped); boxes vacated by a circle are
/// renumbered v-1, boxed 0's are deleted; circled values form the new row and
/// the boxed values act on the next row. The remaining word becomes a new
/// bottom row.
CircledArray act_one_row(const CircledArray& m, const std::vector<int>& x);

/// Intermediate state of M <- x: rows above `at_row` are already updated and
/// `pending` is the boxed word about to act on row `at_row`. Rows are kept
/// untrimmed.
struct ActionPanel {
  std::vector<std::vector<int>> rows;
  std::vector<int> pending;
  int at_row = 1;
};

/// Every panel of M <- x: the start, one per row of M, and the final array
/// (pending empty, at_row one past the new bottom row).
std::vector<ActionPanel> act_one_row_panels(const CircledArray& m, const std::vector<int>& x);

/// w_N <- ... <- w_0 over the window N = max(stabilization index, d).
CircledArray circled_array_from_w(const WMatrix& w);
/// Same with an explicit window (must be at least the stabilization index).
CircledArray circled_array_from_w(const WMatrix& w, int window);

struct ArraySlideResult {
  CircledArray array;
  int end_row = 0;
};

/// One step of the vertical diagram: the circled array after the slide from
/// row k, computed from M alone by the min-plus exchange with E([k]).
/// `context` is the W-matrix whose array is M; throws UnrealizableSlide if row
/// k of it has no inside corner, ShapeMismatch if M is not its array.
ArraySlideResult array_slide(const CircledArray& m, int k, const WMatrix& context);

}  // namespace troptab
