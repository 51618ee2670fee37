#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace troptab {

/// Weakly decreasing sequence of positive row lengths. Trailing zeros are
/// dropped on construction; the empty partition is valid.
class Partition {
 public:
  Partition() = default;
  Partition(std::vector<int> parts);  // NOLINT(google-explicit-constructor)
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }

  /// Number of nonzero rows.
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  /// Row length for 1-based `row`; 0 beyond the last row.
  int operator[](int row) const noexcept {
    return row >= 1 && row <= length() ? parts_[row - 1] : 0;
  }

  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  bool contains(const Partition& other) const noexcept;

  /// Row r can receive a box at column (*this)[r] + 1.
  bool is_addable_row(int row) const noexcept;
  /// Row r ends in a corner box (no box below or to the right).
  bool is_removable_row(int row) const noexcept;

  Partition with_box_added(int row) const;
  Partition with_box_removed(int row) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct SkewShape {
  Partition outer;
  Partition inner;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

/// Position of a box, 1-based. An inside corner is a corner box of the inner
/// shape; an outside corner is a corner box of the outer shape.
struct Corner {
  enum class Kind { Inside, Outside };

  int row = 0;
  int col = 0;
  Kind kind = Kind::Inside;

  friend bool operator==(const Corner&, const Corner&) = default;
};

/// Semistandard filling of a skew diagram. Rows are stored as the filled
/// entries only; row r occupies columns inner[r]+1 .. outer[r].
class SkewTableau {
 public:
  SkewTableau() = default;

  /// Throws Error(InvalidTableau) if the filling is not semistandard, if an
  /// entry is not positive, or if the shapes are not partitions.
  SkewTableau(Partition inner, std::vector<std::vector<int>> filled_rows);

  static SkewTableau straight(std::vector<std::vector<int>> rows);

  const Partition& inner() const noexcept { return inner_; }
  const Partition& outer() const noexcept { return outer_; }
  SkewShape shape() const { return {outer_, inner_}; }

  /// Filled entries of each row, rows 1..num_rows() at indices 0..num_rows()-1.
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  /// Number of rows of the outer shape.
  int num_rows() const noexcept { return outer_.length(); }
  /// Number of filled boxes.
  int size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  bool is_straight() const noexcept { return inner_.empty(); }
  int max_entry() const noexcept;

  /// Entry at 1-based (row, col): 0 for an inner (empty) box. Throws
  /// std::out_of_range outside the outer shape.
  int at(int row, int col) const;

  /// Number of entries <= value in `row`, counting inner boxes as entry 0.
  int count_at_most(int row, int value) const noexcept;

  /// Rows read bottom to top, each left to right.
  std::vector<int> row_word() const;

  /// Full rows with 0 marking inner boxes.
  std::vector<std::vector<int>> grid() const;

  /// Rebuilds a tableau from a grid with 0 marking inner boxes. Empty
  /// trailing rows are dropped.
  static SkewTableau from_grid(const std::vector<std::vector<int>>& grid);

  std::vector<Corner> inside_corners() const;
  std::vector<Corner> outside_corners() const;

  bool is_standard() const;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  Partition outer_;
  Partition inner_;
  std::vector<std::vector<int>> rows_;
};

/// Lexicographic order on (inner, rows); used for sets and maps in tests.
bool operator<(const SkewTableau& a, const SkewTableau& b);

}  // namespace troptab
