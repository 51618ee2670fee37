#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "troptab/tableau.hpp"

namespace troptab {

/// d x (N+1) nonnegative integer matrix W[i][j], rows i = 1..d, columns
/// j = 0..N. Column N repeats to the right and rows below d are zero, so two
/// matrices compare equal when they agree after padding.
class WMatrix {
 public:
  using Matrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

  WMatrix() : w_(0, 1) {}
  explicit WMatrix(Matrix w);
  static WMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int d() const noexcept { return static_cast<int>(w_.rows()); }
  int N() const noexcept { return static_cast<int>(w_.cols()) - 1; }

  /// W[i][j] with i 1-based; 0 for i > d, column clamped to N.
  int operator()(int i, int j) const;

  const Matrix& matrix() const noexcept { return w_; }
  std::vector<std::vector<int>> to_rows() const;

  /// Same matrix stored with a larger stabilization index.
  WMatrix extended(int n) const;

  /// Column j as a vector over rows 1..d.
  Eigen::VectorXi column(int j) const;

  friend bool operator==(const WMatrix& a, const WMatrix& b);

 private:
  Matrix w_;
};

/// Encoding with stabilization index N (default: the largest entry of S).
WMatrix encode_w(const SkewTableau& s, std::optional<int> n = std::nullopt);

/// Number of entries <= j in row i, inner boxes counted as 0; computed from W
/// as the diagonal sum of W[i+p][j+p].
int row_count(const WMatrix& w, int i, int j);

/// Throws Error(InvalidWMatrix) when W is not the encoding of a tableau.
void validate_w(const WMatrix& w);
bool is_valid_w(const WMatrix& w);

/// Inverse of encode_w; validates first.
SkewTableau decode_w(const WMatrix& w);

}  // namespace troptab
