#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "troptab/tableau.hpp"
#include "troptab/wmatrix.hpp"

namespace troptab {

/// 0/1 matrix marking the path of a slide: one 1 per column, starting at row
/// `start_row` in column 0. `end_row` is the row the path settles in.
struct QPath {
  Eigen::MatrixXi q;  // d x (N+1)
  int start_row = 0;
  int end_row = 0;

  /// Row of the 1 in column j.
  int row_at(int j) const;

  friend bool operator==(const QPath& a, const QPath& b) {
    return a.start_row == b.start_row && a.end_row == b.end_row && a.q == b.q;
  }
};

struct PhiResult {
  WMatrix w;
  QPath path;
};

/// The slide map on W-matrices, computed by the piecewise-linear recurrence
///   Q[i+1][j+1] = min(Q[i+1][j], W[i+1][j]) - min(Q[i][j], W[i][j]) + Q[i][j]
///   W+[i][j]    = min(Q[i+1][j], W[i+1][j]) - min(Q[i][j], W[i][j]) + W[i][j]
/// with Q[0][j] = 0 and W[0][j] = +inf. Output keeps the input's N.
PhiResult phi_k(const WMatrix& w, int k);

/// Same map, computed by walking the path (right when W != 0, lower right when
/// W == 0) and moving one unit up from each nonzero entry on it.
PhiResult phi_k_path(const WMatrix& w, int k);

/// Rows of the labels m, m-1, ..., 1 of a standard tableau.
std::vector<int> k_sequence_from_standard(const SkewTableau& r);

struct RectificationDiagram {
  std::vector<int> left_rows;
  std::vector<int> right_rows;
  std::vector<WMatrix> w_rows;  // size left_rows.size() + 1
  std::vector<QPath> q_columns;

  const WMatrix& bottom() const { return w_rows.back(); }
};

/// Iterates phi_k along `order`. Throws UnrealizableOrder (with the failing
/// step) if a row has no inside corner or the last snapshot is still skew.
RectificationDiagram rectify_diagram(const SkewTableau& s, const std::vector<int>& order);
/// Order read from a standard tableau of the inner shape.
RectificationDiagram rectify_diagram_by(const SkewTableau& s, const SkewTableau& r);

/// {t1} <- t2 <- ... <- td.
SkewTableau bundle_rows(const std::vector<int>& ts);

/// Associated tableau of each diagram column j = 0..N: the bundle of the
/// rows every slide's path occupies at column j.
std::vector<SkewTableau> column_bundles(const RectificationDiagram& diagram);

struct KpReport {
  bool ok = true;
  std::string first_violation;
  int checked = 0;
};

/// F[i][j] = number of boxes in rows 1..i holding entries <= j (inner boxes
/// count as 0), over i = 0..d+1, j = 0..n+2.
Eigen::MatrixXi f_array(const SkewTableau& s, int d, int n);

/// Checks the tropical KP equation
///   F^t[i][j] + F^{t+1}[i][j+1] = max(F^t[i+1][j+1] + F^{t+1}[i-1][j], F^t[i][j+1] + F^{t+1}[i][j])
/// at every interior index, and that the variables Q, W derived from F
/// satisfy the slide recurrence. Throws NotASlideChain unless each step is a
/// single slide.
KpReport f_arrays_check(const std::vector<SkewTableau>& chain);

}  // namespace troptab
