#include "troptab/wmatrix.hpp"

#include <algorithm>
#include <string>

#include "troptab/error.hpp"

namespace troptab {

WMatrix::WMatrix(Matrix w) : w_(std::move(w)) {
  if (w_.cols() < 1) throw Error(ErrorKind::InvalidWMatrix, "a W-matrix needs at least one column");
}

WMatrix WMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return WMatrix();
  const auto cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(ErrorKind::InvalidWMatrix, "rows of a W-matrix must have equal length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return WMatrix(std::move(m));
}

int WMatrix::operator()(int i, int j) const {
  if (i < 1 || i > d() || j < 0) return 0;
  return w_(i - 1, std::min(j, N()));
}

std::vector<std::vector<int>> WMatrix::to_rows() const {
  std::vector<std::vector<int>> out(d(), std::vector<int>(N() + 1));
  for (int i = 0; i < d(); ++i)
    for (int j = 0; j <= N(); ++j) out[i][j] = w_(i, j);
  return out;
}

WMatrix WMatrix::extended(int n) const {
  if (n < N()) throw Error(ErrorKind::InvalidWMatrix, "cannot shrink the stabilization index");
  Matrix m(d(), n + 1);
  for (int i = 1; i <= d(); ++i)
    for (int j = 0; j <= n; ++j) m(i - 1, j) = (*this)(i, j);
  return WMatrix(std::move(m));
}

Eigen::VectorXi WMatrix::column(int j) const {
  Eigen::VectorXi v(d());
  for (int i = 1; i <= d(); ++i) v(i - 1) = (*this)(i, j);
  return v;
}

bool operator==(const WMatrix& a, const WMatrix& b) {
  const int d = std::max(a.d(), b.d());
  const int n = std::max(a.N(), b.N());
  for (int i = 1; i <= d; ++i)
    for (int j = 0; j <= n; ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

WMatrix encode_w(const SkewTableau& s, std::optional<int> n) {
  const int N = n.value_or(s.max_entry());
  if (N < s.max_entry())
    throw Error(ErrorKind::EntryExceedsAlphabet, "N is smaller than the largest entry");
  const int d = s.num_rows();
  WMatrix::Matrix m(d, N + 1);
  for (int i = 1; i <= d; ++i)
    for (int j = 0; j <= N; ++j) m(i - 1, j) = s.count_at_most(i, j) - s.count_at_most(i + 1, j + 1);
  return WMatrix(std::move(m));
}

int row_count(const WMatrix& w, int i, int j) {
  int c = 0;
  for (int p = 0; i + p <= w.d(); ++p) c += w(i + p, j + p);
  return c;
}

void validate_w(const WMatrix& w) {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidWMatrix, msg); };
  if ((w.matrix().array() < 0).any()) fail("entries must be nonnegative");
  for (int i = 1; i <= w.d(); ++i) {
    for (int j = 0; j <= w.N(); ++j) {
      if (row_count(w, i, j) < row_count(w, i + 1, j))
        fail("diagonal sums decrease downwards at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (j > 0 && row_count(w, i, j) < row_count(w, i, j - 1))
        fail("cumulative counts of row " + std::to_string(i) + " decrease at column " + std::to_string(j));
    }
  }
}

bool is_valid_w(const WMatrix& w) {
  try {
    validate_w(w);
    return true;
  } catch (const Error&) {
    return false;
  }
}

SkewTableau decode_w(const WMatrix& w) {
  validate_w(w);
  std::vector<int> inner;
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= w.d(); ++i) {
    inner.push_back(row_count(w, i, 0));
    std::vector<int> row;
    for (int v = 1; v <= w.N(); ++v) row.insert(row.end(), row_count(w, i, v) - row_count(w, i, v - 1), v);
    rows.push_back(std::move(row));
  }
  while (!rows.empty() && rows.back().empty() && inner.back() == 0) {
    rows.pop_back();
    inner.pop_back();
  }
  try {
    return SkewTableau(Partition(inner), std::move(rows));
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidWMatrix, e.what());
  }
}

}  // namespace troptab
