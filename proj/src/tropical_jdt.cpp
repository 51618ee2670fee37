#include "troptab/tropical_jdt.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "troptab/error.hpp"
#include "troptab/tableau_ops.hpp"

namespace troptab {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

void require_inside_corner(const WMatrix& w, int k) {
  const SkewTableau s = decode_w(w);
  if (!s.inner().is_removable_row(k))
    throw Error(ErrorKind::NoInsideCornerInRow, "row " + std::to_string(k) + " has no inside corner");
}

// Columns processed beyond N so the path has settled in its final row.
int window(const WMatrix& w) { return w.N() + w.d() + 2; }

QPath make_path(const std::vector<std::vector<int>>& q_cols, int d, int n, int k) {
  QPath p;
  p.q = Eigen::MatrixXi::Zero(d, n + 1);
  p.start_row = k;
  for (int j = 0; j <= n; ++j)
    for (int i = 1; i <= d; ++i) p.q(i - 1, j) = q_cols[j][i];
  const auto& last = q_cols.back();
  p.end_row = static_cast<int>(std::find(last.begin(), last.end(), 1) - last.begin());
  return p;
}

}  // namespace

int QPath::row_at(int j) const {
  for (int i = 0; i < q.rows(); ++i)
    if (q(i, j) == 1) return i + 1;
  return 0;
}

PhiResult phi_k(const WMatrix& w, int k) {
  require_inside_corner(w, k);
  const int d = w.d(), n = w.N(), ext = window(w);
  auto wv = [&](int i, int j) -> long long { return i == 0 ? kInf : w(i, j); };

  std::vector<long long> q(d + 2, 0);
  q[k] = 1;
  std::vector<std::vector<int>> q_cols;
  WMatrix::Matrix out(d, n + 1);
  for (int j = 0; j <= ext; ++j) {
    q_cols.emplace_back(q.begin(), q.end());
    std::vector<long long> mins(d + 2), next(d + 2, 0);
    for (int i = 0; i <= d + 1; ++i) mins[i] = std::min(q[i], wv(i, j));
    for (int i = 0; i <= d; ++i) {
      next[i + 1] = mins[i + 1] - mins[i] + q[i];
      if (i >= 1 && j <= n) out(i - 1, j) = static_cast<int>(mins[i + 1] - mins[i] + wv(i, j));
    }
    q = std::move(next);
  }
  return {WMatrix(std::move(out)), make_path(q_cols, d, n, k)};
}

PhiResult phi_k_path(const WMatrix& w, int k) {
  require_inside_corner(w, k);
  const int d = w.d(), n = w.N(), ext = window(w);
  WMatrix::Matrix out = w.matrix();
  std::vector<std::vector<int>> q_cols;
  int i = k;
  for (int j = 0; j <= ext; ++j) {
    std::vector<int> col(d + 2, 0);
    if (i <= d + 1) col[i] = 1;
    q_cols.push_back(std::move(col));
    const int here = w(i, j);
    if (here != 0 && j <= n) {
      out(i - 1, j) -= 1;
      if (i >= 2) out(i - 2, j) += 1;
    }
    if (here == 0) ++i;
  }
  return {WMatrix(std::move(out)), make_path(q_cols, d, n, k)};
}

std::vector<int> k_sequence_from_standard(const SkewTableau& r) {
  if (!r.is_standard()) throw Error(ErrorKind::NotStandard, "labels must be 1..m, each once");
  std::map<int, int> row_of;
  for (int i = 1; i <= r.num_rows(); ++i)
    for (int v : r.rows()[i - 1]) row_of[v] = i;
  std::vector<int> out;
  for (auto it = row_of.rbegin(); it != row_of.rend(); ++it) out.push_back(it->second);
  return out;
}

RectificationDiagram rectify_diagram(const SkewTableau& s, const std::vector<int>& order) {
  RectificationDiagram diag;
  diag.left_rows = order;
  diag.w_rows.push_back(encode_w(s));
  for (std::size_t step = 0; step < order.size(); ++step) {
    PhiResult r;
    try {
      r = phi_k(diag.w_rows.back(), order[step]);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoInsideCornerInRow) throw;
      throw Error(ErrorKind::UnrealizableOrder,
                  "step " + std::to_string(step + 1) + ": row " + std::to_string(order[step]) +
                      " has no inside corner",
                  step);
    }
    diag.right_rows.push_back(r.path.end_row);
    diag.q_columns.push_back(r.path);
    diag.w_rows.push_back(r.w);
  }
  if (!decode_w(diag.bottom()).is_straight())
    throw Error(ErrorKind::UnrealizableOrder, "the order stops before the tableau is straight",
                order.size());
  return diag;
}

RectificationDiagram rectify_diagram_by(const SkewTableau& s, const SkewTableau& r) {
  if (r.outer() != s.inner())
    throw Error(ErrorKind::ShapeMismatch, "the standard tableau must fill the inner shape");
  return rectify_diagram(s, k_sequence_from_standard(r));
}

SkewTableau bundle_rows(const std::vector<int>& ts) {
  return p_tableau(ts);
}

std::vector<SkewTableau> column_bundles(const RectificationDiagram& diagram) {
  std::vector<SkewTableau> out;
  if (diagram.q_columns.empty()) return out;
  const int cols = static_cast<int>(diagram.q_columns.front().q.cols());
  for (int j = 0; j < cols; ++j) {
    std::vector<int> col;
    for (const QPath& p : diagram.q_columns) col.push_back(p.row_at(j));
    out.push_back(bundle_rows(col));
  }
  return out;
}

Eigen::MatrixXi f_array(const SkewTableau& s, int d, int n) {
  Eigen::MatrixXi f = Eigen::MatrixXi::Zero(d + 2, n + 3);
  for (int i = 1; i <= d + 1; ++i)
    for (int j = 0; j <= n + 2; ++j) f(i, j) = f(i - 1, j) + s.count_at_most(i, j);
  return f;
}

KpReport f_arrays_check(const std::vector<SkewTableau>& chain) {
  if (chain.size() < 2) throw Error(ErrorKind::NotASlideChain, "a chain needs at least two tableaux");
  for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
    bool linked = false;
    for (const Corner& c : chain[t].inside_corners())
      if (jdt_slide(chain[t], c).tableau == chain[t + 1]) linked = true;
    if (!linked)
      throw Error(ErrorKind::NotASlideChain,
                  "tableau " + std::to_string(t + 1) + " is not one slide away from tableau " +
                      std::to_string(t),
                  t);
  }
  int d = 0, n = 0;
  for (const auto& s : chain) {
    d = std::max(d, s.num_rows());
    n = std::max(n, s.max_entry());
  }
  std::vector<Eigen::MatrixXi> f;
  for (const auto& s : chain) f.push_back(f_array(s, d, n));

  KpReport rep;
  auto violate = [&](const std::string& what, std::size_t t, int i, int j) {
    if (!rep.ok) return;
    rep.ok = false;
    rep.first_violation = what + " at t=" + std::to_string(t) + ", i=" + std::to_string(i) +
                          ", j=" + std::to_string(j);
  };
  for (std::size_t t = 0; t + 1 < f.size(); ++t) {
    const auto& a = f[t];
    const auto& b = f[t + 1];
    for (int i = 1; i <= d; ++i) {
      for (int j = 0; j <= n + 1; ++j) {
        ++rep.checked;
        const int lhs = a(i, j) + b(i, j + 1);
        const int rhs = std::max(a(i + 1, j + 1) + b(i - 1, j), a(i, j + 1) + b(i, j));
        if (lhs != rhs) violate("KP equation", t, i, j);
      }
    }
    // Change of variables; row 0 carries the boundary values Q = 0, W = +inf.
    auto q = [&](int i, int j) -> long long {
      return i == 0 ? 0 : a(i, j) + b(i - 1, j) - a(i - 1, j) - b(i, j);
    };
    auto wt = [&](const Eigen::MatrixXi& x, int i, int j) -> long long {
      return i == 0 ? kInf : x(i, j) + x(i, j + 1) - x(i - 1, j) - x(i + 1, j + 1);
    };
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j <= n; ++j) {
        ++rep.checked;
        const long long delta = std::min(q(i + 1, j), wt(a, i + 1, j)) - std::min(q(i, j), wt(a, i, j));
        if (q(i + 1, j + 1) != delta + q(i, j)) violate("Q recurrence", t, i, j);
        if (i >= 1 && wt(b, i, j) != delta + wt(a, i, j)) violate("W recurrence", t, i, j);
      }
    }
  }
  return rep;
}

}  // namespace troptab
