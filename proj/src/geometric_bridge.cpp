#include "troptab/geometric_bridge.hpp"

#include <algorithm>

#include "troptab/error.hpp"
#include "troptab/geometric.hpp"

namespace troptab {

PhiResult phi_k_toda(const WMatrix& w, int k) {
  const SkewTableau s = decode_w(w);
  if (!s.inner().is_removable_row(k))
    throw Error(ErrorKind::NoInsideCornerInRow, "row " + std::to_string(k) + " has no inside corner");
  const int d = w.d(), n = w.N(), ext = n + d + 2;
  Vec<MinPlus> q = Vec<MinPlus>::Constant(d + 1, MinPlus(0));
  q(k - 1) = 1;
  WMatrix::Matrix out(d, n + 1);
  PhiResult res;
  res.path.q = Eigen::MatrixXi::Zero(d, n + 1);
  res.path.start_row = k;
  for (int j = 0; j <= ext; ++j) {
    Vec<MinPlus> v(d + 1);
    for (int i = 1; i <= d + 1; ++i) v(i - 1) = w(i, j);
    if (j <= n)
      for (int i = 1; i <= d; ++i) res.path.q(i - 1, j) = static_cast<int>(q(i - 1).value());
    auto step = toda_local(q, v);
    if (j <= n)
      for (int i = 1; i <= d; ++i) out(i - 1, j) = static_cast<int>(step.u_next(i - 1).value());
    q = step.i_next;
  }
  for (int i = 0; i < q.size(); ++i)
    if (q(i) == MinPlus(1)) res.path.end_row = i + 1;
  res.w = WMatrix(std::move(out));
  return res;
}

CircledArray circled_array_factorized(const WMatrix& w) {
  const int d = w.d();
  const int window = std::max(w.N(), d);
  std::vector<Vec<MinPlus>> vs;
  for (int j = 0; j <= window; ++j) {
    Vec<MinPlus> v(d);
    for (int i = 1; i <= d; ++i) v(i - 1) = w(i, j);
    vs.push_back(std::move(v));
  }
  const auto levels = f_factorize(vs);
  std::vector<std::vector<int>> counts;
  for (const auto& u : levels) {
    std::vector<int> c;
    for (int i = 0; i < std::min<int>(d, static_cast<int>(u.size())); ++i)
      c.push_back(static_cast<int>(u(i).value()));
    counts.push_back(std::move(c));
  }
  return CircledArray::from_counts(counts);
}

}  // namespace troptab
