#include "troptab/lr_correspondence.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "troptab/enumerate.hpp"
#include "troptab/error.hpp"
#include "troptab/tableau_ops.hpp"
#include "troptab/tropical_jdt.hpp"
#include "troptab/wmatrix.hpp"

namespace troptab {

namespace {

SkewTableau build_labels(const Partition& base, const std::vector<Corner>& positions) {
  std::map<int, std::map<int, int>> by_row;  // row -> col -> label
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const Corner& c = positions[i];
    if (c.row < 1 || c.col <= base[c.row])
      throw Error(ErrorKind::InvalidSticking, "label " + std::to_string(i + 1) + " lies inside the base shape");
    if (!by_row[c.row].emplace(c.col, static_cast<int>(i) + 1).second)
      throw Error(ErrorKind::InvalidSticking, "two labels share a box");
  }
  const int rows = std::max(base.length(), by_row.empty() ? 0 : by_row.rbegin()->first);
  std::vector<std::vector<int>> filled(rows);
  for (int r = 1; r <= rows; ++r) {
    int expect = base[r] + 1;
    for (auto [col, label] : by_row[r]) {
      if (col != expect++) throw Error(ErrorKind::InvalidSticking, "labels leave a gap in row " + std::to_string(r));
      filled[r - 1].push_back(label);
    }
  }
  try {
    SkewTableau t(base, std::move(filled));
    if (!t.is_standard()) throw Error(ErrorKind::InvalidSticking, "labels are not 1..m");
    return t;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidSticking) throw;
    throw Error(ErrorKind::InvalidSticking, e.what());
  }
}

}  // namespace

StickingTableau::StickingTableau(Partition base, std::vector<Corner> positions)
    : base_(std::move(base)), positions_(std::move(positions)) {
  for (auto& c : positions_) c.kind = Corner::Kind::Outside;
  build_labels(base_, positions_);
}

StickingTableau StickingTableau::from_labels(const SkewTableau& labels) {
  if (!labels.is_standard()) throw Error(ErrorKind::InvalidSticking, "labels are not 1..m");
  std::vector<Corner> pos(labels.size());
  for (int r = 1; r <= labels.num_rows(); ++r)
    for (int c = labels.inner()[r] + 1; c <= labels.outer()[r]; ++c)
      pos[labels.at(r, c) - 1] = Corner{r, c, Corner::Kind::Outside};
  return StickingTableau(labels.inner(), std::move(pos));
}

Partition StickingTableau::outer() const { return labels().outer(); }

SkewTableau StickingTableau::labels() const { return build_labels(base_, positions_); }

SkewTableau StickingTableau::associated_tableau() const {
  std::vector<int> rows;
  for (auto it = positions_.rbegin(); it != positions_.rend(); ++it) rows.push_back(it->row);
  return bundle_rows(rows);
}

SkewTableau reverse_slides_by_R(const SkewTableau& x, const StickingTableau& r) {
  if (!x.is_straight() || x.outer() != r.base())
    throw Error(ErrorKind::InvalidSticking, "R must stick to the shape of X");
  SkewTableau cur = x;
  for (const Corner& c : r.positions()) cur = reverse_slide(cur, c).tableau;
  return cur;
}

Decomposition decompose(const SkewTableau& s) {
  SkewTableau cur = s;
  std::vector<Corner> vacated;
  while (!cur.inner().empty()) {
    auto res = jdt_slide(cur, cur.inside_corners().front());
    vacated.push_back(res.corner);
    cur = std::move(res.tableau);
  }
  std::reverse(vacated.begin(), vacated.end());
  return {cur, StickingTableau(cur.outer(), std::move(vacated))};
}

LRPairResult lr_pair(const SkewTableau& x, const StickingTableau& r, const SkewTableau& v0) {
  if (!x.is_straight() || x.outer() != r.base())
    throw Error(ErrorKind::InvalidSticking, "R must stick to the shape of X");
  if (!v0.is_straight() || v0.outer() != r.outer())
    throw Error(ErrorKind::ShapeMismatch, "V0 must have the outer shape of R");
  LRPairResult res;
  SkewTableau cur = v0;
  for (auto it = r.positions().rbegin(); it != r.positions().rend(); ++it) {
    auto ej = reverse_column_bump(cur, *it);
    res.word.push_back(ej.value);
    cur = std::move(ej.tableau);
  }
  res.pair = {p_tableau(res.word), cur};
  return res;
}

bool composes_to(const LRPair& pair, const SkewTableau& v0) {
  return tableau_product(pair.t, pair.u) == v0;
}

StickingTableau lr_pair_inverse(const LRPair& pair, const SkewTableau& v0,
                                const std::optional<std::vector<int>>& word) {
  const std::vector<int> w = word.value_or(pair.t.row_word());
  if (p_tableau(w) != pair.t) throw Error(ErrorKind::NotComposable, "the word does not give T");
  if (!composes_to(pair, v0)) throw Error(ErrorKind::NotComposable, "T . U is not V0");
  SkewTableau cur = pair.u;
  std::vector<Corner> pos;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto ins = column_bump_at(*it, cur);
    pos.push_back(ins.added);
    cur = std::move(ins.tableau);
  }
  if (cur != v0) throw Error(ErrorKind::NotComposable, "column insertion does not rebuild V0");
  return StickingTableau(pair.u.outer(), std::move(pos));
}

FResult F_of(const SkewTableau& s) {
  std::vector<int> ends;
  rectify(s, ends);
  return {bundle_rows(ends), circled_array_from_w(encode_w(s))};
}

SkewTableau G_of(const LRPair& pair, const SkewTableau& v0) {
  return lr_pair_inverse(pair, v0).associated_tableau();
}

SkewTableau lr_correspond(const SkewTableau& s1, const SkewTableau& y) {
  if (!y.is_straight()) throw Error(ErrorKind::ShapeMismatch, "Y must be straight");
  std::vector<int> ends;
  const SkewTableau x1 = rectify(s1, ends);
  if (x1.outer() != y.outer()) throw Error(ErrorKind::ShapeMismatch, "Y must have the shape of the rectification of S1");
  const std::vector<int> a = bundle_rows(ends).row_word();
  SkewTableau cur = y;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    if (!cur.outer().is_addable_row(*it))
      throw Error(ErrorKind::NoOutsideCornerInRow, "row " + std::to_string(*it) + " has no outside corner",
                  static_cast<std::size_t>(a.rend() - it - 1));
    cur = reverse_slide_row(cur, *it).tableau;
  }
  if (cur.shape() != s1.shape()) throw Error(ErrorKind::ShapeMismatch, "reconstruction left the skew shape of S1");
  return cur;
}

SkewTableau lr_correspond_via_pairs(const SkewTableau& s1, const SkewTableau& y, const SkewTableau& v0) {
  auto g_value = [&](const SkewTableau& s) {
    const Decomposition dec = decompose(s);
    return G_of(lr_pair(dec.x, dec.r, v0).pair, v0);
  };
  const SkewTableau target = g_value(s1);
  std::optional<SkewTableau> found;
  for (const auto& s2 : skew_tableaux(s1.outer(), s1.inner(), y.max_entry())) {
    if (rectify(s2) != y || g_value(s2) != target) continue;
    if (found) throw Error(ErrorKind::NotComposable, "two tableaux share the same pair invariant");
    found = s2;
  }
  if (!found) throw Error(ErrorKind::NotComposable, "no tableau rectifying to Y matches");
  return *found;
}

CircledArray compact_array(const SkewTableau& z) {
  if (z.empty()) return {};
  const std::vector<int> a = z.row_word();
  const int h = *std::max_element(a.begin(), a.end());
  const int k = static_cast<int>(a.size()) + 1;
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= h; ++r) rows.emplace_back(k * (h - r + 1), r);
  SkewTableau cur = SkewTableau::straight(std::move(rows));
  for (auto it = a.rbegin(); it != a.rend(); ++it) cur = reverse_slide_row(cur, *it).tableau;
  return circled_array_from_w(encode_w(cur));
}

ConjectureCheck check_dual_statistic(const SkewTableau& z, const CircledArray& m) {
  ConjectureCheck out;
  const int top = z.max_entry();
  out.dual = evacuation_dual(z, top);
  out.holds = true;
  for (int i = 1; i <= std::max(m.num_rows(), top); ++i) {
    for (int j = 1; j <= top; ++j) {
      const int lhs = m.count(j, i);
      const int opposite = top + 1 - i;
      int rhs = 0;
      if (opposite >= 1 && j <= out.dual.num_rows()) {
        const auto& row = out.dual.rows()[j - 1];
        rhs = static_cast<int>(std::count(row.begin(), row.end(), opposite));
      }
      if (lhs != rhs) out.holds = false;
    }
  }
  return out;
}

}  // namespace troptab
