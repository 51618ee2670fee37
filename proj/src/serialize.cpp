#include "troptab/serialize.hpp"

#include "troptab/text_format.hpp"

namespace troptab {

Json to_json(const WMatrix& w) {
  return Json{{"d", w.d()}, {"N", w.N()}, {"w", w.to_rows()}};
}

WMatrix wmatrix_from_json(const Json& j) {
  const auto rows = j.at("w").get<std::vector<std::vector<int>>>();
  if (rows.empty()) return WMatrix().extended(j.value("N", 0));
  return WMatrix::from_rows(rows);
}

Json to_json(const QPath& p) {
  std::vector<std::vector<int>> q(p.q.rows(), std::vector<int>(p.q.cols()));
  for (int i = 0; i < p.q.rows(); ++i)
    for (int j = 0; j < p.q.cols(); ++j) q[i][j] = p.q(i, j);
  return Json{{"start_row", p.start_row}, {"end_row", p.end_row}, {"q", q}};
}

Json to_json(const RectificationDiagram& d) {
  Json w_rows = Json::array(), q_cols = Json::array();
  for (const auto& w : d.w_rows) w_rows.push_back(to_json(w));
  for (const auto& q : d.q_columns) q_cols.push_back(to_json(q));
  return Json{{"left_rows", d.left_rows}, {"right_rows", d.right_rows}, {"w_rows", w_rows}, {"q_columns", q_cols}};
}

Json to_json(const CircledArray& m) {
  int top = 0;
  for (const auto& row : m.rows())
    if (!row.empty()) top = std::max(top, row.back());
  std::vector<std::vector<int>> l(top, std::vector<int>(m.num_rows()));
  for (int i = 1; i <= top; ++i)
    for (int j = 1; j <= m.num_rows(); ++j) l[i - 1][j - 1] = m.count(i, j);
  return Json{{"rows", m.rows()}, {"L", l}};
}

CircledArray circled_array_from_json(const Json& j) {
  if (j.contains("rows")) return CircledArray(j.at("rows").get<std::vector<std::vector<int>>>());
  const auto l = j.at("L").get<std::vector<std::vector<int>>>();
  std::size_t rows = 0;
  for (const auto& r : l) rows = std::max(rows, r.size());
  std::vector<std::vector<int>> counts(rows, std::vector<int>(l.size(), 0));
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t r = 0; r < l[i].size(); ++r) counts[r][i] = l[i][r];
  return CircledArray::from_counts(counts);
}

Json to_json(const Runs& r) { return Json{{"L", r.lengths}, {"W", r.gaps}}; }

Runs runs_from_json(const Json& j) {
  return Runs{j.at("L").get<std::vector<int>>(), j.at("W").get<std::vector<int>>()};
}

Json to_json(const LRPair& p) {
  return Json{{"T", format_tableau(p.t)}, {"U", format_tableau(p.u)}};
}

LRPair lr_pair_from_json(const Json& j) {
  return LRPair{parse_tableau(j.at("T").get<std::string>()), parse_tableau(j.at("U").get<std::string>())};
}

Json to_json(const StickingTableau& r) {
  Json labels = Json::array();
  for (const auto& c : r.positions()) labels.push_back({c.row, c.col});
  return Json{{"base", r.base().parts()}, {"labels", labels}};
}

StickingTableau sticking_from_json(const Json& j) {
  std::vector<Corner> pos;
  for (const auto& l : j.at("labels")) pos.push_back(Corner{l.at(0).get<int>(), l.at(1).get<int>(), Corner::Kind::Outside});
  return StickingTableau(Partition(j.at("base").get<std::vector<int>>()), std::move(pos));
}

}  // namespace troptab
