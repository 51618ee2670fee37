#include "troptab/circled_array.hpp"

#include <algorithm>
#include <string>

#include "troptab/error.hpp"
#include "troptab/geometric.hpp"

namespace troptab {

CircledArray::CircledArray(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (!std::is_sorted(row.begin(), row.end()))
      throw Error(ErrorKind::InvalidTableau, "rows of a circled array must be weakly increasing");
    if (!row.empty() && row.front() < 1)
      throw Error(ErrorKind::InvalidTableau, "circled numbers must be positive");
  }
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

int CircledArray::count(int value, int row) const {
  if (row < 1 || row > num_rows()) return 0;
  const auto& r = rows_[row - 1];
  return static_cast<int>(std::count(r.begin(), r.end(), value));
}

std::vector<std::vector<int>> CircledArray::counts(int max_value, int num_rows) const {
  std::vector<std::vector<int>> out(num_rows, std::vector<int>(max_value, 0));
  for (int j = 1; j <= num_rows; ++j)
    for (int i = 1; i <= max_value; ++i) out[j - 1][i - 1] = count(i, j);
  return out;
}

CircledArray CircledArray::from_counts(const std::vector<std::vector<int>>& counts) {
  std::vector<std::vector<int>> rows;
  for (const auto& c : counts) {
    std::vector<int> row;
    for (std::size_t i = 0; i < c.size(); ++i) row.insert(row.end(), c[i], static_cast<int>(i) + 1);
    rows.push_back(std::move(row));
  }
  return CircledArray(std::move(rows));
}

std::vector<int> one_rowed_array(const WMatrix& w, int j) {
  std::vector<int> x;
  for (int i = 1; i <= w.d(); ++i) x.insert(x.end(), w(i, j), i);
  return x;
}

std::vector<ActionPanel> act_one_row_panels(const CircledArray& m, const std::vector<int>& x_in) {
  struct Box {
    bool circled;
    int value;
  };
  std::vector<int> x = x_in;
  std::sort(x.begin(), x.end());
  std::vector<ActionPanel> panels{{m.rows(), x, 1}};
  std::vector<std::vector<int>> rows = m.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const int top = std::max(row.empty() ? 0 : row.back(), x.empty() ? 0 : x.back());
    std::vector<Box> seq;
    for (int v = 1; v <= top; ++v) {
      seq.insert(seq.end(), std::count(row.begin(), row.end(), v), Box{true, v});
      seq.insert(seq.end(), std::count(x.begin(), x.end(), v), Box{false, v});
    }
    std::vector<bool> taken(seq.size(), false);
    std::size_t q = 0;
    for (std::size_t p = 0; p < seq.size(); ++p) {
      if (!seq[p].circled) continue;
      q = std::max(q, p + 1);
      while (q < seq.size() && seq[q].circled) ++q;
      if (q < seq.size()) taken[q++] = true;  // otherwise the ball leaves the window
    }
    std::vector<int> new_row, passed;
    for (std::size_t p = 0; p < seq.size(); ++p) {
      if (taken[p]) new_row.push_back(seq[p].value);
      else if (seq[p].circled) {
        if (seq[p].value > 1) passed.push_back(seq[p].value - 1);
      } else {
        passed.push_back(seq[p].value);
      }
    }
    std::sort(passed.begin(), passed.end());
    rows[r] = std::move(new_row);
    x = std::move(passed);
    panels.push_back({rows, x, static_cast<int>(r) + 2});
  }
  rows.push_back(std::move(x));
  panels.push_back({rows, {}, static_cast<int>(rows.size()) + 1});
  return panels;
}

CircledArray act_one_row(const CircledArray& m, const std::vector<int>& x) {
  return CircledArray(act_one_row_panels(m, x).back().rows);
}

CircledArray circled_array_from_w(const WMatrix& w, int window) {
  if (window < w.N()) throw Error(ErrorKind::InvalidWMatrix, "window below the stabilization index");
  CircledArray m;
  for (int j = window; j >= 0; --j) m = act_one_row(m, one_rowed_array(w, j));
  return m;
}

CircledArray circled_array_from_w(const WMatrix& w) {
  return circled_array_from_w(w, std::max(w.N(), w.d()));
}

ArraySlideResult array_slide(const CircledArray& m, int k, const WMatrix& context) {
  const SkewTableau s = decode_w(context);
  if (!s.inner().is_removable_row(k))
    throw Error(ErrorKind::UnrealizableSlide, "row " + std::to_string(k) + " has no inside corner");
  if (circled_array_from_w(context) != m)
    throw Error(ErrorKind::ShapeMismatch, "the circled array does not belong to the W-matrix");

  const int d = context.d();
  const int levels = std::max(d + 1, m.num_rows() + 1);
  const int len = d + 2 + levels;
  const auto cnt = m.counts(len, levels);
  std::vector<Vec<MinPlus>> us;
  for (const auto& c : cnt) {
    Vec<MinPlus> u(len);
    for (int i = 0; i < len; ++i) u(i) = c[i];
    us.push_back(std::move(u));
  }
  Vec<MinPlus> q = Vec<MinPlus>::Constant(len, MinPlus(0));
  q(k - 1) = 1;
  auto [us_next, q_next] = ef_exchange(us, q);

  std::vector<std::vector<int>> counts;
  for (const auto& u : us_next) {
    std::vector<int> c;
    for (int i = 0; i < std::min<int>(d, static_cast<int>(u.size())); ++i)
      c.push_back(static_cast<int>(u(i).value()));
    counts.push_back(std::move(c));
  }
  ArraySlideResult res{CircledArray::from_counts(counts), 0};
  for (int i = 0; i < q_next.size(); ++i)
    if (q_next(i) == MinPlus(1)) res.end_row = i + 1;
  return res;
}

}  // namespace troptab
