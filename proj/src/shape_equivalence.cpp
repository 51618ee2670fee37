#include "troptab/shape_equivalence.hpp"

#include <string>

#include "troptab/enumerate.hpp"
#include "troptab/error.hpp"
#include "troptab/tableau_ops.hpp"
#include "troptab/tropical_jdt.hpp"

namespace troptab {

std::vector<int> shape_change_rows(const SkewTableau& t, const std::vector<int>& a_seq) {
  std::vector<int> out;
  SkewTableau cur = t;
  for (std::size_t step = 0; step < a_seq.size(); ++step) {
    if (!cur.outer().is_addable_row(a_seq[step]))
      throw Error(ErrorKind::NoOutsideCornerInRow,
                  "row " + std::to_string(a_seq[step]) + " has no outside corner", step);
    auto res = reverse_slide_row(cur, a_seq[step]);
    out.push_back(res.corner.row);
    cur = std::move(res.tableau);
  }
  return out;
}

std::vector<int> slide_end_rows(const SkewTableau& s, const SkewTableau& r) {
  std::vector<int> ends;
  SkewTableau cur = s;
  for (int k : k_sequence_from_standard(r)) {
    auto res = jdt_slide_row(cur, k);
    ends.push_back(res.corner.row);
    cur = std::move(res.tableau);
  }
  return ends;
}

CircledArray associated_array(const SkewTableau& s) {
  return circled_array_from_w(encode_w(s));
}

bool shape_equivalent(const SkewTableau& s1, const SkewTableau& s2) {
  if (s1.shape() != s2.shape()) throw Error(ErrorKind::ShapeMismatch, "skew shapes differ");
  return associated_array(s1) == associated_array(s2);
}

bool shape_equivalent_by_slides(const SkewTableau& s1, const SkewTableau& s2) {
  if (s1.shape() != s2.shape()) throw Error(ErrorKind::ShapeMismatch, "skew shapes differ");
  for (const auto& r : standard_tableaux(s1.inner()))
    if (slide_end_rows(s1, r) != slide_end_rows(s2, r)) return false;
  return true;
}

}  // namespace troptab
