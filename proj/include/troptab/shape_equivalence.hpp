#pragma once

#include <vector>

#include "troptab/circled_array.hpp"
#include "troptab/tableau.hpp"

namespace troptab {

/// Reverse slides from rows a_seq (execution order, first slide first);
/// returns the rows where the new empty boxes arise.
std::vector<int> shape_change_rows(const SkewTableau& t, const std::vector<int>& a_seq);

/// Rows where the slides end when S is rectified in the order given by the
/// standard tableau R of its inner shape (labels m, m-1, ..., 1).
std::vector<int> slide_end_rows(const SkewTableau& s, const SkewTableau& r);

/// Circled array of S.
CircledArray associated_array(const SkewTableau& s);

/// Equality of associated circled arrays. Throws ShapeMismatch if the skew
/// shapes differ.
bool shape_equivalent(const SkewTableau& s1, const SkewTableau& s2);

/// Definition-level check: identical shape changes under every standard
/// tableau of the inner shape.
bool shape_equivalent_by_slides(const SkewTableau& s1, const SkewTableau& s2);

}  // namespace troptab
