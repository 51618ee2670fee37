#pragma once

#include <vector>

#include "troptab/tableau.hpp"

namespace troptab {

struct SlideResult {
  SkewTableau tableau;
  /// For a forward slide: the vacated box, now outside the outer shape.
  /// For a reverse slide: the new inner box.
  Corner corner;
};

/// Jeu de taquin slide into the inside corner `c`. When the boxes below and
/// to the right of the hole hold equal entries, the one below moves.
SlideResult jdt_slide(const SkewTableau& t, const Corner& c);
/// Slide into the inside corner of `row`; throws NotAnInsideCorner if none.
SlideResult jdt_slide_row(const SkewTableau& t, int row);

/// Reverse slide from the outside corner `c`, a box that can be added to the
/// outer shape: c.col == outer[c.row] + 1.
SlideResult reverse_slide(const SkewTableau& t, const Corner& c);
SlideResult reverse_slide_row(const SkewTableau& t, int row);

/// Slides at the topmost inside corner until the tableau is straight.
SkewTableau rectify(const SkewTableau& t);
/// Same, also returning the rows where each slide ended.
SkewTableau rectify(const SkewTableau& t, std::vector<int>& end_rows);

/// Row insertion T <- value.
SkewTableau row_bump(const SkewTableau& t, int value);

struct ColumnBumpResult {
  SkewTableau tableau;
  Corner added;  // box created by the insertion
};

/// Column insertion value -> T: in each column the value replaces the highest
/// entry that is equal or greater, which moves to the next column.
ColumnBumpResult column_bump_at(int value, const SkewTableau& t);
SkewTableau column_bump(int value, const SkewTableau& t);

struct EjectResult {
  int value;
  SkewTableau tableau;
};

/// Inverse of column_bump: removes the corner box `c` of T and reverses the
/// insertion path, returning the ejected value.
EjectResult reverse_column_bump(const SkewTableau& t, const Corner& c);

/// Row insertion of each letter into the empty tableau.
SkewTableau p_tableau(const std::vector<int>& word);

/// A . B: the row word of B inserted into A.
SkewTableau tableau_product(const SkewTableau& a, const SkewTableau& b);

/// Schutzenberger dual: rotate by 180 degrees, replace i by m+1-i, rectify.
SkewTableau evacuation_dual(const SkewTableau& z, int m);

/// The tableau whose i-th row is filled with i.
SkewTableau u_tableau(const Partition& mu);

}  // namespace troptab
