#pragma once

#include <optional>
#include <vector>

#include "troptab/circled_array.hpp"
#include "troptab/tableau.hpp"

namespace troptab {

/// Standard labels 1..m sticking outside a straight shape: positions[i-1] is
/// the 1-based box of label i. Together with the base shape the labelled
/// boxes form a partition, and the labels increase along rows and columns.
class StickingTableau {
 public:
  StickingTableau() = default;
  /// Throws InvalidSticking if the labels are not a standard filling of
  /// outer/base.
  StickingTableau(Partition base, std::vector<Corner> positions);
  /// From a standard skew tableau whose inner shape is the base.
  static StickingTableau from_labels(const SkewTableau& labels);

  const Partition& base() const noexcept { return base_; }
  const std::vector<Corner>& positions() const noexcept { return positions_; }
  int size() const noexcept { return static_cast<int>(positions_.size()); }
  Partition outer() const;
  SkewTableau labels() const;

  /// Rows of labels m, m-1, ..., 1 bundled by row insertion.
  SkewTableau associated_tableau() const;

  friend bool operator==(const StickingTableau&, const StickingTableau&) = default;

 private:
  Partition base_;
  std::vector<Corner> positions_;
};

/// Reverse slides of X at the labelled boxes, label 1 first.
SkewTableau reverse_slides_by_R(const SkewTableau& x, const StickingTableau& r);

struct Decomposition {
  SkewTableau x;     // rectification
  StickingTableau r;  // vacated boxes; label i undoes the (m+1-i)-th slide
};

/// Inverse of reverse_slides_by_R: rectifies S at its topmost inside corners
/// and labels the vacated boxes.
Decomposition decompose(const SkewTableau& s);

struct LRPair {
  SkewTableau t;
  SkewTableau u;

  friend bool operator==(const LRPair&, const LRPair&) = default;
};

struct LRPairResult {
  LRPair pair;
  std::vector<int> word;  // ejected letters in ejection order
};

/// Reverse column bumps V0 at the labelled boxes of R in decreasing label
/// order m..1; T = P(ejected word), U = what remains. T . U = V0.
LRPairResult lr_pair(const SkewTableau& x, const StickingTableau& r, const SkewTableau& v0);

/// T . U == V0 with the row word of U inserted into T.
bool composes_to(const LRPair& pair, const SkewTableau& v0);

/// Column-inserts a word of T into U (last letter first), labelling each new
/// box 1, 2, ...; `word` defaults to the row word of T. Throws NotComposable
/// unless the insertions rebuild V0.
StickingTableau lr_pair_inverse(const LRPair& pair, const SkewTableau& v0,
                                const std::optional<std::vector<int>>& word = std::nullopt);

struct FResult {
  SkewTableau z;
  CircledArray m;
};

/// Z = associated tableau of the rows where the rectification slides end;
/// M = associated circled array of S.
FResult F_of(const SkewTableau& s);

/// Associated tableau of the sticking tableau recovered from [T, U].
SkewTableau G_of(const LRPair& pair, const SkewTableau& v0);

/// The S2 rectifying to Y with F(S2) = F(S1): reverse slides of Y from the
/// letters of the row word of Z, last letter first.
SkewTableau lr_correspond(const SkewTableau& s1, const SkewTableau& y);

/// Same correspondence found through LR pairs over a fixed V0 of the outer
/// shape: the unique S2 rectifying to Y whose pair has the same G value.
SkewTableau lr_correspond_via_pairs(const SkewTableau& s1, const SkewTableau& y, const SkewTableau& v0);

/// Circled array M of the compact diagram with right column Z: reverse slides
/// of a large superstandard tableau from the row word of Z.
CircledArray compact_array(const SkewTableau& z);

struct ConjectureCheck {
  bool holds = false;
  SkewTableau dual;  // Z*
};

/// Number of j's in row i of M against number of (m+1-i)'s in row j of Z*,
/// with m the largest entry of Z.
ConjectureCheck check_dual_statistic(const SkewTableau& z, const CircledArray& m);

}  // namespace troptab
