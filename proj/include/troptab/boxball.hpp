#pragma once

#include <string>
#include <vector>

namespace troptab {

/// Soliton lengths L_1..L_n and the gaps W_1..W_{n-1} between them.
struct Runs {
  std::vector<int> lengths;
  std::vector<int> gaps;

  friend bool operator==(const Runs&, const Runs&) = default;
};

/// Finite window of the box-ball lattice: 1 = ball, 0 = empty. Everything
/// outside the window is empty.
class BbsState {
 public:
  BbsState() = default;
  explicit BbsState(std::vector<int> boxes);

  /// Parses a 0/1 string; '.' is accepted as an empty box.
  static BbsState from_string(const std::string& s);
  /// Solitons placed after `offset` empty boxes.
  static BbsState from_runs(const Runs& runs, int offset = 0);

  const std::vector<int>& boxes() const noexcept { return boxes_; }
  std::string to_string() const;
  Runs runs() const;
  int ball_count() const;

  /// Equal up to trailing empty boxes.
  friend bool operator==(const BbsState& a, const BbsState& b);

 private:
  std::vector<int> boxes_;  // trailing zeros trimmed
};

/// One time step: copy every ball, move each copy to the nearest empty box on
/// its right (balls taken left to right), delete the originals.
BbsState bbs_step(const BbsState& s);

/// Closed form of one step on run-length data:
///   L'_i = min(W_i, L_i + max_k(0, sum_{j=1..k} (L_{i-j} - W_{i-j})))
///   W'_i = L_{i+1} + W_i - L'_i
/// with W_n = +inf. The gap formula is indexed so that W'_i is the gap
/// following the i-th new soliton.
Runs bbs_step_formula(const Runs& r);

/// The same step evaluated by the generic min-plus kernel for
/// F_1(U) F_1(V) = F_2(V') F_1(U').
Runs bbs_step_minplus(const Runs& r);

}  // namespace troptab
