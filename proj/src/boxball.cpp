#include "troptab/boxball.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "troptab/error.hpp"
#include "troptab/geometric.hpp"

namespace troptab {

BbsState::BbsState(std::vector<int> boxes) : boxes_(std::move(boxes)) {
  for (int b : boxes_)
    if (b != 0 && b != 1) throw ParseError("box values must be 0 or 1", 0);
  while (!boxes_.empty() && boxes_.back() == 0) boxes_.pop_back();
}

BbsState BbsState::from_string(const std::string& s) {
  std::vector<int> boxes;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '1') boxes.push_back(1);
    else if (c == '0' || c == '.') boxes.push_back(0);
    else if (c == ' ' || c == '\n') continue;
    else throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  return BbsState(std::move(boxes));
}

BbsState BbsState::from_runs(const Runs& runs, int offset) {
  if (runs.gaps.size() + 1 != runs.lengths.size() && !(runs.lengths.empty() && runs.gaps.empty()))
    throw std::invalid_argument("need one gap fewer than solitons");
  std::vector<int> boxes(offset, 0);
  for (std::size_t i = 0; i < runs.lengths.size(); ++i) {
    if (runs.lengths[i] < 1 || (i < runs.gaps.size() && runs.gaps[i] < 1))
      throw Error(ErrorKind::NonPositiveParameter, "soliton lengths and gaps must be positive");
    boxes.insert(boxes.end(), runs.lengths[i], 1);
    if (i < runs.gaps.size()) boxes.insert(boxes.end(), runs.gaps[i], 0);
  }
  return BbsState(std::move(boxes));
}

std::string BbsState::to_string() const {
  std::string s;
  for (int b : boxes_) s.push_back(b ? '1' : '0');
  return s;
}

Runs BbsState::runs() const {
  Runs r;
  std::size_t i = 0;
  while (i < boxes_.size() && boxes_[i] == 0) ++i;
  while (i < boxes_.size()) {
    std::size_t j = i;
    while (j < boxes_.size() && boxes_[j] == 1) ++j;
    r.lengths.push_back(static_cast<int>(j - i));
    std::size_t k = j;
    while (k < boxes_.size() && boxes_[k] == 0) ++k;
    if (k < boxes_.size()) r.gaps.push_back(static_cast<int>(k - j));
    i = k;
  }
  return r;
}

int BbsState::ball_count() const {
  return static_cast<int>(std::count(boxes_.begin(), boxes_.end(), 1));
}

bool operator==(const BbsState& a, const BbsState& b) { return a.boxes_ == b.boxes_; }

BbsState bbs_step(const BbsState& s) {
  const auto& src = s.boxes();
  std::vector<int> work(src.size() + s.ball_count() + 1, 0);
  std::copy(src.begin(), src.end(), work.begin());
  std::vector<int> next(work.size(), 0);
  std::size_t q = 0;
  for (std::size_t p = 0; p < work.size(); ++p) {
    if (work[p] != 1) continue;
    q = std::max(q, p + 1);
    while (work[q] == 1) ++q;  // originally occupied boxes are not empty
    next[q++] = 1;
  }
  return BbsState(std::move(next));
}

Runs bbs_step_formula(const Runs& r) {
  const auto& l = r.lengths;
  const auto& w = r.gaps;
  const std::size_t n = l.size();
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  auto gap = [&](std::size_t i) -> long long { return i < w.size() ? w[i] : kInf; };
  Runs out;
  for (std::size_t i = 0; i < n; ++i) {
    long long best = 0, sum = 0;
    for (std::size_t k = 1; k <= i; ++k) {
      sum += l[i - k] - gap(i - k);
      best = std::max(best, sum);
    }
    out.lengths.push_back(static_cast<int>(std::min(gap(i), l[i] + best)));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) out.gaps.push_back(l[i + 1] + w[i] - out.lengths[i]);
  return out;
}

Runs bbs_step_minplus(const Runs& r) {
  const int n = static_cast<int>(r.lengths.size());
  Vec<MinPlus> u(n), v(n);
  for (int i = 0; i < n; ++i) {
    u(i) = r.lengths[i];
    v(i) = i + 1 < n ? MinPlus(r.gaps[i]) : MinPlus::infinity();
  }
  auto res = local_bbs_map(u, v);
  Runs out;
  for (int i = 0; i < n; ++i) out.lengths.push_back(static_cast<int>(res.u_next(i).value()));
  for (int i = 0; i + 1 < n; ++i) out.gaps.push_back(static_cast<int>(res.v_next(i).value()));
  return out;
}

}  // namespace troptab
