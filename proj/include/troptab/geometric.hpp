#pragma once

#include <string>
#include <vector>

#include "troptab/semifield.hpp"

namespace troptab {

// Local maps between bidiagonal factors. Vectors are 1-based in the comments
// and carry an implicit tail of one() beyond their size. Every map is written
// once, without subtraction, and instantiated for Rational and MinPlus.

template <class T>
struct ExchangeResult {
  Vec<T> i_next;  // I'
  Vec<T> u_next;  // U'
};

template <class T>
struct BbsMapResult {
  Vec<T> v_next;  // V'
  Vec<T> u_next;  // U'
};

/// Single-level kernel F_k(U') E(I) = E(I') F_k(U) for inputs I, U.
///   I'_r = I_r                                   for r < k
///   I'_r = (I_r + U_{r-k+1}) * rho_r             for r >= k
///   rho_k = one, rho_{r+1} = I_r / (I_r + U_{r-k+1})
///   U'_s = (I_{s+k} + U_{s+1}) * U_s / (I_{s+k-1} + U_s)
/// I' has the size of I; U' has min(|U|, |I| - k) entries.
template <class T>
ExchangeResult<T> ef_kernel(const Vec<T>& u, const Vec<T>& i_vec, int k) {
  require_admissible(u, "U");
  require_admissible(i_vec, "I");
  if (k < 1) throw Error(ErrorKind::NonPositiveParameter, "level must be positive");
  const int m = static_cast<int>(i_vec.size());
  Vec<T> i_next(m);
  T rho = Semifield<T>::one();
  for (int r = 1; r <= m; ++r) {
    if (r < k) {
      i_next(r - 1) = i_vec(r - 1);
      continue;
    }
    const T denom = i_vec(r - 1) + entry(u, r - k + 1);
    i_next(r - 1) = denom * rho;
    rho = i_vec(r - 1) / denom;
  }
  const int len = std::max(0, std::min(static_cast<int>(u.size()), m - k));
  Vec<T> u_next(len);
  for (int s = 1; s <= len; ++s)
    u_next(s - 1) = (i_vec(s + k - 1) + entry(u, s + 1)) * u(s - 1) / (i_vec(s + k - 2) + u(s - 1));
  return {i_next, u_next};
}

/// Discrete Toda step F(V') E(I) = E(I') F(V): the level-1 kernel.
///   I'_r = (I_r + V_r) * rho_r, rho_1 = one, rho_{r+1} = I_r / (I_r + V_r)
///   V'_r = (I_{r+1} + V_{r+1}) * V_r / (I_r + V_r)
/// With I = Q_j and V = W_j over min-plus this is one column of the slide
/// recurrence: I' = Q_{j+1}, V' = W+_j.
template <class T>
ExchangeResult<T> toda_local(const Vec<T>& i_vec, const Vec<T>& v) {
  return ef_kernel(padded(v, static_cast<int>(i_vec.size())), i_vec, 1);
}

/// F_1(U) F_1(V) = F_2(V') F_1(U'):
///   P_1 = U_1, P_i = U_i * P_{i-1} / (P_{i-1} + V_{i-1})
///   U'_i = P_i + V_i, V'_i = U_{i+1} * V_i / U'_i
/// U' has |U| entries and V' one fewer. Over min-plus with lengths U = L and
/// gaps V = W (last gap +inf) this is one box-ball step.
template <class T>
BbsMapResult<T> local_bbs_map(const Vec<T>& u, const Vec<T>& v_in) {
  require_admissible(u, "U");
  require_admissible(v_in, "V");
  const int n = static_cast<int>(u.size());
  const Vec<T> v = padded(v_in, n);
  Vec<T> u_next(n);
  Vec<T> v_next(std::max(0, n - 1));
  T p = n > 0 ? u(0) : Semifield<T>::one();
  for (int i = 1; i <= n; ++i) {
    if (i > 1) p = u(i - 1) * p / (p + v(i - 2));
    u_next(i - 1) = p + v(i - 1);
  }
  for (int i = 1; i < n; ++i) v_next(i - 1) = u(i) * v(i - 1) / u_next(i - 1);
  return {v_next, u_next};
}

/// F(V_N) ... F(V_0) = F_{N+1}(U_{N+1}) ... F_1(U_1). `vs` holds V_0..V_N.
/// Inputs are padded to extent + N + 1 entries; level k has one entry fewer
/// than level k-1.
template <class T>
std::vector<Vec<T>> f_factorize(const std::vector<Vec<T>>& vs, int extent = -1) {
  if (vs.empty()) return {};
  const int n_top = static_cast<int>(vs.size()) - 1;
  if (extent < 0) {
    extent = 0;
    for (const auto& v : vs) extent = std::max(extent, static_cast<int>(v.size()));
  }
  const int len = extent + n_top + 1;
  for (const auto& v : vs) require_admissible(v, "V");
  std::vector<Vec<T>> levels{padded(vs[n_top], len)};
  for (int b = n_top - 1; b >= 0; --b) {
    Vec<T> carry = padded(vs[b], len);
    for (auto& level : levels) {
      auto r = local_bbs_map(level, carry);
      level = r.u_next;
      carry = r.v_next;
    }
    levels.push_back(carry);
  }
  return levels;
}

/// F_L(U'_L) ... F_1(U'_1) E(I) = E(I') F_L(U_L) ... F_1(U_1), threading the
/// level kernels from level 1 upwards.
template <class T>
std::pair<std::vector<Vec<T>>, Vec<T>> ef_exchange(const std::vector<Vec<T>>& us, const Vec<T>& i_vec) {
  Vec<T> cur = i_vec;
  std::vector<Vec<T>> out;
  for (std::size_t k = 1; k <= us.size(); ++k) {
    auto r = ef_kernel(us[k - 1], cur, static_cast<int>(k));
    out.push_back(r.u_next);
    cur = r.i_next;
  }
  return {out, cur};
}

// Rational matrices of the factors, used to check the identities exactly.

/// Upper bidiagonal n x n: diagonal I (tail one), superdiagonal 1.
inline Mat<Rational> e_matrix(const Vec<Rational>& i_vec, int n) {
  Mat<Rational> m = Mat<Rational>::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    m(r, r) = entry(i_vec, r + 1);
    if (r + 1 < n) m(r, r + 1) = 1;
  }
  return m;
}

/// n x n: identity block of size k-1 followed by unit lower bidiagonal with
/// subdiagonal -V (tail one).
inline Mat<Rational> fk_matrix(const Vec<Rational>& v, int k, int n) {
  Mat<Rational> m = Mat<Rational>::Identity(n, n);
  for (int s = 1; k + s - 1 < n; ++s) m(k + s - 1, k + s - 2) = -entry(v, s);
  return m;
}

inline Mat<Rational> f_matrix(const Vec<Rational>& v, int n) { return fk_matrix(v, 1, n); }

/// Leading n x n blocks agree entrywise.
inline bool leading_block_equal(const Mat<Rational>& a, const Mat<Rational>& b, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace troptab
