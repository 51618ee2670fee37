#pragma once

// Matrix builders for the geometric identities, written from the definitions
// and independent of the library's own builders.

#include <random>

#include "troptab/geometric.hpp"

namespace matrix_oracle {

using troptab::Rational;
using troptab::Vec;
using troptab::Mat;

using Vq = Vec<Rational>;
using Mq = Mat<Rational>;

// Entries past the end of a vector are 1.
inline Rational at(const Vq& v, int i) { return i <= v.size() ? v(i - 1) : Rational(1); }

inline Mq E(const Vq& i_vec, int n) {
  Mq m = Mq::Zero(n, n);
  for (int r = 1; r <= n; ++r) {
    m(r - 1, r - 1) = at(i_vec, r);
    if (r < n) m(r - 1, r) = 1;
  }
  return m;
}

inline Mq Fk(const Vq& v, int k, int n) {
  Mq m = Mq::Identity(n, n);
  for (int r = k + 1; r <= n; ++r) m(r - 1, r - 2) = -at(v, r - k);
  return m;
}

// Plain triple loop: Eigen's product kernels do not instantiate for the
// Boost rational type.
inline Mq mul(const Mq& a, const Mq& b) {
  Mq c = Mq::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

inline bool leading_equal(const Mq& a, const Mq& b, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

struct RandomQ {
  std::mt19937 rng;
  std::uniform_int_distribution<int> num{1, 9}, den{1, 9};
  explicit RandomQ(unsigned seed) : rng(seed) {}
  Rational operator()() { return Rational(num(rng)) / den(rng); }
  Vq vec(int n) {
    Vq v(n);
    for (int i = 0; i < n; ++i) v(i) = (*this)();
    return v;
  }
};

inline Rational power(const Rational& t, long long e) {
  Rational r(1);
  while (e-- > 0) r *= t;
  return r;
}


}  // namespace matrix_oracle
