#pragma once

#include <algorithm>
#include <compare>
#include <limits>
#include <ostream>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "troptab/error.hpp"

namespace troptab {

/// Exact rationals; positive values form the semifield used for the
/// geometric lift.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Min-plus integers with a top element +inf: a + b = min(a, b),
/// a * b = a + b, a / b = a - b, one = 0.
class MinPlus {
 public:
  constexpr MinPlus() = default;
  constexpr MinPlus(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr MinPlus infinity() {
    MinPlus m;
    m.inf_ = true;
    return m;
  }

  constexpr bool is_infinite() const noexcept { return inf_; }
  constexpr long long value() const noexcept { return v_; }

  friend constexpr MinPlus operator+(MinPlus a, MinPlus b) {
    if (a.inf_) return b;
    if (b.inf_) return a;
    return MinPlus(std::min(a.v_, b.v_));
  }
  friend constexpr MinPlus operator*(MinPlus a, MinPlus b) {
    if (a.inf_ || b.inf_) return infinity();
    return MinPlus(a.v_ + b.v_);
  }
  friend MinPlus operator/(MinPlus a, MinPlus b) {
    if (b.inf_) throw Error(ErrorKind::NonPositiveParameter, "division by the min-plus zero");
    if (a.inf_) return a;
    return MinPlus(a.v_ - b.v_);
  }
  MinPlus& operator+=(MinPlus b) { return *this = *this + b; }
  MinPlus& operator*=(MinPlus b) { return *this = *this * b; }

  friend constexpr bool operator==(MinPlus a, MinPlus b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }

  friend std::ostream& operator<<(std::ostream& os, MinPlus m) {
    return m.inf_ ? os << "inf" : os << m.v_;
  }

 private:
  long long v_ = 0;
  bool inf_ = false;
};

template <class T>
struct Semifield;

template <>
struct Semifield<Rational> {
  static Rational one() { return Rational(1); }
  static bool admissible(const Rational& x) { return x > 0; }
};

template <>
struct Semifield<MinPlus> {
  static MinPlus one() { return MinPlus(0); }
  /// Every min-plus value is admissible; +inf plays the role of the zero
  /// boundary entries.
  static bool admissible(const MinPlus&) { return true; }
};

template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

/// Entry i (1-based) of a vector whose tail beyond its size is `one`.
template <class T>
T entry(const Vec<T>& v, int i) {
  return i >= 1 && i <= v.size() ? v(i - 1) : Semifield<T>::one();
}

template <class T>
Vec<T> padded(const Vec<T>& v, int n) {
  Vec<T> out(n);
  for (int i = 1; i <= n; ++i) out(i - 1) = entry(v, i);
  return out;
}

template <class T>
void require_admissible(const Vec<T>& v, const char* name) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!Semifield<T>::admissible(v(i)))
      throw Error(ErrorKind::NonPositiveParameter, std::string(name) + " has a non-positive entry");
}

}  // namespace troptab

namespace Eigen {

template <>
struct NumTraits<troptab::MinPlus> : GenericNumTraits<long long> {
  using Real = troptab::MinPlus;
  using NonInteger = troptab::MinPlus;
  using Nested = troptab::MinPlus;
  using Literal = troptab::MinPlus;
  enum { IsComplex = 0, IsInteger = 1, IsSigned = 1, RequireInitialization = 1,
         ReadCost = 1, AddCost = 1, MulCost = 1 };
};

}  // namespace Eigen
