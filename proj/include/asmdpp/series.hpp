#pragma once

#include <string>
#include <vector>

#include "asmdpp/errors.hpp"
#include "asmdpp/nu.hpp"
#include "asmdpp/ratfun.hpp"

namespace asmdpp {

template <class C>
C ring_inverse(const C& c) {
  return c.inverse();
}
inline Rat ring_inverse(const Rat& c) {
  if (c == 0) throw DivisionByZero();
  return 1 / c;
}

// Truncated formal power series in one grading variable; coefficients live in
// an exact coefficient ring (RatFun, NuElem, Rat, or a nested Series).
template <class C>
class Series {
 public:
  Series() = default;
  Series(std::string gvar, int order) : gvar_(std::move(gvar)), order_(order), c_(order + 1) {}
  Series(std::string gvar, int order, std::vector<C> coeffs)
      : gvar_(std::move(gvar)), order_(order), c_(std::move(coeffs)) {
    c_.resize(order_ + 1);
  }
  static Series constant(const C& v, const std::string& gvar, int order) {
    Series s(gvar, order);
    s.c_[0] = v;
    return s;
  }
  static Series variable(const std::string& gvar, int order) {
    Series s(gvar, order);
    if (order >= 1) s.c_[1] = C(1);
    return s;
  }

  const std::string& gvar() const { return gvar_; }
  int order() const { return order_; }
  const C& coeff(int k) const {
    if (k < 0 || k > order_) throw IndexOutOfRange("series coefficient beyond truncation order");
    return c_[k];
  }
  C& coeff_ref(int k) { return c_[k]; }
  const std::vector<C>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!(x == C())) return false;
    return true;
  }
  bool operator==(const Series& o) const {
    int n = std::min(order_, o.order_);
    for (int k = 0; k <= n; ++k)
      if (!(c_[k] == o.c_[k])) return false;
    return true;
  }

  Series truncated(int new_order) const {
    Series s(gvar_, std::min(new_order, order_));
    for (int k = 0; k <= s.order_; ++k) s.c_[k] = c_[k];
    return s;
  }

  Series operator-() const {
    Series s = *this;
    for (auto& x : s.c_) x = -x;
    return s;
  }
  Series operator+(const Series& o) const {
    Series s(gvar_, std::min(order_, o.order_));
    for (int k = 0; k <= s.order_; ++k) s.c_[k] = c_[k] + o.c_[k];
    return s;
  }
  Series operator-(const Series& o) const { return *this + (-o); }
  Series operator*(const Series& o) const {
    Series s(gvar_, std::min(order_, o.order_));
    for (int i = 0; i <= s.order_; ++i)
      for (int j = 0; i + j <= s.order_ && j <= o.order_; ++j)
        s.c_[i + j] += c_[i] * o.c_[j];
    return s;
  }
  Series operator*(const C& v) const {
    Series s = *this;
    for (auto& x : s.c_) x = x * v;
    return s;
  }
  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  // Multiplicative inverse; requires an invertible constant coefficient.
  Series inverse() const {
    C d0inv = ring_inverse(c_[0]);
    Series s(gvar_, order_);
    s.c_[0] = d0inv;
    for (int k = 1; k <= order_; ++k) {
      C acc{};
      for (int j = 1; j <= k; ++j) acc += c_[j] * s.c_[k - j];
      s.c_[k] = -(d0inv * acc);
    }
    return s;
  }
  Series operator/(const Series& o) const { return *this * o.inverse(); }

  Series pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Series acc = constant(C(1), gvar_, order_), b = *this;
    while (e > 0) {
      if (e & 1) acc *= b;
      b *= b;
      e >>= 1;
    }
    return acc;
  }

  // Valuation (index of first nonzero coefficient); order_+1 when zero.
  int valuation() const {
    for (int k = 0; k <= order_; ++k)
      if (!(c_[k] == C())) return k;
    return order_ + 1;
  }

 private:
  std::string gvar_;
  int order_ = 0;
  std::vector<C> c_{C{}};
};

using GradedSeries = Series<RatFun>;

// Taylor coefficients 0..order of f in gvar; the remaining variables ride
// along inside the RatFun coefficients. Throws NotExpandable when the
// denominator's constant term in gvar vanishes.
GradedSeries series_from_ratfun(const RatFun& f, const std::string& gvar, int order);

// exp(arg) as a truncated series; arg must have zero constant term.
template <class C>
Series<C> series_exp(const Series<C>& arg) {
  if (!(arg.coeff(0) == C()))
    throw NotExpandable("series_exp needs vanishing constant term");
  Series<C> acc = Series<C>::constant(C(1), arg.gvar(), arg.order());
  Series<C> pw = acc;
  Rat fact(1);
  for (int k = 1; k <= arg.order(); ++k) {
    pw *= arg;
    fact /= k;
    acc += pw * C(fact);
  }
  return acc;
}

}  // namespace asmdpp
