#pragma once

#include "asmdpp/ratfun.hpp"

namespace asmdpp {

// Element a0 + a1*nu of RatFun(x,y,...)[nu] / (x nu(1-nu) = nu + y(1-nu)),
// i.e. nu^2 = sigma*nu - tau with sigma = (x+y-1)/x and tau = y/x. The
// reduction is applied eagerly, so the degree in nu never exceeds 1.
class NuElem {
 public:
  NuElem() = default;  // zero
  NuElem(long c) : a0_(c) {}
  explicit NuElem(const Rat& c) : a0_(c) {}
  NuElem(RatFun a0) : a0_(std::move(a0)) {}
  NuElem(RatFun a0, RatFun a1) : a0_(std::move(a0)), a1_(std::move(a1)) {}
  static NuElem nu() { return NuElem(RatFun(0), RatFun(1)); }

  // sum and product of the two roots of the defining quadratic
  static const RatFun& root_sum();
  static const RatFun& root_prod();

  const RatFun& a0() const { return a0_; }
  const RatFun& a1() const { return a1_; }
  bool is_zero() const { return a0_.is_zero() && a1_.is_zero(); }
  bool nu_free() const { return a1_.is_zero(); }

  bool operator==(const NuElem& o) const { return a0_ == o.a0_ && a1_ == o.a1_; }
  bool operator!=(const NuElem& o) const { return !(*this == o); }

  NuElem operator-() const { return NuElem(-a0_, -a1_); }
  NuElem operator+(const NuElem& o) const { return NuElem(a0_ + o.a0_, a1_ + o.a1_); }
  NuElem operator-(const NuElem& o) const { return NuElem(a0_ - o.a0_, a1_ - o.a1_); }
  NuElem operator*(const NuElem& o) const;
  NuElem& operator+=(const NuElem& o) { return *this = *this + o; }
  NuElem& operator-=(const NuElem& o) { return *this = *this - o; }
  NuElem& operator*=(const NuElem& o) { return *this = *this * o; }

  // Conjugate a0 + a1*(sigma - nu) and rational norm (this * conj).
  NuElem conj() const;
  RatFun norm() const;

  // Inverse via the conjugate; throws DivisionByZero when the norm vanishes
  // identically (the element is a zero divisor or zero).
  NuElem inverse() const;
  NuElem operator/(const NuElem& o) const { return *this * o.inverse(); }
  NuElem pow(long e) const;

  // Evaluation with nu bound to an explicit rational root nu0 of the defining
  // equation at the bound (x, y); used to certify root-independence.
  Rat eval(const Rat& nu0, const std::map<std::string, Rat>& point) const;

  std::string str() const;

 private:
  RatFun a0_, a1_;
};

inline NuElem operator*(const RatFun& c, const NuElem& e) { return NuElem(c) * e; }

}  // namespace asmdpp
