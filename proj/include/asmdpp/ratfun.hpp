#pragma once

#include <map>
#include <string>

#include "asmdpp/mpoly.hpp"

namespace asmdpp {

// Normalized rational function: gcd(num, den) a unit, den a polynomial with
// coprime integer coefficients and positive lex-leading coefficient. The
// canonical representative is unique, so structural equality is semantic
// equality.
class RatFun {
 public:
  RatFun() = default;  // zero
  RatFun(long c) : num_(c), den_(1) {}
  explicit RatFun(const Rat& c) : num_(c), den_(1) {}
  RatFun(const MPoly& p) : num_(p), den_(1) {}
  RatFun(MPoly num, MPoly den);
  static RatFun var(const std::string& name, int exp = 1) { return RatFun(MPoly::var(name, exp)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_.is_zero() ? one_den() : den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den() == MPoly(1); }
  bool is_constant() const { return num_.is_constant() && is_polynomial(); }
  Rat constant_value() const { return num_.constant_value(); }

  bool operator==(const RatFun& o) const { return num_ == o.num_ && den() == o.den(); }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  RatFun operator-() const;
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;  // DivisionByZero on zero divisor
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  RatFun inverse() const;
  RatFun pow(long e) const;

  // Exact evaluation; throws PoleHit if the denominator vanishes.
  Rat eval(const std::map<std::string, Rat>& point) const;

  std::string str() const;

 private:
  MPoly num_;        // zero polynomial iff the function is zero
  MPoly den_ = MPoly(1);

  static const MPoly& one_den();
  void normalize();
};

inline RatFun operator*(const Rat& c, const RatFun& f) { return RatFun(c) * f; }

// Substitution var -> RatFun; unbound variables stay symbolic. Throws PoleHit
// when a denominator vanishes identically under the binding.
RatFun substitute(const MPoly& p, const std::map<std::string, RatFun>& bindings);
RatFun substitute(const RatFun& f, const std::map<std::string, RatFun>& bindings);

}  // namespace asmdpp
