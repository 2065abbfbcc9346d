#include "asmdpp/ratfun.hpp"

#include <algorithm>

#include "asmdpp/errors.hpp"

namespace asmdpp {

const MPoly& RatFun::one_den() {
  static const MPoly one(1);
  return one;
}

RatFun::RatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  // Clear the joint monomial unit so both parts are true polynomials.
  auto u = MPoly::var_union(num_, den_);
  for (const auto& v : u) {
    int m = std::min(num_.min_exp(v), den_.min_exp(v));
    if (m != 0) {
      num_ = num_.mul_var_pow(v, -m);
      den_ = den_.mul_var_pow(v, -m);
    }
  }
  if (den_.is_constant()) {
    num_ = num_ * (1 / den_.constant_value());
    den_ = MPoly(1);
    return;
  }
  MPoly g = MPoly::gcd(num_, den_);
  if (g != MPoly(1)) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  Rat f = den_.make_canonical_int();
  if (f != 1) num_ = num_ * f;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (is_polynomial() && o.is_polynomial()) {
    RatFun r;
    r.num_ = num_ + o.num_;
    return r;
  }
  if (den() == o.den()) return RatFun(num_ + o.num_, den());
  return RatFun(num_ * o.den() + o.num_ * den(), den() * o.den());
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
  if (is_zero() || o.is_zero()) return RatFun();
  if (is_polynomial() && o.is_polynomial()) {
    RatFun r;
    r.num_ = num_ * o.num_;
    return r;
  }
  return RatFun(num_ * o.num_, den() * o.den());
}

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw DivisionByZero();
  if (is_zero()) return RatFun();
  return RatFun(num_ * o.den(), den() * o.num_);
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RatFun(den(), num_);
}

RatFun RatFun::pow(long e) const {
  if (e == 0) return RatFun(1);
  if (e < 0) return inverse().pow(-e);
  RatFun acc(1), b = *this;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

Rat RatFun::eval(const std::map<std::string, Rat>& point) const {
  Rat d = den().eval(point);
  if (d == 0) throw PoleHit("denominator vanishes at evaluation point");
  return num_.eval(point) / d;
}

std::string RatFun::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den().str() + ")";
}

RatFun substitute(const MPoly& p, const std::map<std::string, RatFun>& bindings) {
  RatFun acc;
  const auto& vars = p.vars();
  for (const auto& [e, c] : p.terms()) {
    RatFun t{c};
    for (size_t k = 0; k < vars.size(); ++k) {
      if (e[k] == 0) continue;
      auto it = bindings.find(vars[k]);
      if (it == bindings.end()) {
        t *= RatFun::var(vars[k], e[k]);
      } else {
        if (it->second.is_zero() && e[k] < 0)
          throw PoleHit("negative power of zero under substitution");
        t *= it->second.pow(e[k]);
      }
    }
    acc += t;
  }
  return acc;
}

RatFun substitute(const RatFun& f, const std::map<std::string, RatFun>& bindings) {
  RatFun d = substitute(f.den(), bindings);
  if (d.is_zero()) throw PoleHit("denominator vanishes under substitution");
  return substitute(f.num(), bindings) / d;
}

}  // namespace asmdpp
