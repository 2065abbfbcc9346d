#include "asmdpp/nu.hpp"

#include "asmdpp/errors.hpp"

namespace asmdpp {

const RatFun& NuElem::root_sum() {
  static const RatFun s = RatFun(MPoly::var("x") + MPoly::var("y") - MPoly(1), MPoly::var("x"));
  return s;
}

const RatFun& NuElem::root_prod() {
  static const RatFun p = RatFun(MPoly::var("y"), MPoly::var("x"));
  return p;
}

NuElem NuElem::operator*(const NuElem& o) const {
  // (a0 + a1 nu)(b0 + b1 nu), nu^2 = sigma nu - tau
  RatFun q = a1_ * o.a1_;
  RatFun c0 = a0_ * o.a0_;
  RatFun c1 = a0_ * o.a1_ + a1_ * o.a0_;
  if (!q.is_zero()) {
    c0 -= q * root_prod();
    c1 += q * root_sum();
  }
  return NuElem(std::move(c0), std::move(c1));
}

NuElem NuElem::conj() const { return NuElem(a0_ + a1_ * root_sum(), -a1_); }

RatFun NuElem::norm() const {
  return a0_ * a0_ + a0_ * a1_ * root_sum() + a1_ * a1_ * root_prod();
}

NuElem NuElem::inverse() const {
  RatFun n = norm();
  if (n.is_zero()) throw DivisionByZero("NuElem with vanishing norm has no inverse");
  NuElem c = conj();
  return NuElem(c.a0() / n, c.a1() / n);
}

NuElem NuElem::pow(long e) const {
  if (e == 0) return NuElem(1);
  if (e < 0) return inverse().pow(-e);
  NuElem acc(1), b = *this;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

Rat NuElem::eval(const Rat& nu0, const std::map<std::string, Rat>& point) const {
  return a0_.eval(point) + a1_.eval(point) * nu0;
}

std::string NuElem::str() const {
  if (a1_.is_zero()) return a0_.str();
  return "(" + a0_.str() + ") + (" + a1_.str() + ")*nu";
}

}  // namespace asmdpp
