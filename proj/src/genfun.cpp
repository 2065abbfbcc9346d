#include "asmdpp/genfun.hpp"

#include <cstdlib>

#include "asmdpp/errors.hpp"

namespace asmdpp {

BivarGF::BivarGF(RatFun f, std::string uvar, std::string vvar)
    : f_(std::move(f)), uvar_(std::move(uvar)), vvar_(std::move(vvar)) {}

RatFun BivarGF::coeff(int i, int j) const {
  if (i < 0 || j < 0) return RatFun();
  Cache& c = *cache_;
  if (!c.have || c.useries.order() < i) {
    c.useries = series_from_ratfun(f_, uvar_, i);
    c.have = true;
    c.vrows.clear();
  }
  auto it = c.vrows.find(i);
  if (it == c.vrows.end() || it->second.order() < j) {
    it = c.vrows.insert_or_assign(i, series_from_ratfun(c.useries.coeff(i), vvar_, j)).first;
  }
  return it->second.coeff(j);
}

InfMatrix InfMatrix::from_gf(RatFun f, std::string uvar, std::string vvar) {
  InfMatrix m;
  m.gf_ = BivarGF(std::move(f), std::move(uvar), std::move(vvar));
  m.has_gf_ = true;
  return m;
}

InfMatrix InfMatrix::from_rule(Rule rule) {
  InfMatrix m;
  m.rule_ = std::move(rule);
  return m;
}

InfMatrix InfMatrix::with_patched_column(int j, ColRule col) const {
  InfMatrix m = *this;
  m.patches_[j] = std::move(col);
  return m;
}

RatFun InfMatrix::entry(int i, int j) const {
  auto p = patches_.find(j);
  if (p != patches_.end()) return p->second(i);
  if (has_gf_) return gf_.coeff(i, j);
  if (!rule_) throw InvalidObject("entry of a default-constructed InfMatrix");
  return rule_(i, j);
}

Mat<RatFun> InfMatrix::truncate(int n) const {
  Mat<RatFun> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = entry(i, j);
  return m;
}

const BivarGF& InfMatrix::gf() const {
  if (!has_gf_) throw InvalidObject("matrix is not backed by a generating function");
  return gf_;
}

StructParams StructParams::L(RatFun a, RatFun b) {
  return {Family::L, std::move(a), std::move(b), RatFun(), RatFun(1)};
}
StructParams StructParams::U(RatFun a, RatFun b) {
  return {Family::U, std::move(a), std::move(b), RatFun(), RatFun(1)};
}
StructParams StructParams::S() { return {Family::S, RatFun(), RatFun(), RatFun(), RatFun(1)}; }
StructParams StructParams::T(RatFun a, RatFun b, RatFun c) {
  return {Family::T, std::move(a), std::move(b), std::move(c), RatFun(1)};
}
StructParams StructParams::I() { return {Family::I, RatFun(), RatFun(), RatFun(), RatFun(1)}; }

RatFun StructParams::gf(const std::string& uv, const std::string& vv) const {
  RatFun u = RatFun::var(uv), v = RatFun::var(vv), one(1);
  RatFun f;
  switch (family) {
    case Family::L:
      f = one / (one - beta * u * (one + alpha * v));
      break;
    case Family::U:
      f = one / (one - beta * v * (one + alpha * u));
      break;
    case Family::S:
      f = u / (one - u * v);
      break;
    case Family::T:
      f = one / (one - alpha * u - beta * v - gamma * u * v);
      break;
    case Family::I:
      f = one / (one - u * v);
      break;
  }
  return prefactor * f;
}

RatFun StructParams::entry(int i, int j) const {
  RatFun e;
  switch (family) {
    case Family::L:
      if (j <= i) e = RatFun(mpoly_binomial(i, j)) * beta.pow(i) * alpha.pow(j);
      break;
    case Family::U:
      if (i <= j) e = RatFun(mpoly_binomial(j, i)) * alpha.pow(i) * beta.pow(j);
      break;
    case Family::S:
      if (i == j + 1) e = RatFun(1);
      break;
    case Family::T: {
      RatFun s = alpha * beta + gamma;
      for (int k = 0; k <= std::min(i, j); ++k)
        e += RatFun(mpoly_binomial(i, k) * mpoly_binomial(j, k)) * alpha.pow(i - k) *
             beta.pow(j - k) * s.pow(k);
      break;
    }
    case Family::I:
      if (i == j) e = RatFun(1);
      break;
  }
  return prefactor * e;
}

Mat<RatFun> StructParams::truncate(int n) const {
  Mat<RatFun> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = entry(i, j);
  return m;
}

InfMatrix StructParams::matrix() const {
  StructParams p = *this;
  return InfMatrix::from_rule([p](int i, int j) { return p.entry(i, j); });
}

StructParams StructParams::as_T() const {
  StructParams t = *this;
  switch (family) {
    case Family::L:
      t = T(beta, RatFun(), alpha * beta);
      break;
    case Family::U:
      t = T(RatFun(), beta, alpha * beta);
      break;
    case Family::I:
      t = T(RatFun(), RatFun(), RatFun(1));
      break;
    case Family::T:
      return *this;
    case Family::S:
      throw InvalidObject("S is not a member of the T family");
  }
  t.prefactor = prefactor;
  return t;
}

StructParams StructParams::transpose() const {
  StructParams t = *this;
  switch (family) {
    case Family::L:
      t.family = Family::U;
      break;
    case Family::U:
      t.family = Family::L;
      break;
    case Family::T:
      std::swap(t.alpha, t.beta);
      break;
    case Family::S:
      throw InvalidObject("transpose of S leaves the structured families");
    case Family::I:
      break;
  }
  return t;
}

bool StructParams::lower_triangular() const {
  return family == Family::L || family == Family::I || family == Family::S ||
         (family == Family::T && beta.is_zero());
}
bool StructParams::upper_triangular() const {
  return family == Family::U || family == Family::I ||
         (family == Family::T && alpha.is_zero());
}

StructParams structured_product(const StructParams& p, const StructParams& q) {
  StructParams a = p.as_T(), b = q.as_T();
  RatFun d = RatFun(1) - a.beta * b.alpha;
  if (d.is_zero()) throw DegenerateParameters("1 - beta*alpha' vanishes in structured product");
  StructParams r = StructParams::T((a.alpha + a.gamma * b.alpha) / d,
                                   (b.beta + b.gamma * a.beta) / d,
                                   (a.gamma * b.gamma - a.alpha * b.beta) / d);
  r.prefactor = a.prefactor * b.prefactor / d;
  if (r.alpha.is_zero() && r.beta.is_zero() && r.gamma == RatFun(1)) {
    StructParams id = StructParams::I();
    id.prefactor = r.prefactor;
    return id;
  }
  return r;
}

StructParams structured_inverse(const StructParams& p) {
  switch (p.family) {
    case StructParams::Family::L:
    case StructParams::Family::U: {
      if (p.alpha.is_zero() || p.beta.is_zero())
        throw DegenerateParameters("L/U inverse needs nonzero alpha, beta");
      StructParams r = p;
      r.alpha = -p.beta.inverse();
      r.beta = -p.alpha.inverse();
      r.prefactor = p.prefactor.inverse();
      return r;
    }
    case StructParams::Family::T: {
      if (p.gamma.is_zero()) throw DegenerateParameters("T inverse needs nonzero gamma");
      RatFun d = p.alpha * p.beta + p.gamma;
      if (d.is_zero()) throw DegenerateParameters("T inverse needs alpha*beta + gamma nonzero");
      StructParams r = StructParams::T(-p.alpha / p.gamma, -p.beta / p.gamma, p.gamma.inverse());
      r.prefactor = (d / p.gamma) / p.prefactor;
      return r;
    }
    case StructParams::Family::I: {
      StructParams r = p;
      r.prefactor = p.prefactor.inverse();
      return r;
    }
    case StructParams::Family::S:
      throw InvalidObject("S is not invertible");
  }
  throw InvalidObject("unreachable");
}

RatFun series_truncate(const RatFun& f, const std::string& gvar, int order) {
  GradedSeries s = series_from_ratfun(f, gvar, order);
  RatFun acc;
  RatFun g = RatFun::var(gvar);
  for (int k = order; k >= 0; --k) acc = acc * g + s.coeff(k);
  return acc;
}

namespace {

int declared_valuation(Grading grading, int i, int j) {
  return grading == Grading::Total ? i + j : std::abs(i - j);
}

GradedSeries checked_series(const InfMatrix& m, int i, int j, const std::string& gvar, int order,
                            Grading grading) {
  GradedSeries s = series_from_ratfun(m.entry(i, j), gvar, order);
  int bound = declared_valuation(grading, i, j);
  if (s.valuation() < std::min(bound, order + 1))
    throw GradingViolation("entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") violates the declared valuation");
  return s;
}

}  // namespace

InfMatrix graded_product(const InfMatrix& a, const InfMatrix& b, const std::string& gvar,
                         int order, Grading grading) {
  return InfMatrix::from_rule([a, b, gvar, order, grading](int i, int j) -> RatFun {
    // a_{ik} b_{kj} has valuation >= the summed declared bounds; cut off k
    // once that exceeds the requested order.
    int kmax;
    if (grading == Grading::Total) {
      if (i + j > order) return RatFun();
      kmax = (order - i - j) / 2;
    } else {
      kmax = (order + i + j) / 2;
    }
    GradedSeries acc(gvar, order);
    for (int k = 0; k <= kmax; ++k) {
      GradedSeries sa = checked_series(a, i, k, gvar, order, grading);
      if (sa.is_zero()) continue;
      GradedSeries sb = checked_series(b, k, j, gvar, order, grading);
      acc += sa * sb;
    }
    RatFun out;
    RatFun g = RatFun::var(gvar);
    for (int k = order; k >= 0; --k) out = out * g + acc.coeff(k);
    return out;
  });
}

}  // namespace asmdpp
