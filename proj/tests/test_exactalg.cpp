#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "asmdpp/mpoly.hpp"
#include "asmdpp/nu.hpp"
#include "asmdpp/ratfun.hpp"
#include "asmdpp/series.hpp"

using namespace asmdpp;

namespace {

MPoly X() { return MPoly::var("x"); }
MPoly Y() { return MPoly::var("y"); }

MPoly random_poly(std::mt19937& rng, int nterms = 3) {
  std::uniform_int_distribution<int> e(0, 3), c(-4, 4);
  MPoly p;
  for (int t = 0; t < nterms; ++t)
    p += MPoly(c(rng)) * MPoly::var("x", e(rng)) * MPoly::var("y", e(rng));
  return p;
}

}  // namespace

TEST_CASE("mpoly basic arithmetic") {
  CHECK((X() + Y()) * (X() - Y()) == X() * X() - Y() * Y());
  CHECK(MPoly::parse("x^2 - y^2") == (X() - Y()) * (X() + Y()));
  CHECK(MPoly(0).is_zero());
  CHECK((X() - X()).is_zero());
  CHECK(MPoly::parse("1/2*x + 1/2*x") == MPoly::parse("x"));
}

TEST_CASE("mpoly ring axioms (randomized)") {
  std::mt19937 rng(12345);
  for (int it = 0; it < 40; ++it) {
    MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + MPoly() == a);
    CHECK(a * MPoly(1) == a);
  }
}

TEST_CASE("mpoly laurent powers") {
  MPoly m = MPoly::var("x", -2) * MPoly::var("y", 1);
  CHECK(m.pow(-1) == MPoly::var("x", 2) * MPoly::var("y", -1));
  CHECK(m * m.pow(-1) == MPoly(1));
  CHECK_THROWS_AS((X() + Y()).pow(-1), InexactDivision);
}

TEST_CASE("mpoly exact division and gcd") {
  MPoly p = (X() + Y()) * (X() - Y());
  CHECK(p.exact_div(X() - Y()) == X() + Y());
  CHECK_THROWS_AS(p.exact_div(X() + MPoly(1)), InexactDivision);
  CHECK_THROWS_AS(p.exact_div(MPoly()), DivisionByZero);

  MPoly a = (X() + Y()) * (X() + MPoly(1)) * MPoly(6);
  MPoly b = (X() + Y()) * (Y() + MPoly(2)) * MPoly(4);
  CHECK(MPoly::gcd(a, b) == X() + Y());
  // monomial content participates in the gcd
  MPoly am = a * MPoly::var("x", 2);
  MPoly bm = b * MPoly::var("x", 3) * Y();
  CHECK(MPoly::gcd(am, bm) == (X() + Y()) * MPoly::var("x", 2));
  CHECK(MPoly::gcd(MPoly(), b) == b * MPoly(Rat(1, 4)));
}

TEST_CASE("mpoly parse/str round trip") {
  std::mt19937 rng(999);
  for (int it = 0; it < 25; ++it) {
    MPoly p = random_poly(rng, 4);
    CHECK(MPoly::parse(p.str()) == p);
  }
  MPoly q = MPoly::parse("3/2*x^-1*y^2 - 1 + x");
  CHECK(MPoly::parse(q.str()) == q);
}

TEST_CASE("mpoly structure and eval") {
  MPoly p = X() * X() * Y() + X() * MPoly(2) + MPoly(5);
  CHECK(p.degree("x") == 2);
  CHECK(p.degree("z") == 0);
  auto cs = p.coeffs_in("x");
  CHECK(cs.at(2) == Y());
  CHECK(cs.at(0) == MPoly(5));
  CHECK(MPoly::from_coeffs("x", cs) == p);
  CHECK(p.eval({{"x", Rat(2)}, {"y", Rat(3)}}) == Rat(21));
}

TEST_CASE("ratfun canonicalization") {
  RatFun f(X() * X() - Y() * Y(), X() - Y());
  CHECK(f.is_polynomial());
  CHECK(f.num() == X() + Y());

  RatFun g = RatFun(1) / RatFun::var("x") + RatFun(1) / RatFun::var("y");
  CHECK(g == RatFun(X() + Y(), X() * Y()));

  // denominator normalized to coprime integer coefficients, positive leading
  RatFun h(Y(), X() * MPoly(Rat(-2, 3)));
  CHECK(h.den() == X());
  CHECK(h.num() == Y() * MPoly(Rat(-3, 2)));

  CHECK_THROWS_AS(RatFun(X(), MPoly()), DivisionByZero);
  CHECK_THROWS_AS(RatFun(1) / RatFun(), DivisionByZero);
}

TEST_CASE("ratfun field axioms (randomized)") {
  std::mt19937 rng(777);
  for (int it = 0; it < 15; ++it) {
    MPoly pn = random_poly(rng), pd = random_poly(rng);
    MPoly qn = random_poly(rng), qd = random_poly(rng);
    if (pd.is_zero() || qd.is_zero() || pn.is_zero()) continue;
    RatFun p(pn, pd), q(qn, qd);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK(p * p.inverse() == RatFun(1));
    CHECK((p + q) - q == p);
    if (!q.is_zero()) CHECK((p / q) * q == p);
  }
}

TEST_CASE("ratfun eval and substitution") {
  RatFun f(X() + Y(), X() - Y());
  CHECK(f.eval({{"x", Rat(3)}, {"y", Rat(1)}}) == Rat(2));
  CHECK_THROWS_AS(f.eval({{"x", Rat(1)}, {"y", Rat(1)}}), PoleHit);

  RatFun g = substitute(f, {{"y", RatFun(MPoly(1) - X())}});
  CHECK(g == RatFun(MPoly(1), X() * MPoly(2) - MPoly(1)));

  // partial binding keeps unbound variables symbolic
  RatFun h = substitute(X() * Y(), {{"x", RatFun(2)}});
  CHECK(h == RatFun(Y() * MPoly(2)));
}

TEST_CASE("nu reduction and conjugation") {
  NuElem nu = NuElem::nu();
  NuElem nu2 = nu * nu;
  CHECK(nu2.a1() == NuElem::root_sum());
  CHECK(nu2.a0() == -NuElem::root_prod());

  CHECK(nu * nu.conj() == NuElem(NuElem::root_prod()));
  CHECK(nu + nu.conj() == NuElem(NuElem::root_sum()));
  CHECK(nu.norm() == NuElem::root_prod());
  CHECK(nu.inverse() * nu == NuElem(1));
  CHECK_THROWS_AS(NuElem().inverse(), DivisionByZero);
}

TEST_CASE("nu computations commute with root choice") {
  // x=1/2, y=3 makes the defining quadratic split with roots 2 and 3
  std::map<std::string, Rat> pt{{"x", Rat(1, 2)}, {"y", Rat(3)}};
  CHECK(NuElem::root_sum().eval(pt) == Rat(5));
  CHECK(NuElem::root_prod().eval(pt) == Rat(6));
  NuElem e = (NuElem::nu() * NuElem::nu() + NuElem(2)) * NuElem::nu().inverse();
  for (Rat nu0 : {Rat(2), Rat(3)}) {
    CHECK(nu0 * nu0 == Rat(5) * nu0 - Rat(6));
    CHECK(e.eval(nu0, pt) == (nu0 * nu0 + 2) / nu0);
  }
  NuElem p5 = NuElem::nu().pow(5);
  for (Rat nu0 : {Rat(2), Rat(3)})
    CHECK(p5.eval(nu0, pt) == nu0 * nu0 * nu0 * nu0 * nu0);
}

TEST_CASE("series expansion of rational functions") {
  RatFun geo(MPoly(1), MPoly(1) - MPoly::var("g"));
  GradedSeries s = series_from_ratfun(geo, "g", 6);
  for (int k = 0; k <= 6; ++k) CHECK(s.coeff(k) == RatFun(1));

  RatFun f(MPoly(1), MPoly(1) - X() * MPoly::var("g"));
  GradedSeries t = series_from_ratfun(f, "g", 5);
  for (int k = 0; k <= 5; ++k) CHECK(t.coeff(k) == RatFun(X().pow(k)));

  // positive valuation: g/(1-g)^2 = g + 2g^2 + 3g^3 + ...
  MPoly g = MPoly::var("g");
  GradedSeries u = series_from_ratfun(RatFun(g, (MPoly(1) - g) * (MPoly(1) - g)), "g", 5);
  CHECK(u.coeff(0) == RatFun());
  for (int k = 1; k <= 5; ++k) CHECK(u.coeff(k) == RatFun(long(k)));

  CHECK_THROWS_AS(series_from_ratfun(RatFun(MPoly(1), g), "g", 3), NotExpandable);
  CHECK_THROWS_AS(series_from_ratfun(RatFun(MPoly(1), g - g * g), "g", 3), NotExpandable);
}

TEST_CASE("series ring operations") {
  RatFun geo(MPoly(1), MPoly(1) - MPoly::var("g"));
  GradedSeries s = series_from_ratfun(geo, "g", 8);
  GradedSeries one = GradedSeries::constant(RatFun(1), "g", 8);
  CHECK(s * s.inverse() == one);
  CHECK(s.inverse() == one - GradedSeries::variable("g", 8));
  CHECK((s - one).valuation() == 1);

  GradedSeries gv = GradedSeries::variable("g", 8);
  GradedSeries eg = series_exp(gv);
  CHECK(eg.coeff(3) == RatFun(Rat(1, 6)));
  CHECK(eg * series_exp(-gv) == one);
  CHECK_THROWS_AS(series_exp(one), NotExpandable);

  // order of a product is the min of the operand orders
  CHECK((s.truncated(4) * s).order() == 4);
}
