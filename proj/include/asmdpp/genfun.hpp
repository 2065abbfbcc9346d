#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "asmdpp/linalg.hpp"
#include "asmdpp/ratfun.hpp"
#include "asmdpp/series.hpp"

namespace asmdpp {

// Bivariate rational generating function f(u,v) = sum a_{i,j} u^i v^j.
// Coefficient extraction goes through nested truncated series with memoized
// expansions (transparent cache; single-threaded confinement assumed).
class BivarGF {
 public:
  BivarGF() = default;
  BivarGF(RatFun f, std::string uvar = "u", std::string vvar = "v");

  const RatFun& fun() const { return f_; }
  const std::string& uvar() const { return uvar_; }
  const std::string& vvar() const { return vvar_; }

  RatFun coeff(int i, int j) const;

 private:
  RatFun f_;
  std::string uvar_ = "u", vvar_ = "v";
  struct Cache {
    GradedSeries useries;            // expansion in uvar, coeffs rational in vvar
    bool have = false;
    std::map<int, GradedSeries> vrows;  // per-i expansion of the u^i coefficient
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Infinite matrix presented by a generating function, an explicit entry rule,
// or a base matrix with finitely many patched columns.
class InfMatrix {
 public:
  using Rule = std::function<RatFun(int, int)>;
  using ColRule = std::function<RatFun(int)>;

  static InfMatrix from_gf(RatFun f, std::string uvar = "u", std::string vvar = "v");
  static InfMatrix from_rule(Rule rule);
  InfMatrix with_patched_column(int j, ColRule col) const;

  RatFun entry(int i, int j) const;
  Mat<RatFun> truncate(int n) const;

  bool has_gf() const { return has_gf_; }
  const BivarGF& gf() const;

 private:
  BivarGF gf_;
  bool has_gf_ = false;
  Rule rule_;
  std::map<int, ColRule> patches_;
};

// Structured families L, U, S, T, I of Appendix A.2 with closed-form entries
// and product algebra (contour-integral identities propone..propseven).
struct StructParams {
  enum class Family { L, U, S, T, I };
  Family family = Family::I;
  RatFun alpha, beta, gamma;  // L/U use alpha,beta; T uses all three
  RatFun prefactor = RatFun(1);

  static StructParams L(RatFun a, RatFun b);
  static StructParams U(RatFun a, RatFun b);
  static StructParams S();
  static StructParams T(RatFun a, RatFun b, RatFun c);
  static StructParams I();

  RatFun gf(const std::string& u = "u", const std::string& v = "v") const;
  RatFun entry(int i, int j) const;  // prefactor included
  Mat<RatFun> truncate(int n) const;
  InfMatrix matrix() const;
  StructParams as_T() const;  // L(a,b)=T(b,0,ab), U(a,b)=T(0,b,ab), I=T(0,0,1)
  StructParams transpose() const;
  bool lower_triangular() const;
  bool upper_triangular() const;
};

// Product in closed form (propsix as the general engine; the triangular
// special cases propone/proptwo/propfour/propfive are consequences).
// Throws DegenerateParameters when 1 - beta*alpha' vanishes identically.
StructParams structured_product(const StructParams& p, const StructParams& q);

// Closed-form inverse (propthree for L/U, propseven for T).
StructParams structured_inverse(const StructParams& p);

// Declared valuation contract for graded infinite-matrix products:
//   Total:    val(a_{i,j}) >= i+j   (epsilon-convention / g-grading)
//   Diagonal: val(a_{i,j}) >= |i-j| (alpha-grading of T_{s,t})
enum class Grading { Total, Diagonal };

// Entry (i,j) of A*B correct to gvar-order N, as the polynomial truncation of
// the series. The summation over k is cut off via the declared valuation;
// every consumed entry is checked against the contract (GradingViolation).
InfMatrix graded_product(const InfMatrix& a, const InfMatrix& b, const std::string& gvar,
                         int order, Grading grading);

// Truncation of the declared-valuation series of a single entry (helper used
// by graded_product and the commutator checks).
RatFun series_truncate(const RatFun& f, const std::string& gvar, int order);

}  // namespace asmdpp
