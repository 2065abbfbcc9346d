#pragma once

#include <map>
#include <string>
#include <vector>

#include "asmdpp/rational.hpp"

namespace asmdpp {

// Sparse multivariate Laurent polynomial over Rat.
//
// Canonical form: the variable list is sorted, contains exactly the variables
// that occur with nonzero exponent, and terms are keyed by exponent vectors
// (lexicographic map order). No stored coefficient is zero.
class MPoly {
 public:
  using Exps = std::vector<int>;
  using TermMap = std::map<Exps, Rat>;

  MPoly() = default;  // zero
  MPoly(long c);
  explicit MPoly(const Rat& c);
  static MPoly var(const std::string& name, int exp = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  // Requires is_constant().
  Rat constant_value() const;
  bool uses_var(const std::string& v) const;
  size_t term_count() const { return terms_.size(); }

  bool operator==(const MPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly operator*(const Rat& c) const;

  // Nonnegative exponents always work; negative ones require a single-term
  // operand (a unit of the Laurent ring).
  MPoly pow(long e) const;

  // Exact division; throws InexactDivision if the quotient is not a Laurent
  // polynomial, DivisionByZero on zero divisor.
  MPoly exact_div(const MPoly& d) const;

  // Polynomial gcd (monomial factors included), normalized to coprime integer
  // coefficients with positive lex-leading coefficient.
  static MPoly gcd(const MPoly& a, const MPoly& b);

  // Structure with respect to one variable.
  int degree(const std::string& v) const;   // max exponent; 0 if absent
  int min_exp(const std::string& v) const;  // min exponent; 0 if absent
  std::map<int, MPoly> coeffs_in(const std::string& v) const;
  static MPoly from_coeffs(const std::string& v, const std::map<int, MPoly>& cs);
  MPoly mul_var_pow(const std::string& v, int e) const;

  // Multiply by the rational that makes coefficients coprime integers with the
  // lex-leading one positive; returns the applied factor.
  Rat make_canonical_int();
  const Rat& lex_leading_coeff() const;

  // Exact evaluation at rational points (all used variables must be bound).
  Rat eval(const std::map<std::string, Rat>& point) const;

  std::string str() const;
  static MPoly parse(const std::string& s);

  // Reinterpret over a variable superset (sorted, containing vars_).
  MPoly with_vars(const std::vector<std::string>& superset) const;
  static std::vector<std::string> var_union(const MPoly& a, const MPoly& b);

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  void normalize();  // drop zero terms, prune unused vars
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

MPoly mpoly_binomial(long n, long k);  // C(n,k) as a constant (0 if k<0 or k>n)
Rat rat_binomial(long n, long k);

}  // namespace asmdpp
