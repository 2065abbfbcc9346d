#include "asmdpp/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

#include "asmdpp/errors.hpp"

namespace asmdpp {

MPoly::MPoly(long c) {
  if (c != 0) terms_[{}] = Rat(c);
}

MPoly::MPoly(const Rat& c) {
  if (c != 0) terms_[{}] = c;
}

MPoly MPoly::var(const std::string& name, int exp) {
  MPoly p;
  if (exp == 0) return MPoly(1);
  p.vars_ = {name};
  p.terms_[{exp}] = Rat(1);
  return p;
}

Rat MPoly::constant_value() const {
  if (is_zero()) return Rat(0);
  if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

bool MPoly::uses_var(const std::string& v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

void MPoly::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
  // prune variables with exponent 0 everywhere
  const size_t n = vars_.size();
  std::vector<bool> used(n, false);
  for (const auto& [e, c] : terms_)
    for (size_t k = 0; k < n; ++k)
      if (e[k] != 0) used[k] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> nv;
  for (size_t k = 0; k < n; ++k)
    if (used[k]) nv.push_back(vars_[k]);
  TermMap nt;
  for (const auto& [e, c] : terms_) {
    Exps ne;
    ne.reserve(nv.size());
    for (size_t k = 0; k < n; ++k)
      if (used[k]) ne.push_back(e[k]);
    nt[std::move(ne)] = c;
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

MPoly MPoly::with_vars(const std::vector<std::string>& superset) const {
  MPoly r;
  r.vars_ = superset;
  const size_t m = superset.size();
  std::vector<size_t> pos(vars_.size());
  for (size_t k = 0, j = 0; k < vars_.size(); ++k) {
    while (j < m && superset[j] != vars_[k]) ++j;
    assert(j < m);
    pos[k] = j;
  }
  for (const auto& [e, c] : terms_) {
    Exps ne(m, 0);
    for (size_t k = 0; k < vars_.size(); ++k) ne[pos[k]] = e[k];
    r.terms_[std::move(ne)] = c;
  }
  return r;
}

std::vector<std::string> MPoly::var_union(const MPoly& a, const MPoly& b) {
  std::vector<std::string> u;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(u));
  return u;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  if (vars_ != o.vars_) {
    auto u = var_union(*this, o);
    return with_vars(u) + o.with_vars(u);
  }
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) {
    auto [it, fresh] = r.terms_.emplace(e, c);
    if (!fresh) it->second += c;
  }
  r.normalize();
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  if (is_zero() || o.is_zero()) return MPoly();
  if (vars_ != o.vars_) {
    auto u = var_union(*this, o);
    return with_vars(u) * o.with_vars(u);
  }
  MPoly r;
  r.vars_ = vars_;
  const size_t m = vars_.size();
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exps e(m);
      for (size_t k = 0; k < m; ++k) e[k] = ea[k] + eb[k];
      auto [it, fresh] = r.terms_.emplace(std::move(e), ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  r.normalize();
  return r;
}

MPoly MPoly::operator*(const Rat& c) const {
  if (c == 0) return MPoly();
  MPoly r = *this;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

MPoly MPoly::pow(long e) const {
  if (e == 0) return MPoly(1);
  if (e < 0) {
    if (terms_.size() != 1) throw InexactDivision("negative power of a non-monomial");
    MPoly r;
    r.vars_ = vars_;
    Exps ne = terms_.begin()->first;
    for (auto& x : ne) x = static_cast<int>(x * e);
    r.terms_[ne] = rat_pow(terms_.begin()->second, e);
    r.normalize();
    return r;
  }
  MPoly acc(1), b = *this;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

namespace {

// componentwise a - b if all differences are admissible (>= 0), else nullopt-ish
bool exps_divides(const MPoly::Exps& den, const MPoly::Exps& num) {
  for (size_t k = 0; k < den.size(); ++k)
    if (num[k] < den[k]) return false;
  return true;
}

}  // namespace

MPoly MPoly::exact_div(const MPoly& d) const {
  if (d.is_zero()) throw DivisionByZero();
  if (is_zero()) return MPoly();
  if (d.is_constant()) return *this * (1 / d.constant_value());

  // Strip a common monomial so both operands are true polynomials; Laurent
  // units go into the quotient unconditionally.
  auto u = var_union(*this, d);
  MPoly num = with_vars(u), den = d.with_vars(u);
  const size_t m = u.size();
  Exps shift_num(m, 0), shift_den(m, 0);
  for (size_t k = 0; k < m; ++k) {
    int mn = num.terms_.begin()->first[k], md = den.terms_.begin()->first[k];
    for (const auto& [e, c] : num.terms_) mn = std::min(mn, e[k]);
    for (const auto& [e, c] : den.terms_) md = std::min(md, e[k]);
    shift_num[k] = mn;
    shift_den[k] = md;
  }
  auto shift = [&](MPoly& p, const Exps& s, int sign) {
    TermMap nt;
    for (const auto& [e, c] : p.terms_) {
      Exps ne = e;
      for (size_t k = 0; k < m; ++k) ne[k] += sign * s[k];
      nt[std::move(ne)] = c;
    }
    p.terms_ = std::move(nt);
  };
  shift(num, shift_num, -1);
  shift(den, shift_den, -1);

  MPoly q;
  q.vars_ = u;
  MPoly r = num;
  const auto& dl = *den.terms_.rbegin();  // lex-leading term of divisor
  while (!r.is_zero()) {
    const auto& rl = *r.terms_.rbegin();
    if (!exps_divides(dl.first, rl.first)) throw InexactDivision();
    Exps qe(m);
    for (size_t k = 0; k < m; ++k) qe[k] = rl.first[k] - dl.first[k];
    Rat qc = rl.second / dl.second;
    MPoly t;
    t.vars_ = u;
    t.terms_[qe] = qc;
    q.terms_[qe] = qc;
    r = (r - t * den).with_vars(u);  // keep exponent vectors aligned with u
  }
  // reapply the monomial unit
  Exps net(m);
  for (size_t k = 0; k < m; ++k) net[k] = shift_num[k] - shift_den[k];
  MPoly unit;
  unit.vars_ = u;
  unit.terms_[net] = Rat(1);
  q.normalize();
  return q * unit;
}

int MPoly::degree(const std::string& v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) return 0;
  size_t k = static_cast<size_t>(it - vars_.begin());
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[k] > d) d = e[k];
    first = false;
  }
  return d;
}

int MPoly::min_exp(const std::string& v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) return 0;
  size_t k = static_cast<size_t>(it - vars_.begin());
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[k] < d) d = e[k];
    first = false;
  }
  return d;
}

std::map<int, MPoly> MPoly::coeffs_in(const std::string& v) const {
  std::map<int, MPoly> out;
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) {
    if (!is_zero()) out[0] = *this;
    return out;
  }
  size_t k = static_cast<size_t>(it - vars_.begin());
  for (const auto& [e, c] : terms_) {
    Exps ne = e;
    ne.erase(ne.begin() + static_cast<long>(k));
    MPoly& dst = out[e[k]];
    if (dst.vars_.empty() && dst.terms_.empty()) {
      dst.vars_ = vars_;
      dst.vars_.erase(dst.vars_.begin() + static_cast<long>(k));
    }
    dst.terms_[std::move(ne)] += c;
  }
  for (auto& [d, p] : out) p.normalize();
  return out;
}

MPoly MPoly::from_coeffs(const std::string& v, const std::map<int, MPoly>& cs) {
  MPoly r;
  for (const auto& [d, p] : cs) r += p * MPoly::var(v, 1).pow(d);
  return r;
}

MPoly MPoly::mul_var_pow(const std::string& v, int e) const {
  if (e == 0 || is_zero()) return *this;
  return *this * MPoly::var(v, 1).pow(e);
}

Rat MPoly::make_canonical_int() {
  if (is_zero()) return Rat(1);
  Int num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat f(den_lcm, num_gcd);
  f.canonicalize();
  if (terms_.rbegin()->second < 0) f = -f;
  for (auto& [e, c] : terms_) c *= f;
  return f;
}

const Rat& MPoly::lex_leading_coeff() const {
  if (is_zero()) throw std::logic_error("leading coefficient of zero");
  return terms_.rbegin()->second;
}

Rat MPoly::eval(const std::map<std::string, Rat>& point) const {
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (size_t k = 0; k < vars_.size(); ++k) {
      if (e[k] == 0) continue;
      auto it = point.find(vars_[k]);
      if (it == point.end()) throw std::logic_error("unbound variable " + vars_[k]);
      t *= rat_pow(it->second, e[k]);
    }
    acc += t;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// gcd: primitive PRS in the lexicographically last occurring variable, with
// recursive content extraction. Monomial common factors are included.

namespace {

struct UniView {
  // univariate view: coefficient polynomials by exponent
  std::map<int, MPoly> c;
  int deg() const { return c.empty() ? -1 : c.rbegin()->first; }
  const MPoly& lead() const { return c.rbegin()->second; }
  bool zero() const { return c.empty(); }
  void norm() {
    for (auto it = c.begin(); it != c.end();)
      it = it->second.is_zero() ? c.erase(it) : std::next(it);
  }
};

UniView uni_of(const MPoly& p, const std::string& v) {
  UniView u;
  u.c = p.coeffs_in(v);
  u.norm();
  return u;
}

UniView uni_mul_poly(const UniView& a, const MPoly& m) {
  UniView r;
  for (const auto& [d, p] : a.c) r.c[d] = p * m;
  r.norm();
  return r;
}

UniView uni_sub(const UniView& a, const UniView& b) {
  UniView r = a;
  for (const auto& [d, p] : b.c) {
    auto it = r.c.find(d);
    if (it == r.c.end())
      r.c[d] = -p;
    else
      it->second -= p;
  }
  r.norm();
  return r;
}

UniView uni_shift(const UniView& a, int k) {
  UniView r;
  for (const auto& [d, p] : a.c) r.c[d + k] = p;
  return r;
}

// pseudo-remainder of a by b (deg a >= deg b >= 0)
UniView uni_prem(UniView a, const UniView& b) {
  const MPoly& lb = b.lead();
  int db = b.deg();
  while (!a.zero() && a.deg() >= db) {
    int da = a.deg();
    MPoly la = a.lead();
    a = uni_sub(uni_mul_poly(a, lb), uni_mul_poly(uni_shift(b, da - db), la));
  }
  return a;
}

}  // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
  auto canon = [](MPoly p) {
    p.make_canonical_int();
    return p;
  };
  if (a.is_zero()) return b.is_zero() ? MPoly() : canon(b);
  if (b.is_zero()) return canon(a);
  if (a.is_constant() || b.is_constant()) {
    // rationals are units; a shared monomial needs both non-constant
    return MPoly(1);
  }
  // main variable: last of the union (present in at least one operand)
  auto u = var_union(a, b);
  const std::string v = u.back();
  if (!a.uses_var(v) || !b.uses_var(v)) {
    const MPoly& has = a.uses_var(v) ? a : b;
    const MPoly& other = a.uses_var(v) ? b : a;
    MPoly cont;
    bool first = true;
    for (const auto& [d, p] : has.coeffs_in(v)) {
      cont = first ? canon(p) : gcd(cont, p);
      first = false;
      if (cont == MPoly(1)) return MPoly(1);
    }
    return gcd(cont, other);
  }

  UniView fa = uni_of(a, v), fb = uni_of(b, v);
  int xpow = std::min(fa.c.begin()->first, fb.c.begin()->first);
  fa = uni_shift(fa, -fa.c.begin()->first);
  fb = uni_shift(fb, -fb.c.begin()->first);

  auto content = [&](const UniView& f) {
    MPoly c;
    bool first = true;
    for (const auto& [d, p] : f.c) {
      c = first ? canon(p) : gcd(c, p);
      first = false;
      if (c == MPoly(1)) break;
    }
    return c;
  };
  auto primitive = [&](UniView f) {
    if (f.zero()) return f;
    MPoly c = content(f);
    if (!(c == MPoly(1)))
      for (auto& [d, p] : f.c) p = p.exact_div(c);
    // also strip the rational content, else PRS coefficients blow up
    Int ng(0), dl(1);
    for (const auto& [d, p] : f.c)
      for (const auto& [e, cc] : p.terms()) {
        mpz_gcd(ng.get_mpz_t(), ng.get_mpz_t(), cc.get_num().get_mpz_t());
        mpz_lcm(dl.get_mpz_t(), dl.get_mpz_t(), cc.get_den().get_mpz_t());
      }
    Rat fct(dl, ng);
    fct.canonicalize();
    if (f.lead().lex_leading_coeff() < 0) fct = -fct;
    if (fct != 1)
      for (auto& [d, p] : f.c) p = p * fct;
    return f;
  };

  MPoly ca = content(fa), cb = content(fb);
  fa = primitive(fa);
  fb = primitive(fb);
  MPoly cg = gcd(ca, cb);

  if (fa.deg() < fb.deg()) std::swap(fa, fb);
  while (!fb.zero()) {
    UniView r = uni_prem(fa, fb);
    fa = std::move(fb);
    fb = primitive(std::move(r));
  }
  MPoly g = MPoly::from_coeffs(v, fa.c) * cg;
  g = g.mul_var_pow(v, xpow);
  return canon(g);
}

// ---------------------------------------------------------------------------
// canonical string form and its parser

std::string MPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat ac = c;
    if (first) {
      if (c < 0) {
        os << "-";
        ac = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) ac = -c;
    }
    bool any_var = false;
    std::ostringstream vs;
    for (size_t k = 0; k < vars_.size(); ++k) {
      if (e[k] == 0) continue;
      if (any_var) vs << "*";
      vs << vars_[k];
      if (e[k] != 1) vs << "^" << e[k];
      any_var = true;
    }
    if (!any_var) {
      os << rat_str(ac);
    } else if (ac == 1) {
      os << vs.str();
    } else {
      os << rat_str(ac) << "*" << vs.str();
    }
    first = false;
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;
  explicit Lexer(const std::string& in) : s(in) {}
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return s[i];
  }
};

}  // namespace

MPoly MPoly::parse(const std::string& in) {
  Lexer lx(in);
  MPoly total;
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.peek() == '+') {
      ++lx.i;
    } else if (lx.peek() == '-') {
      sign = -1;
      ++lx.i;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in polynomial: " + in);
    }
    if (lx.eof()) throw ParseError("dangling sign in polynomial: " + in);

    Rat coeff(1);
    MPoly term(1);
    bool saw_factor = false;
    while (true) {
      lx.skip();
      if (lx.i >= lx.s.size()) break;
      char c = lx.s[lx.i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t j = lx.i;
        while (j < lx.s.size() &&
               (std::isdigit(static_cast<unsigned char>(lx.s[j])) || lx.s[j] == '/'))
          ++j;
        coeff *= rat_parse(lx.s.substr(lx.i, j - lx.i));
        lx.i = j;
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t j = lx.i;
        while (j < lx.s.size() && (std::isalnum(static_cast<unsigned char>(lx.s[j])) ||
                                   lx.s[j] == '_'))
          ++j;
        std::string name = lx.s.substr(lx.i, j - lx.i);
        lx.i = j;
        int exp = 1;
        lx.skip();
        if (lx.i < lx.s.size() && lx.s[lx.i] == '^') {
          ++lx.i;
          lx.skip();
          size_t k = lx.i;
          if (k < lx.s.size() && lx.s[k] == '-') ++k;
          size_t d = k;
          while (d < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[d]))) ++d;
          if (d == k) throw ParseError("bad exponent in polynomial: " + in);
          exp = std::stoi(lx.s.substr(lx.i, d - lx.i));
          lx.i = d;
        }
        term *= MPoly::var(name, exp);
        saw_factor = true;
      } else {
        break;
      }
      lx.skip();
      if (lx.i < lx.s.size() && lx.s[lx.i] == '*') {
        ++lx.i;
        continue;
      }
      break;
    }
    if (!saw_factor) throw ParseError("empty term in polynomial: " + in);
    total += term * (sign < 0 ? -coeff : coeff);
    first = false;
  }
  if (first) throw ParseError("empty polynomial string");
  return total;
}

Rat rat_binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return Rat(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(r);
}

MPoly mpoly_binomial(long n, long k) { return MPoly(rat_binomial(n, k)); }

}  // namespace asmdpp
