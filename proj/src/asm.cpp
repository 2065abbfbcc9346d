#include "asmdpp/asm.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

#include "asmdpp/errors.hpp"

namespace asmdpp {

bool ASM::valid() const {
  if (int(b.size()) != n) return false;
  for (const auto& row : b)
    if (int(row.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    int rs = 0, cs = 0;
    for (int j = 0; j < n; ++j) {
      if (b[i][j] < -1 || b[i][j] > 1) return false;
      rs += b[i][j];
      cs += b[j][i];
      if (rs < 0 || rs > 1 || cs < 0 || cs > 1) return false;
    }
    if (rs != 1 || cs != 1) return false;
  }
  return true;
}

std::vector<ASM> enumerate_asm(int n) {
  // Row-by-row DFS over column prefix sums c in {0,1}^n: a row flips c while
  // keeping its own prefix sums in {0,1}.
  std::vector<ASM> out;
  std::vector<int> c(n, 0);
  ASM cur;
  cur.n = n;
  cur.b.assign(n, std::vector<int>(n, 0));
  std::function<void(int)> rec_row = [&](int i) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    std::function<void(int, int)> rec_col = [&](int j, int rs) {
      if (j == n) {
        if (rs == 1) rec_row(i + 1);
        return;
      }
      for (int e : {0, 1, -1}) {
        int nrs = rs + e, nc = c[j] + e;
        if (nrs < 0 || nrs > 1 || nc < 0 || nc > 1) continue;
        // the last row must close every column sum at 1
        if (i == n - 1 && nc != 1) continue;
        cur.b[i][j] = e;
        c[j] = nc;
        rec_col(j + 1, nrs);
        c[j] -= e;
        cur.b[i][j] = 0;
      }
    };
    rec_col(0, 0);
  };
  rec_row(0);
  return out;
}

AsmStats asm_stats(const ASM& m) {
  AsmStats s;
  int n = m.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (m.b[i][j] == -1) ++s.nminus;
      // pairs with the first entry strictly above and strictly right
      for (int k = i + 1; k < n; ++k)
        for (int l = 0; l < j; ++l) s.inv += long(m.b[i][j]) * m.b[k][l];
    }
  for (int j = 0; j < n; ++j) {
    if (m.b[0][j] == 1) s.t = j;
    if (m.b[n - 1][j] == 1) s.b = n - 1 - j;
  }
  return s;
}

MPoly asm_weight(const ASM& m) {
  AsmStats s = asm_stats(m);
  return MPoly::var("x", int(s.nminus)) * MPoly::var("y", int(s.inv - s.nminus)) *
         MPoly::var("z", int(s.t)) * MPoly::var("w", int(s.b));
}

MPoly z_asm_bruteforce(int n) {
  MPoly z;
  for (const ASM& m : enumerate_asm(n)) z += asm_weight(m);
  return z;
}

RatFun lambda_det_tsystem(const Mat<RatFun>& a, const RatFun& lam) {
  int n = a.rows();
  if (n != a.cols()) throw InvalidObject("lambda-determinant of non-square matrix");
  if (n == 0) return RatFun(1);
  using Slice = std::map<std::pair<int, int>, RatFun>;
  // T_{i,j,0} = 1 on the even sublattice; T_{i,j,1} from the matrix entries.
  Slice prev, curr;
  for (int i = -n; i <= n; ++i)
    for (int j = -n + std::abs(i); j <= n - std::abs(i); ++j)
      if (((i + j) - n) % 2 == 0) prev[{i, j}] = RatFun(1);
  for (int i = -(n - 1); i <= n - 1; ++i)
    for (int j = -(n - 1) + std::abs(i); j <= n - 1 - std::abs(i); ++j)
      if (((i + j) - (n + 1)) % 2 == 0) curr[{i, j}] = a((j - i + n - 1) / 2, (i + j + n - 1) / 2);
  for (int k = 1; k < n; ++k) {
    Slice next;
    for (int i = -(n - k - 1); i <= n - k - 1; ++i)
      for (int j = -(n - k - 1) + std::abs(i); j <= n - k - 1 - std::abs(i); ++j) {
        if (((i + j) - (n + k + 1)) % 2 != 0) continue;
        const RatFun& den = prev.at({i, j});
        if (den.is_zero()) throw ZeroDivisionAt(i, j, k + 1);
        next[{i, j}] =
            (curr.at({i, j + 1}) * curr.at({i, j - 1}) + lam * curr.at({i + 1, j}) * curr.at({i - 1, j})) /
            den;
      }
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr.at({0, 0});
}

RatFun lambda_det_expansion(const Mat<RatFun>& a, const RatFun& lam) {
  int n = a.rows();
  if (n != a.cols()) throw InvalidObject("lambda-determinant of non-square matrix");
  RatFun acc;
  RatFun onepl = RatFun(1) + lam;
  for (const ASM& m : enumerate_asm(n)) {
    AsmStats s = asm_stats(m);
    RatFun term = lam.pow(s.inv - s.nminus) * onepl.pow(s.nminus);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m.b[i][j] != 0) term = term * a(i, j).pow(m.b[i][j]);
    acc += term;
  }
  return acc;
}

bool SixVConfig::valid() const {
  if (int(h.size()) != n || int(v.size()) != n + 1) return false;
  for (int i = 0; i < n; ++i) {
    if (h[i][0] != 1 || h[i][n] != 0) return false;  // horizontal external in
  }
  for (int j = 0; j < n; ++j) {
    if (v[0][j] != 1 || v[n][j] != 0) return false;  // vertical external out
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // in-arrows: left edge right, right edge left, top edge down, bottom up
      int in = h[i][j] + (1 - h[i][j + 1]) + (1 - v[i][j]) + v[i + 1][j];
      if (in != 2) return false;
    }
  return true;
}

char SixVConfig::vertex_class(int i, int j) const {
  int l = h[i][j], r = h[i][j + 1], t = v[i][j], b = v[i + 1][j];
  if (l != r) return 'c';
  return (l == t) ? 'a' : 'b';  // flow-through: a if h,v aligned senses
}

int SixVConfig::vertex_subtype(int i, int j) const {
  int l = h[i][j], r = h[i][j + 1];
  if (l != r) return l == 1 ? 1 : 2;  // c1: horizontals in; c2: out
  return l == 1 ? 1 : 2;
}

SixVConfig asm_to_6v(const ASM& m) {
  if (!m.valid()) throw InvalidObject("not a valid ASM");
  int n = m.n;
  SixVConfig c;
  c.n = n;
  c.h.assign(n, std::vector<int>(n + 1, 0));
  c.v.assign(n + 1, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    int rp = 0;
    c.h[i][0] = 1;
    for (int j = 0; j < n; ++j) {
      rp += m.b[i][j];
      c.h[i][j + 1] = (rp == 0) ? 1 : 0;  // right until the row prefix hits 1
    }
  }
  for (int j = 0; j < n; ++j) {
    int cp = 0;
    c.v[0][j] = 1;
    for (int i = 0; i < n; ++i) {
      cp += m.b[i][j];
      c.v[i + 1][j] = (cp == 0) ? 1 : 0;  // up until the column prefix hits 1
    }
  }
  return c;
}

std::vector<SixVConfig> enumerate_6v(int n) {
  // Independent of the ASM bijection: row sweep choosing right/bottom edges.
  std::vector<SixVConfig> out;
  SixVConfig c;
  c.n = n;
  c.h.assign(n, std::vector<int>(n + 1, 0));
  c.v.assign(n + 1, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j) c.v[0][j] = 1;
  std::function<void(int)> rec_row = [&](int i) {
    if (i == n) {
      out.push_back(c);
      return;
    }
    c.h[i][0] = 1;
    std::function<void(int)> rec_col = [&](int j) {
      if (j == n) {
        if (c.h[i][n] == 0) rec_row(i + 1);
        return;
      }
      for (int r = 0; r <= 1; ++r)
        for (int b = 0; b <= 1; ++b) {
          int in = c.h[i][j] + (1 - r) + (1 - c.v[i][j]) + b;
          if (in != 2) continue;
          if (i == n - 1 && b != 0) continue;  // bottom external points out
          c.h[i][j + 1] = r;
          c.v[i + 1][j] = b;
          rec_col(j + 1);
        }
    };
    rec_col(0);
  };
  rec_row(0);
  return out;
}

namespace {

Rat weight_a(const Rat& q, const Rat& z, const Rat& w) { return q * z - w / q; }
Rat weight_b(const Rat& q, const Rat& z, const Rat& w) { return z / q - q * w; }
Rat weight_c(const Rat& q, const Rat& zeta, const Rat& omega) {
  return (q * q - 1 / (q * q)) * zeta * omega;
}

}  // namespace

Rat sixv_bruteforce(const Rat& q, const std::vector<Rat>& zeta, const std::vector<Rat>& omega) {
  int n = int(zeta.size());
  if (int(omega.size()) != n) throw InvalidObject("spectral parameter count mismatch");
  Rat norm(1);
  for (int i = 0; i < n; ++i) norm *= weight_c(q, zeta[i], omega[i]);
  if (norm == 0) throw DegenerateParameters("vanishing c-weight normalization");
  Rat total(0);
  for (const SixVConfig& c : enumerate_6v(n)) {
    Rat wgt(1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat z = zeta[i] * zeta[i], w = omega[j] * omega[j];
        switch (c.vertex_class(i, j)) {
          case 'a': wgt *= weight_a(q, z, w); break;
          case 'b': wgt *= weight_b(q, z, w); break;
          default: wgt *= weight_c(q, zeta[i], omega[j]); break;
        }
      }
    total += wgt;
  }
  return total / norm;
}

Rat ik_determinant(const Rat& q, const std::vector<Rat>& zeta, const std::vector<Rat>& omega) {
  int n = int(zeta.size());
  if (int(omega.size()) != n) throw InvalidObject("spectral parameter count mismatch");
  std::vector<Rat> z(n), w(n);
  for (int i = 0; i < n; ++i) {
    z[i] = zeta[i] * zeta[i];
    w[i] = omega[i] * omega[i];
  }
  Rat pre(1), dz(1), dw(1);
  Mat<Rat> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat ab = weight_a(q, z[i], w[j]) * weight_b(q, z[i], w[j]);
      if (ab == 0) throw DegenerateParameters("vanishing a or b weight in IK formula");
      pre *= ab;
      m(i, j) = 1 / ab;
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (z[i] == z[j] || w[i] == w[j])
        throw DegenerateParameters("coincident spectral parameters in IK formula");
      dz *= z[i] - z[j];
      dw *= w[j] - w[i];
    }
  return pre / (dz * dw) * det(m);
}

StructParams g_struct() {
  RatFun x = RatFun::var("x"), y = RatFun::var("y");
  return StructParams::T(x, RatFun(1), y - x);
}

Mat<NuElem> m_asm(int n) {
  StructParams g = g_struct();
  NuElem nu = NuElem::nu();
  NuElem onemnu = NuElem(1) - nu;
  Mat<NuElem> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m(i, j) = nu * NuElem(g.entry(i, j));
      if (i == j) m(i, j) += onemnu;
    }
  return m;
}

NuElem z_asm_det(int n) { return det(m_asm(n)); }

bool apm_factorization_check(const Rat& q, const Rat& r, int n, int branch) {
  Rat qq = branch >= 0 ? q : 1 / q;
  RatFun q2(qq * qq), rinv(1 / r), rf_r(r);
  RatFun pref = RatFun(Rat(1) / (r * r)) - q2;
  if (pref.is_zero()) throw DegenerateParameters("r^{-2} = q^{+-2}");
  // f_{A}(u,v) = 1/((r^{-1}+u)(r^{-1}+v) - q^{+-2})
  RatFun u = RatFun::var("u"), v = RatFun::var("v");
  InfMatrix a = InfMatrix::from_gf(RatFun(1) / ((rinv + u) * (rinv + v) - q2));
  RatFun alpha = (RatFun(1) - q2 * rf_r * rf_r) / rf_r;
  RatFun den = rf_r * rf_r - q2;
  if (den.is_zero() || alpha.is_zero()) throw DegenerateParameters("degenerate U parameters");
  RatFun beta = (q2 - q2.inverse()) / den;
  RatFun alphap = -q2 * rf_r * rf_r * beta;
  RatFun betap = -alpha.inverse();
  if (beta.is_zero()) throw DegenerateParameters("degenerate U parameters");
  StructParams u1 = StructParams::U(alpha, beta), u2 = StructParams::U(alphap, betap);
  // (U^t)^{-1} = (U^{-1})^t is lower triangular, so truncations multiply.
  Mat<RatFun> lhs = a.truncate(n);
  Mat<RatFun> rhs = structured_inverse(u1).transpose().truncate(n) * u2.truncate(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (pref * lhs(i, j) != rhs(i, j)) return false;
  return true;
}

Mat<NuElem> m_asm_refined(int n) {
  Mat<NuElem> m = m_asm(n);
  // coefficient of v^{n-1} in the third (z-correction) term:
  //   nu (z-1) (1 + yu/(1-xu))^n / (1 - (y(z-1)+x)u)
  RatFun x = RatFun::var("x"), y = RatFun::var("y"), z = RatFun::var("z"), u = RatFun::var("u");
  RatFun f = ((RatFun(1) + (y - x) * u) / (RatFun(1) - x * u)).pow(n) /
             (RatFun(1) - (y * (z - RatFun(1)) + x) * u);
  GradedSeries s = series_from_ratfun(f, "u", n - 1);
  NuElem fac = NuElem::nu() * NuElem(z - RatFun(1));
  for (int i = 0; i < n; ++i) m(i, n - 1) += fac * NuElem(s.coeff(i));
  return m;
}

NuElem z_asm_refined_det(int n) { return det(m_asm_refined(n)); }

}  // namespace asmdpp
