#include "asmdpp/dpp.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "asmdpp/errors.hpp"

namespace asmdpp {

bool DPP::valid() const {
  int prev_lambda = n;  // lambda_{-1}: first part bounded by the order
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.empty()) return false;
    int lambda = int(row.size());
    if (row[0] > prev_lambda || lambda >= row[0]) return false;
    for (int c = 0; c < lambda; ++c) {
      if (row[c] < 1 || row[c] > n) return false;
      if (c > 0 && row[c] > row[c - 1]) return false;
      // strict decrease down column i+c: the part above sits at offset c+1
      if (i > 0 && row[c] >= rows[i - 1][c + 1]) return false;
    }
    prev_lambda = lambda;
  }
  return true;
}

std::vector<DPP> enumerate_dpp(int n) {
  std::vector<DPP> out;
  DPP cur;
  cur.n = n;
  std::function<void()> rec = [&]() {
    out.push_back(cur);
    int i = int(cur.rows.size());
    std::vector<int> prevrow = i ? cur.rows.back() : std::vector<int>();
    int cap = i ? int(prevrow.size()) : n;  // a_{i,i} <= lambda_{i-1}
    if (i && int(prevrow.size()) >= 2) cap = std::min(cap, prevrow[1] - 1);
    std::vector<int> row;
    std::function<void()> grow = [&]() {
      // every prefix with 1 <= length < a_{i,i} is a complete row
      cur.rows.push_back(row);
      rec();
      cur.rows.pop_back();
      if (int(row.size()) + 1 >= row[0]) return;
      int c = int(row.size());
      int hi = row.back();
      if (i) hi = std::min(hi, prevrow[c + 1] - 1);
      for (int p = hi; p >= 1; --p) {
        row.push_back(p);
        grow();
        row.pop_back();
      }
    };
    for (int a = cap; a >= 2; --a) {
      row = {a};
      grow();
    }
  };
  rec();
  return out;
}

DppStats dpp_stats(const DPP& a) {
  DppStats s;
  for (size_t i = 0; i < a.rows.size(); ++i) {
    const auto& row = a.rows[i];
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c] <= int(c))
        ++s.special;
      else
        ++s.nonspecial;
      if (row[c] == a.n) ++s.mcount;
      if (row[c] == a.n - 1) ++s.pcount;
    }
    if (int(row.size()) == a.n - 1) ++s.pcount;
  }
  return s;
}

MPoly dpp_weight(const DPP& a) {
  DppStats s = dpp_stats(a);
  return MPoly::var("x", int(s.special)) * MPoly::var("y", int(s.nonspecial)) *
         MPoly::var("z", int(s.mcount)) * MPoly::var("w", int(s.pcount));
}

MPoly z_dpp_bruteforce(int n) {
  MPoly z;
  for (const DPP& a : enumerate_dpp(n)) z += dpp_weight(a);
  return z;
}

bool Path::valid() const {
  if (int(heights.size()) != start + 1) return false;
  for (size_t t = 0; t < heights.size(); ++t) {
    if (heights[t] < 0) return false;
    if (t > 0 && heights[t] < heights[t - 1]) return false;
  }
  return heights.back() == start + 2;
}

MPoly path_weight(const Path& p, int n, bool refined) {
  MPoly w(1);
  for (int t = 0; t <= p.start; ++t) {
    int xdest = p.start - 1 - t, h = p.heights[t];
    if (h == 0) continue;
    if (h <= xdest + 1)
      w *= MPoly::var("x");
    else if (refined && h == n)
      w *= MPoly::var("y") * MPoly::var("z");
    else
      w *= MPoly::var("y");
  }
  return w;
}

PathFamily dpp_to_paths(const DPP& a) {
  if (!a.valid()) throw InvalidObject("not a valid DPP");
  PathFamily f;
  f.n = a.n;
  for (const auto& row : a.rows) {
    Path p;
    p.start = row[0] - 2;
    p.heights.assign(p.start + 1, 0);
    // part a_{i,i+c} is recorded by the step with destination x = c-1
    for (size_t c = 0; c < row.size(); ++c) p.heights[p.start - int(c)] = row[c];
    f.paths.push_back(p);
  }
  return f;
}

DPP paths_to_dpp(const PathFamily& f) {
  DPP a;
  a.n = f.n;
  for (const Path& p : f.paths) {
    if (!p.valid()) throw InvalidObject("invalid path in family");
    std::vector<int> row;
    for (int c = 0; c <= p.start; ++c) {
      int h = p.heights[p.start - c];
      if (h == 0) break;
      row.push_back(h);
    }
    a.rows.push_back(row);
  }
  if (!a.valid()) throw InvalidObject("path family does not encode a DPP");
  return a;
}

namespace {

std::set<std::pair<int, int>> path_vertices(const Path& p) {
  std::set<std::pair<int, int>> v;
  int h = 0;
  for (int t = 0; t <= p.start; ++t) {
    int x = p.start - t;  // column the path climbs in before step t
    for (int y = h; y <= p.heights[t]; ++y) v.insert({x, y});
    h = p.heights[t];
  }
  v.insert({-1, h});
  return v;
}

void enumerate_paths(int start, int top, std::function<void(const Path&)> visit) {
  // weakly increasing interior heights in [0, top], final fixed at top
  Path p;
  p.start = start;
  p.heights.assign(start + 1, 0);
  p.heights[start] = top;
  std::function<void(int, int)> rec = [&](int t, int lo) {
    if (t == start) {
      visit(p);
      return;
    }
    for (int h = lo; h <= top; ++h) {
      p.heights[t] = h;
      rec(t + 1, h);
    }
  };
  rec(0, 0);
}

}  // namespace

bool family_nonintersecting(const PathFamily& f) {
  std::set<std::pair<int, int>> seen;
  for (const Path& p : f.paths)
    for (const auto& v : path_vertices(p)) {
      if (seen.count(v)) return false;
      seen.insert(v);
    }
  return true;
}

MPoly single_path_pf(int i, int j, int n, bool refined) {
  MPoly total;
  enumerate_paths(i, j + 2, [&](const Path& p) { total += path_weight(p, n, refined); });
  return total;
}

MPoly lgv_family_bruteforce(int n, bool refined) {
  int m = n - 1;  // indices 0..n-2
  std::vector<std::vector<Path>> paths(m);
  for (int k = 0; k < m; ++k)
    enumerate_paths(k, k + 2, [&](const Path& p) { paths[k].push_back(p); });
  MPoly total;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> ks;
    for (int k = 0; k < m; ++k)
      if (mask >> k & 1) ks.push_back(k);
    std::function<void(size_t, PathFamily&)> rec = [&](size_t pos, PathFamily& fam) {
      if (pos == ks.size()) {
        if (family_nonintersecting(fam)) {
          MPoly w(1);
          for (const Path& p : fam.paths) w *= path_weight(p, n, refined);
          total += w;
        }
        return;
      }
      for (const Path& p : paths[ks[pos]]) {
        fam.paths.push_back(p);
        rec(pos + 1, fam);
        fam.paths.pop_back();
      }
    };
    PathFamily fam;
    fam.n = n;
    rec(0, fam);
  }
  return total;
}

MPoly d_entry(int i, int j) {
  MPoly x = MPoly::var("x"), y = MPoly::var("y"), e;
  for (int k = 0; k <= i; ++k)
    for (int l = 0; l <= std::min(k, j + 1); ++l)
      e += mpoly_binomial(k, l) * mpoly_binomial(j + 1, l) * x.pow(k - l) * y.pow(l + 1);
  return e;
}

MPoly d_refined_entry(int i, int n) {
  MPoly x = MPoly::var("x"), y = MPoly::var("y"), z = MPoly::var("z"), e;
  for (int k = 0; k <= i; ++k)
    for (int l = 0; l <= k; ++l)
      for (int m = 0; m <= l; ++m)
        e += mpoly_binomial(k, l) * mpoly_binomial(n - 2 - m, l - m) * x.pow(k - l) *
             y.pow(l + 1) * z.pow(m + 1);
  return e;
}

Mat<MPoly> lgv_matrix(int n) {
  Mat<MPoly> d(n - 1, n - 1);
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) d(i, j) = d_entry(i, j);
  return d;
}

Mat<MPoly> lgv_matrix_refined(int n) {
  Mat<MPoly> d = lgv_matrix(n);
  for (int i = 0; i + 1 < n; ++i) d(i, n - 2) = d_refined_entry(i, n);
  return d;
}

namespace {

MPoly det_i_plus(Mat<MPoly> d) {
  for (int i = 0; i < d.rows(); ++i) d(i, i) += MPoly(1);
  return det(d);
}

}  // namespace

MPoly z_dpp_det(int n) { return det_i_plus(lgv_matrix(n)); }
MPoly z_dpp_det_refined(int n) { return det_i_plus(lgv_matrix_refined(n)); }

RatFun h_entry(int i, int j) {
  StructParams g = g_struct();
  RatFun e;
  for (int k = 0; k < i; ++k) e += g.entry(k, j);
  return RatFun::var("y") * e;
}

Mat<RatFun> m_dpp(int n) {
  Mat<RatFun> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m(i, j) = h_entry(i, j);
      if (i == j) m(i, j) += RatFun(1);
    }
  return m;
}

Mat<NuElem> m_dpp_refined(int n) {
  Mat<RatFun> base = m_dpp(n);
  Mat<NuElem> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = NuElem(base(i, j));
  RatFun x = RatFun::var("x"), y = RatFun::var("y"), z = RatFun::var("z"), u = RatFun::var("u");
  RatFun one(1);
  RatFun r = (one - x * u + y * u).pow(n) /
             ((one - u) * (one - (y * (z - one) + x) * u) * (one - x * u).pow(n));
  // third term of the refined generating function: (z-1)(yu + nu(1-xu)) r
  GradedSeries s0 = series_from_ratfun(y * u * r, "u", n - 1);
  GradedSeries s1 = series_from_ratfun((one - x * u) * r, "u", n - 1);
  for (int i = 0; i < n; ++i)
    m(i, n - 1) += NuElem(z - one) * NuElem(s0.coeff(i), s1.coeff(i));
  return m;
}

NuElem z_dpp_refined_det(int n) { return det(m_dpp_refined(n)); }

namespace {

// a0 + a1 nu scaled by x^{-k}, with pure polynomial components: the quadratic
// relation x nu^2 = (x+y-1) nu - y is applied without ever dividing, so the
// whole identity check stays gcd-free.
struct PolyNu {
  MPoly a0, a1;
  int k = 0;

  PolyNu() = default;
  PolyNu(MPoly p) : a0(std::move(p)) {}
  PolyNu(MPoly p0, MPoly p1, int kk = 0) : a0(std::move(p0)), a1(std::move(p1)), k(kk) {}

  PolyNu operator*(const PolyNu& o) const {
    MPoly x = MPoly::var("x"), y = MPoly::var("y");
    PolyNu r;
    r.a0 = x * a0 * o.a0 - y * a1 * o.a1;
    r.a1 = x * (a0 * o.a1 + a1 * o.a0) + (x + y - MPoly(1)) * a1 * o.a1;
    r.k = k + o.k + 1;
    return r;
  }
  PolyNu operator+(const PolyNu& o) const {
    const PolyNu &lo = k <= o.k ? *this : o, &hi = k <= o.k ? o : *this;
    MPoly s = MPoly::var("x", hi.k - lo.k);
    return {lo.a0 * s + hi.a0, lo.a1 * s + hi.a1, hi.k};
  }
  bool operator==(const PolyNu& o) const {
    MPoly sl = MPoly::var("x", std::max(k, o.k) - k);
    MPoly sr = MPoly::var("x", std::max(k, o.k) - o.k);
    return a0 * sl == o.a0 * sr && a1 * sl == o.a1 * sr;
  }
};

struct SandwichScene {
  MPoly x = MPoly::var("x"), y = MPoly::var("y"), z = MPoly::var("z");
  MPoly u = MPoly::var("u"), v = MPoly::var("v"), one = MPoly(1);
  MPoly di = one - u * v;                          // 1/(1-uv)
  MPoly dg = one - x * u - v - (y - x) * u * v;    // denominator of f_G
  MPoly du = one - u;
  MPoly dx = one - x * u;
  // numerators of f_ASM and f_DPP over di*dg and di*dg*du
  PolyNu na() const { return PolyNu(dg, di - dg); }  // (1-nu)dg + nu di
  MPoly nd() const { return du * dg + y * u * di; }
};

}  // namespace

bool asm_dpp_sandwich_identity() {
  // both sides multiplied through by (1-nu) di dg
  SandwichScene s;
  PolyNu lhs = PolyNu(s.one - s.u, -s.one) * PolyNu(s.one - s.v) * s.na();
  PolyNu rhs = PolyNu(s.one, -s.one) * PolyNu(s.one - s.v, s.v) * PolyNu(s.nd());
  return lhs == rhs;
}

bool asm_dpp_sandwich_identity_refined(int n) {
  SandwichScene s;
  MPoly db = s.one - (s.y * (s.z - s.one) + s.x) * s.u;
  MPoly pn = (s.dx + s.y * s.u).pow(n);
  MPoly vp = MPoly::var("v", n - 1);
  MPoly dxn = s.dx.pow(n);
  PolyNu ynudx(s.y * s.u, s.dx);  // yu + nu(1-xu)
  // Q: numerator of 1 + (v/x)(y(nu-1)+nu(xu-1))/(yu+nu(1-xu)) over x*(yu+nu dx)
  PolyNu q(s.x * s.y * s.u - s.v * s.y, s.x * s.dx + s.v * (s.y + s.x * s.u - s.one));
  // common denominator: di dg du db dx^n x (yu+nu dx)
  PolyNu lmul(s.one + (s.y - s.one) * s.u, -s.x * s.u);  // 1+(y-x nu-1)u
  PolyNu rmul(s.one - s.v, s.v);                         // 1+(nu-1)v
  PolyNu zc(MPoly(), s.z - s.one);                       // nu (z-1)
  PolyNu lhs = lmul * PolyNu(s.one - s.v) * PolyNu(s.du) *
               (s.na() * PolyNu(db * dxn * s.x) * ynudx +
                zc * PolyNu(pn * vp) * q * PolyNu(s.di * s.dg));
  PolyNu rhs = PolyNu(s.du) * rmul * PolyNu(s.x) * ynudx *
               (PolyNu(s.nd() * db * dxn) +
                PolyNu((s.z - s.one) * (s.one - s.v) * pn * vp * s.di * s.dg) * ynudx);
  return lhs == rhs;
}

bool asm_dpp_sandwich_check(int n) {
  Mat<NuElem> ma = m_asm(n);
  Mat<RatFun> mdr = m_dpp(n);
  Mat<NuElem> md(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) md(i, j) = NuElem(mdr(i, j));
  NuElem one(1), nu = NuElem::nu();
  Mat<NuElem> lhs = sandwich((one - nu).inverse(), ma, one);
  Mat<NuElem> rhs = sandwich(one, md, one - nu);
  return lhs == rhs && det(ma) == det(md);
}

bool asm_dpp_sandwich_check_refined(int n) {
  Mat<NuElem> ma = m_asm_refined(n);
  Mat<NuElem> md = m_dpp_refined(n);
  NuElem one(1), nu = NuElem::nu();
  // (1 + (y - x nu - 1) u) corresponds to I - a S with a = 1 - y + x nu
  NuElem a(RatFun(1) - RatFun::var("y"), RatFun::var("x"));
  Mat<NuElem> lhs = sandwich(a, ma, one);
  Mat<NuElem> rhs = sandwich(one, md, one - nu);
  return lhs == rhs && det(ma) == det(md);
}

bool quadratic_relation_check(const MPoly& zn, const MPoly& zn1) {
  RatFun z = RatFun::var("z"), w = RatFun::var("w"), one(1);
  auto at = [](const MPoly& p, const RatFun& zv, const RatFun& wv) {
    return substitute(p, {{"z", zv}, {"w", wv}});
  };
  RatFun lhs = (z - w) * at(zn, z, w) * at(zn1, one, one);
  RatFun rhs = (z - one) * w * at(zn, z, one) * at(zn1, one, w) -
               (w - one) * z * at(zn1, z, one) * at(zn, one, w);
  return lhs == rhs;
}

}  // namespace asmdpp
