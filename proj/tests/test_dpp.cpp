#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asmdpp/dpp.hpp"

using namespace asmdpp;

namespace {

const long kCounts[] = {1, 1, 2, 7, 42, 429, 7436};

MPoly at_one(const MPoly& p, std::initializer_list<const char*> vars) {
  std::map<std::string, RatFun> b;
  for (const char* v : vars) b[v] = RatFun(1);
  return substitute(p, b).num();
}

}  // namespace

TEST_CASE("DPP enumeration counts and validity") {
  for (int n = 1; n <= 5; ++n) {
    auto all = enumerate_dpp(n);
    CHECK(long(all.size()) == kCounts[n]);
    for (const DPP& a : all) CHECK(a.valid());
  }
  CHECK(enumerate_dpp(1).front() == DPP{1, {}});
}

TEST_CASE("DPP statistics on the order-3 list") {
  DPP d31{3, {{3, 1}}};
  REQUIRE(d31.valid());
  DppStats s = dpp_stats(d31);
  CHECK(s.special == 1);  // the part 1 in column 1
  CHECK(s.nonspecial == 1);
  CHECK(dpp_weight(d31) == MPoly::parse("x*y*z*w"));

  DPP d332{3, {{3, 3}, {2}}};
  REQUIRE(d332.valid());
  DppStats s2 = dpp_stats(d332);
  CHECK(s2.mcount == 2);
  CHECK(s2.pcount == 2);  // one part equal to 2, one row of length 2
  CHECK(dpp_weight(d332) == MPoly::parse("y^3*z^2*w^2"));

  CHECK(!DPP{3, {{3, 3}, {3}}}.valid());  // column not strictly decreasing
  CHECK(!DPP{3, {{2, 2}}}.valid());       // row as long as its first part
}

TEST_CASE("golden order-3 partition function and ASM equality") {
  MPoly want =
      MPoly::parse("1 + y*w + y*z + y^2*z*w^2 + y^2*z^2*w + y^3*z^2*w^2 + x*y*z*w");
  CHECK(z_dpp_bruteforce(3) == want);
  for (int n = 1; n <= 5; ++n) CHECK(z_dpp_bruteforce(n) == z_asm_bruteforce(n));
}

TEST_CASE("path bijection round-trips and preserves weights") {
  for (int n = 1; n <= 5; ++n) {
    for (const DPP& a : enumerate_dpp(n)) {
      PathFamily f = dpp_to_paths(a);
      CHECK(family_nonintersecting(f));
      CHECK(paths_to_dpp(f) == a);
      MPoly w(1);
      for (const Path& p : f.paths) {
        CHECK(p.valid());
        w *= path_weight(p, n, true);
      }
      CHECK(w == at_one(dpp_weight(a), {"w"}));
    }
  }
  // single part 2: one path from (0,0) to (0,2) plus the final step
  PathFamily f = dpp_to_paths(DPP{3, {{2}}});
  REQUIRE(f.paths.size() == 1);
  CHECK(f.paths[0].start == 0);
  CHECK(f.paths[0].heights == std::vector<int>{2});
}

TEST_CASE("single-path partition functions are the LGV entries") {
  CHECK(single_path_pf(0, 0, 99, false) == MPoly::var("y"));
  CHECK(single_path_pf(1, 0, 99, false) == MPoly::parse("y + x*y + y^2"));
  CHECK(d_entry(0, 0) == MPoly::var("y"));
  CHECK(d_entry(1, 0) == MPoly::parse("y + x*y + y^2"));
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) CHECK(d_entry(i, j) == single_path_pf(i, j, 99, false));
  // refined last column against the refined path weights (steps at height n);
  // the closed formula is only meaningful inside the truncation range
  for (int n = 2; n <= 6; ++n)
    for (int i = 0; i <= n - 2; ++i)
      CHECK(d_refined_entry(i, n) == single_path_pf(i, n - 2, n, true));
}

TEST_CASE("LGV determinant equals the brute forces") {
  CHECK(z_dpp_det(2) == MPoly::parse("1 + y"));
  CHECK(z_dpp_det(3) == MPoly::parse("1 + 2*y + x*y + 2*y^2 + y^3"));
  for (int n = 1; n <= 5; ++n) {
    MPoly z = z_dpp_det(n);
    CHECK(z == at_one(z_dpp_bruteforce(n), {"z", "w"}));
    CHECK(z == lgv_family_bruteforce(n, false));
  }
}

TEST_CASE("refined LGV determinant carries the z statistic") {
  CHECK(z_dpp_det_refined(2) == MPoly::parse("1 + z*y"));
  for (int n = 1; n <= 4; ++n) {
    MPoly z = z_dpp_det_refined(n);
    CHECK(z == at_one(z_dpp_bruteforce(n), {"w"}));
    CHECK(z == lgv_family_bruteforce(n, true));
    CHECK(at_one(z, {"z"}) == z_dpp_det(n));
  }
}

TEST_CASE("H is the shifted LGV matrix") {
  for (int i = 0; i <= 6; ++i) {
    CHECK(h_entry(0, i).is_zero());
    for (int j = 0; j <= 6; ++j) CHECK(h_entry(i + 1, j + 1) == RatFun(d_entry(i, j)));
  }
  // first column: y (1 + x + ... + x^{i-1})
  MPoly geo;
  for (int i = 1; i <= 5; ++i) {
    geo += MPoly::var("x", i - 1);
    CHECK(h_entry(i, 0) == RatFun(MPoly::var("y") * geo));
  }
  // H = y S(I-S)^{-1} G entry-wise via the truncated product
  int n = 7;
  Mat<RatFun> strict(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < i; ++k) strict(i, k) = RatFun(1);
  Mat<RatFun> h = strict * g_struct().truncate(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      CHECK(RatFun::var("y") * h(i, j) == m_dpp(n)(i, j) - (i == j ? RatFun(1) : RatFun()));
}

TEST_CASE("generating function of M_DPP") {
  RatFun x = RatFun::var("x"), y = RatFun::var("y");
  RatFun u = RatFun::var("u"), v = RatFun::var("v"), one(1);
  RatFun f = one / (one - u * v) +
             y * u / ((one - u) * (one - x * u - v - (y - x) * u * v));
  InfMatrix m = InfMatrix::from_gf(f);
  CHECK(m.entry(0, 0) == one);
  Mat<RatFun> direct = m_dpp(6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(m.entry(i, j) == direct(i, j));
}

TEST_CASE("refined M_DPP determinant") {
  RatFun z = RatFun::var("z");
  for (int n = 1; n <= 4; ++n) {
    NuElem d = z_dpp_refined_det(n);
    RatFun zfun = RatFun(at_one(z_dpp_bruteforce(n), {"w"}));
    CHECK(d.a0() == zfun);
    CHECK(d.a1() == (z - RatFun(1)) * zfun);
  }
}

TEST_CASE("sandwich identities between the generating functions") {
  CHECK(asm_dpp_sandwich_identity());
  for (int n = 1; n <= 3; ++n) CHECK(asm_dpp_sandwich_identity_refined(n));
}

TEST_CASE("matrix-level sandwich equality") {
  for (int n = 1; n <= 4; ++n) CHECK(asm_dpp_sandwich_check(n));
  for (int n = 1; n <= 3; ++n) CHECK(asm_dpp_sandwich_check_refined(n));
}

TEST_CASE("quadratic relation of the doubly refined partition functions") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(quadratic_relation_check(z_asm_bruteforce(n), z_asm_bruteforce(n - 1)));
    CHECK(quadratic_relation_check(z_dpp_bruteforce(n), z_dpp_bruteforce(n - 1)));
  }
}
