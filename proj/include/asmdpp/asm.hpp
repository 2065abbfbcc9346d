#pragma once

#include <vector>

#include "asmdpp/genfun.hpp"
#include "asmdpp/linalg.hpp"
#include "asmdpp/nu.hpp"

namespace asmdpp {

// Alternating sign matrix: entries in {-1,0,1}, all row/column sums 1, all
// prefix sums non-negative.
struct ASM {
  int n = 0;
  std::vector<std::vector<int>> b;
  bool valid() const;
};

// Statistics entering the weight x^N y^{Inv-N} z^t w^b.
struct AsmStats {
  long inv = 0;     // inversion number
  long nminus = 0;  // number of -1 entries
  long t = 0;       // zeros left of the 1 in the top row
  long b = 0;       // zeros right of the 1 in the bottom row
};

std::vector<ASM> enumerate_asm(int n);
AsmStats asm_stats(const ASM& m);
MPoly asm_weight(const ASM& m);    // x^N y^{Inv-N} z^t w^b
MPoly z_asm_bruteforce(int n);     // sum of weights, canonical in x,y,z,w

// Lambda-determinant via the deformed T-system recursion; Laurent in the
// entries. Throws ZeroDivisionAt on a vanishing interior T.
RatFun lambda_det_tsystem(const Mat<RatFun>& a, const RatFun& lam);
// Lambda-determinant via the explicit ASM expansion
// sum_B lam^{Inv-N} (1+lam)^N prod a_{ij}^{b_{ij}}.
RatFun lambda_det_expansion(const Mat<RatFun>& a, const RatFun& lam);

// Six-vertex configuration on an n x n grid with external edges.
// h(i,j), j=0..n: horizontal edge left of vertex (i,j) (j=n: right external);
// 1 means pointing right. v(i,j), i=0..n: vertical edge above vertex (i,j)
// (i=n: bottom external); 1 means pointing up.
struct SixVConfig {
  int n = 0;
  std::vector<std::vector<int>> h;  // n x (n+1)
  std::vector<std::vector<int>> v;  // (n+1) x n
  bool valid() const;               // ice rule + DWBC
  // 'a','b','c' weight class of vertex (i,j)
  char vertex_class(int i, int j) const;
  // subtype index 1 or 2 within the class
  int vertex_subtype(int i, int j) const;
};

SixVConfig asm_to_6v(const ASM& m);
std::vector<SixVConfig> enumerate_6v(int n);  // independent DFS enumeration

// Partition function normalized by prod_i c(z_i, w_i), with z_i = zeta_i^2,
// w_j = omega_j^2 so that c = (q^2 - q^{-2}) zeta omega is rational.
Rat sixv_bruteforce(const Rat& q, const std::vector<Rat>& zeta, const std::vector<Rat>& omega);
// Izergin-Korepin determinant; equals sixv_bruteforce. Throws
// DegenerateParameters on coincident spectral parameters.
Rat ik_determinant(const Rat& q, const std::vector<Rat>& zeta, const std::vector<Rat>& omega);

// G = T(x,1,y-x), the ASM-side transfer matrix.
StructParams g_struct();
// n x n truncation of (1-nu) I + nu G.
Mat<NuElem> m_asm(int n);
// Its determinant; nu-component vanishes, nu-free part is Z_ASM(x,y,1).
NuElem z_asm_det(int n);

// Lemma apdecomp: A_pm^{[0,n-1]} factorizes through U-matrices. branch = +1/-1.
bool apm_factorization_check(const Rat& q, const Rat& r, int n, int branch);

// Refined (z-dependent) matrix: column n-1 patched from the third term of the
// modified generating function. det = (1 + nu(z-1)) Z_ASM(x,y,z).
Mat<NuElem> m_asm_refined(int n);
NuElem z_asm_refined_det(int n);

}  // namespace asmdpp
