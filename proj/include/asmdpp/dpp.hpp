#pragma once

#include <vector>

#include "asmdpp/asm.hpp"

namespace asmdpp {

// Descending plane partition of order n: shifted rows, row i occupying
// columns i..i+lambda_i-1; weak decrease along rows, strict decrease down
// columns, lambda_i < a_{i,i} <= lambda_{i-1} (lambda_{-1} = n).
struct DPP {
  int n = 0;
  std::vector<std::vector<int>> rows;
  bool valid() const;
  bool operator==(const DPP&) const = default;
};

// Statistics entering the weight x^S y^NS z^M w^P.
struct DppStats {
  long special = 0;     // parts with a_{i,j} <= j-i
  long nonspecial = 0;  // remaining parts
  long mcount = 0;      // parts equal to n
  long pcount = 0;      // parts equal to n-1 plus rows of length n-1
};

std::vector<DPP> enumerate_dpp(int n);
DppStats dpp_stats(const DPP& a);
MPoly dpp_weight(const DPP& a);
MPoly z_dpp_bruteforce(int n);

// Monotone lattice path from (start,0) to (0,start+2) with steps (-1,0) and
// (0,1), plus a final horizontal step to (-1,start+2). heights[t] is the
// height of the t-th horizontal step (travel order, destinations
// x = start-1, ..., 0, -1); weakly increasing, last equal to start+2.
struct Path {
  int start = 0;
  std::vector<int> heights;
  bool valid() const;
  bool operator==(const Path&) const = default;
};

struct PathFamily {
  int n = 0;
  std::vector<Path> paths;
};

// Weight of a path: height-0 steps count 1; a step to destination (x,y)
// counts x if 1 <= y <= x+1 (special region) and y otherwise; with refined,
// steps at height n count y*z instead of y.
MPoly path_weight(const Path& p, int n, bool refined);
PathFamily dpp_to_paths(const DPP& a);
DPP paths_to_dpp(const PathFamily& f);
bool family_nonintersecting(const PathFamily& f);

// Sum of weights over all single paths from (i,0) to (0,j+2); the oracle for
// the LGV matrix entries.
MPoly single_path_pf(int i, int j, int n, bool refined);
// Sum over all vertex-disjoint families of paths (k,0) -> (0,k+2),
// k ranging over subsets of {0..n-2}.
MPoly lgv_family_bruteforce(int n, bool refined);

MPoly d_entry(int i, int j);          // D_{i,j}
MPoly d_refined_entry(int i, int n);  // refined last column D'_{i,n-2}
Mat<MPoly> lgv_matrix(int n);         // D^{[0,n-2]}
Mat<MPoly> lgv_matrix_refined(int n);
MPoly z_dpp_det(int n);               // det(I + D^{[0,n-2]}) = Z(x,y,1)
MPoly z_dpp_det_refined(int n);       // det(I + D'^{[0,n-2]}) = Z(x,y,z)

RatFun h_entry(int i, int j);  // H_{i,j} = y sum_{k<i} G_{k,j}
Mat<RatFun> m_dpp(int n);      // (I + H)^{[0,n-1]}
// Refined matrix with column n-1 patched from f_{M'_DPP}'s third term;
// det = (1 + nu (z-1)) Z(x,y,z).
Mat<NuElem> m_dpp_refined(int n);
NuElem z_dpp_refined_det(int n);

// Rational-function sandwich identities between the ASM and DPP generating
// functions, in the nu-coefficient ring.
bool asm_dpp_sandwich_identity();
bool asm_dpp_sandwich_identity_refined(int n);
// Matrix-level consequences: entry-wise equality of the two unitriangular
// sandwiches of the truncations, hence equal determinants.
bool asm_dpp_sandwich_check(int n);
bool asm_dpp_sandwich_check_refined(int n);

// The quadratic relation of the doubly refined partition functions; checked
// for the brute-force family Z^{(n)}(z,w) passed as 4-variable polynomials.
bool quadratic_relation_check(const MPoly& zn, const MPoly& zn1);

}  // namespace asmdpp
