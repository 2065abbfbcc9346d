#pragma once

#include "asmdpp/genfun.hpp"

namespace asmdpp {

// The Lorentzian transfer matrix T(g,a) and its structured-family avatar
// T(ga, ga, g^2(1-a^2)); phi(g,a) = (1 - g^2(1-a^2))/(ag) parametrizes the
// commuting variety.
RatFun lorentz_phi(const RatFun& g, const RatFun& a);
RatFun t_entry(const RatFun& g, const RatFun& a, int i, int j);
StructParams t_struct(const RatFun& g, const RatFun& a);
RatFun t_gf(const RatFun& g, const RatFun& a);
// Two-region lattice-path partition function: monotone paths (i,0) -> (0,j),
// vertical steps weigh g below the diagonal and ga on/above it, horizontal
// steps the other way around.
RatFun t_path_oracle(const RatFun& g, const RatFun& a, int i, int j);

// V(g,a) = L(1/a, ga); T^{[0,k]} = V^{[0,k]} (V^{[0,k]})^t with
// det = g^{k(k+1)}, valid for every truncation by triangularity.
StructParams v_struct(const RatFun& g, const RatFun& a);
bool vvt_factorization_check(int k);

// Commuting one-parameter family T_{s,t}(alpha) = T(alpha, s alpha,
// 1 - t alpha) and its lower-triangular s=0 member L_t(alpha).
StructParams t_family(const RatFun& s, const RatFun& t, const RatFun& alpha);
StructParams l_family(const RatFun& t, const RatFun& alpha);

// Smallest gvar-order at which an entry of AB - BA is nonzero on the
// window x window corner, or -1 if the commutator vanishes to the given
// order (the diagnostic reported by the CLI).
int commute_order(const InfMatrix& a, const InfMatrix& b, const std::string& gvar, int order,
                  Grading grading, int window);

// Exact commutation through the closed-form structured products (propsix);
// the right tool for fully rational parameter samples, where no grading
// variable is available.
bool commute_exact(const StructParams& p, const StructParams& q);

// Rational a' with phi(g', a') = t, from the quadratic
// alpha'^2 - t alpha' + 1 - g'^2 = 0; throws DegenerateParameters when the
// discriminant is not a rational square.
Rat solve_variety_a(const Rat& t, const Rat& gp);

// Addition formulas: the T_{s,t} and L_t parameter identities through
// structured products, the pseudo-exponential change of variables
// alpha = (1 - e^{-ta})/t as a truncated series, the matrix exponential
// exp(-a M_t) against the l_t entries, and the tau_{r,t} family.
bool t_family_addition_check();
bool l_family_addition_check();
bool pseudoexp_addition_check(int order);
bool matrix_exponential_check(int k, int order);
bool tau_addition_check();
bool addition_formulas_check();

// Spectral decomposition in the (q, lambda) variables: lambda^p slices of
// f = (1 - lambda q^2)/((1-qu)(1-qv) - lambda (u-q)(v-q)) against the
// unnormalized eigenvector generating functions
// vt^(m)(u) = (q-u)^m/(1-qu)^{m+1}, orthonormality as a q-series, and the
// eigenvalue asymptotics Lambda^(m) = g^{2m}(1 + O(g^2)) at rational a.
RatFun eigvec_gf(int m, const std::string& uvar = "u");
bool spectral_slice_check(int pmax);
bool orthonormality_check(int mmax, int qorder);
bool eigenvalue_asymptotics_check(const Rat& a, int mmax, int order);

// Intersection of the six-vertex and Lorentzian varieties (Section 6.2):
// sqrt(x) = p(q^2-1)/(p^2 q^2 - 1), sqrt(y) = q(p^2-1)/(p^2 q^2 - 1), with
// the certificates phi(x,y) = q + 1/q and psi(x,y) = p + 1/p checked
// exactly. Throws DegenerateParameters off the admissible range.
struct VarietyPoint {
  Rat x, y, sqrt_x, sqrt_y;
};
VarietyPoint variety_intersection(const Rat& p, const Rat& q);

// f_G(u/sqrt(x), v sqrt(x)) = f_{T(g,a)} under x = g^2 a^2, y = g^2.
bool g_bridge_check();

}  // namespace asmdpp
