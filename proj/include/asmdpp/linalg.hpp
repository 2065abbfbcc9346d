#pragma once

#include <utility>
#include <vector>

#include "asmdpp/errors.hpp"
#include "asmdpp/mpoly.hpp"
#include "asmdpp/nu.hpp"
#include "asmdpp/ratfun.hpp"

namespace asmdpp {

template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

  Mat transpose() const {
    Mat m(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  Mat operator+(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw InvalidObject("matrix shape mismatch in +");
    Mat m(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
    return m;
  }
  Mat operator-(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw InvalidObject("matrix shape mismatch in -");
    Mat m(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
    return m;
  }
  Mat operator*(const Mat& o) const {
    if (c_ != o.r_) throw InvalidObject("matrix shape mismatch in *");
    Mat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const T& v = (*this)(i, k);
        if (v == T()) continue;
        for (int j = 0; j < o.c_; ++j) m(i, j) += v * o(k, j);
      }
    return m;
  }

  // Submatrix keeping the given (ordered) row and column index lists.
  Mat submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Mat m(int(rows.size()), int(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j) m(int(i), int(j)) = (*this)(rows[i], cols[j]);
    return m;
  }

  // Matrix with row i and column j removed.
  Mat minor_matrix(int i, int j) const {
    std::vector<int> rs, cs;
    for (int k = 0; k < r_; ++k)
      if (k != i) rs.push_back(k);
    for (int k = 0; k < c_; ++k)
      if (k != j) cs.push_back(k);
    return submatrix(rs, cs);
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

// Fraction-free (Bareiss) elimination: every division is exact in the entry
// ring. Requires T::exact_div. Default path for MPoly entries.
template <class T>
T det_bareiss(Mat<T> m) {
  if (m.rows() != m.cols()) throw InvalidObject("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == T()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!(m(i, k) == T())) { p = i; break; }
      if (p < 0) return T();
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)).exact_div(prev);
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return sign < 0 ? T() - d : d;
}

template <class T>
T ring_inverse_field(const T& v) {
  return v.inverse();
}
inline Rat ring_inverse_field(const Rat& v) {
  if (v == 0) throw DivisionByZero();
  return 1 / v;
}

// Gaussian elimination over a field (RatFun, Rat).
template <class T>
T det_gauss(Mat<T> m) {
  if (m.rows() != m.cols()) throw InvalidObject("determinant of non-square matrix");
  int n = m.rows();
  T det(1);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (!(m(i, k) == T())) { p = i; break; }
    if (p < 0) return T();
    if (p != k) {
      for (int j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
      det = T() - det;
    }
    det = det * m(k, k);
    T inv = ring_inverse_field(m(k, k));
    for (int i = k + 1; i < n; ++i) {
      if (m(i, k) == T()) continue;
      T f = m(i, k) * inv;
      for (int j = k + 1; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
    }
  }
  return det;
}

// Division-free determinant by Laplace-expansion dynamic programming over
// column subsets: O(2^n n) ring operations. Used for rings with zero divisors
// (NuElem) where elimination pivots may be non-invertible.
template <class T>
T det_division_free(const Mat<T>& m) {
  if (m.rows() != m.cols()) throw InvalidObject("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return T(1);
  if (n > 24) throw SizeTooSmall("division-free determinant limited to n <= 24");
  std::vector<T> dp(size_t(1) << n);
  dp[0] = T(1);
  for (unsigned S = 1; S < dp.size(); ++S) {
    int k = __builtin_popcount(S) - 1;  // row index being expanded
    T acc{};
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(S >> j & 1)) continue;
      if (!(m(k, j) == T())) {
        T t = m(k, j) * dp[S & ~(1u << j)];
        if ((k + pos) % 2 == 0)
          acc = acc + t;
        else
          acc = acc - t;
      }
      ++pos;
    }
    dp[S] = acc;
  }
  return dp[dp.size() - 1];
}

// Per-ring default determinant strategy.
inline MPoly det(const Mat<MPoly>& m) { return det_bareiss(m); }
inline RatFun det(const Mat<RatFun>& m) { return det_gauss(m); }
inline Rat det(const Mat<Rat>& m) { return det_gauss(m); }
inline NuElem det(const Mat<NuElem>& m) { return det_division_free(m); }

// Unitriangular sandwich (I - a S) M (I - b S^T) of an n x n truncation,
// with S the lower shift matrix. Determinant-preserving.
template <class T>
Mat<T> sandwich(const T& a, const Mat<T>& m, const T& b) {
  int n = m.rows();
  if (n != m.cols()) throw InvalidObject("sandwich needs a square matrix");
  Mat<T> l = Mat<T>::identity(n), u = Mat<T>::identity(n);
  for (int i = 1; i < n; ++i) {
    l(i, i - 1) = T() - a;
    u(i - 1, i) = T() - b;
  }
  return l * m * u;
}

// Desnanot-Jacobi:
//   det(A) det(A with first+last rows/cols removed)
//     = det(A^{del r0,c0}) det(A^{del r_{n-1},c_{n-1}})
//     - det(A^{del r0,c_{n-1}}) det(A^{del r_{n-1},c0})
template <class T>
bool desnanot_jacobi_check(const Mat<T>& a) {
  int n = a.rows();
  if (n != a.cols() || n < 2) throw SizeTooSmall("Desnanot-Jacobi needs a square matrix, n >= 2");
  std::vector<int> inner;
  for (int k = 1; k + 1 < n; ++k) inner.push_back(k);
  T lhs = det(a) * det(a.submatrix(inner, inner));
  T rhs = det(a.minor_matrix(0, 0)) * det(a.minor_matrix(n - 1, n - 1)) -
          det(a.minor_matrix(0, n - 1)) * det(a.minor_matrix(n - 1, 0));
  return lhs == rhs;
}

}  // namespace asmdpp
