#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace subdisc {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

// ============================================================================
// Vector helpers
// ============================================================================

// <a|b>, conjugate-linear in the first argument.
Complex inner(const CVector& a, const CVector& b);
double norm(const CVector& v);
CVector normalized(const CVector& v);

// ============================================================================
// Dense complex matrix
// ============================================================================

// Row-major dense complex matrix. Everything here is O(n^3) without blocking;
// the problems this library solves live in dimension <= a few hundred.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const CMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex s, const CMatrix& a);
inline CMatrix operator*(double s, const CMatrix& a) { return Complex(s, 0.0) * a; }
CVector operator*(const CMatrix& a, const CVector& x);

CMatrix adjoint(const CMatrix& m);
Complex trace(const CMatrix& m);
double max_abs(const CMatrix& m);

// |a><b|
CMatrix outer(const CVector& a, const CVector& b);
// sum_i |b_i><b_i| over an orthonormal family
CMatrix projector_onto(const std::vector<CVector>& basis);
CMatrix kron(const CMatrix& a, const CMatrix& b);

// <x|A|x>
Complex expectation(const CMatrix& a, const CVector& x);

// ============================================================================
// Decompositions
// ============================================================================

// Gram-Schmidt with re-orthogonalization. Vectors whose residual norm falls
// below tol * (largest input norm) are treated as linearly dependent and
// dropped, so the result size is the numerical rank of the span.
std::vector<CVector> orthonormalize(const std::vector<CVector>& vectors, double tol = 1e-10);

struct EigenSystem {
  std::vector<double> values;    // real, descending
  std::vector<CVector> vectors;  // orthonormal; vectors[i] pairs values[i]
};

// Cyclic Jacobi for Hermitian input; throws NotHermitian when
// ||A - A^dagger||_max > 1e-10 * ||A||_max.
EigenSystem hermitian_eig(const CMatrix& a);

struct Svd {
  CMatrix u;                  // orthonormal columns
  std::vector<double> sigma;  // >= 0, descending
  CMatrix v;                  // orthonormal columns; m = u diag(sigma) v^dagger
};

// Via hermitian_eig of m^dagger m, with back-substitution for u and a
// Rayleigh refinement of the singular values.
Svd svd(const CMatrix& m);

}  // namespace subdisc
