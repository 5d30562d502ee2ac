#include "subdisc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "subdisc/errors.hpp"

namespace subdisc {

// ============================================================================
// Vector helpers
// ============================================================================

Complex inner(const CVector& a, const CVector& b) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

double norm(const CVector& v) {
  double sum = 0.0;
  for (const Complex& x : v) sum += std::norm(x);
  return std::sqrt(sum);
}

CVector normalized(const CVector& v) {
  const double n = norm(v);
  CVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / n;
  return out;
}

// ============================================================================
// Matrix arithmetic
// ============================================================================

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex(0.0)) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

CMatrix operator*(Complex s, const CMatrix& a) {
  CMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = s * a(r, c);
  return out;
}

CVector operator*(const CMatrix& a, const CVector& x) {
  CVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Complex sum = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c) sum += a(r, c) * x[c];
    out[r] = sum;
  }
  return out;
}

CMatrix adjoint(const CMatrix& m) {
  CMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = std::conj(m(r, c));
  return out;
}

Complex trace(const CMatrix& m) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) sum += m(i, i);
  return sum;
}

double max_abs(const CMatrix& m) {
  double best = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) best = std::max(best, std::abs(m(r, c)));
  return best;
}

CMatrix outer(const CVector& a, const CVector& b) {
  CMatrix out(a.size(), b.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < b.size(); ++c) out(r, c) = a[r] * std::conj(b[c]);
  return out;
}

CMatrix projector_onto(const std::vector<CVector>& basis) {
  if (basis.empty()) throw EmptyInput("projector_onto needs at least one vector");
  CMatrix out(basis[0].size(), basis[0].size());
  for (const CVector& b : basis) {
    for (std::size_t r = 0; r < b.size(); ++r)
      for (std::size_t c = 0; c < b.size(); ++c) out(r, c) += b[r] * std::conj(b[c]);
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex f = a(ar, ac);
      if (f == Complex(0.0)) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = f * b(br, bc);
    }
  return out;
}

Complex expectation(const CMatrix& a, const CVector& x) { return inner(x, a * x); }

// ============================================================================
// Orthonormalization
// ============================================================================

std::vector<CVector> orthonormalize(const std::vector<CVector>& vectors, double tol) {
  if (vectors.empty()) throw EmptyInput("orthonormalize needs at least one vector");
  if (tol <= 0.0) throw InvalidArgument("orthonormalize tolerance must be positive");
  const std::size_t dim = vectors[0].size();
  double max_norm = 0.0;
  for (const CVector& v : vectors) {
    if (v.size() != dim) throw DimensionMismatch("orthonormalize: mixed vector lengths");
    max_norm = std::max(max_norm, norm(v));
  }

  std::vector<CVector> basis;
  for (const CVector& v : vectors) {
    CVector w = v;
    // two projection passes keep the basis orthogonal to ~machine precision
    for (int pass = 0; pass < 2; ++pass) {
      for (const CVector& b : basis) {
        const Complex c = inner(b, w);
        for (std::size_t i = 0; i < dim; ++i) w[i] -= c * b[i];
      }
    }
    const double residual = norm(w);
    if (residual > tol * max_norm) {
      for (std::size_t i = 0; i < dim; ++i) w[i] /= residual;
      basis.push_back(std::move(w));
    }
  }
  return basis;
}

// ============================================================================
// Hermitian eigensolver (cyclic Jacobi)
// ============================================================================

namespace {

double off_diagonal_norm(const CMatrix& m) {
  double sum = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c) sum += std::norm(m(r, c));
  return std::sqrt(sum);
}

}  // namespace

EigenSystem hermitian_eig(const CMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw DimensionMismatch("hermitian_eig: matrix is not square");
  const double scale = max_abs(a);
  if (max_abs(a - adjoint(a)) > 1e-10 * std::max(scale, 1e-300))
    throw NotHermitian("hermitian_eig: ||A - A^dagger||_max exceeds 1e-10 * ||A||_max");

  // exact symmetrization removes the (tiny) permitted asymmetry up front
  CMatrix m = 0.5 * (a + adjoint(a));
  CMatrix v = CMatrix::identity(n);

  const double stop = 1e-15 * static_cast<double>(n) * std::max(scale, 1e-300);
  const int max_sweeps = 60;
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(m) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = m(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) {
          m(p, q) = m(q, p) = 0.0;
          continue;
        }
        const double app = m(p, p).real();
        const double aqq = m(q, q).real();

        // absorb the phase of the pivot, then a real Jacobi rotation
        const Complex u = apq / mag;            // m(p,q) = u * mag
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // plane rotation G: G(p,p)=c, G(p,q)=s, G(q,p)=-conj(u)s, G(q,q)=conj(u)c
        const Complex gqp = -std::conj(u) * s;
        const Complex gqq = std::conj(u) * c;

        // columns: M <- M G
        for (std::size_t r = 0; r < n; ++r) {
          const Complex mp = m(r, p), mq = m(r, q);
          m(r, p) = mp * c + mq * gqp;
          m(r, q) = mp * s + mq * gqq;
        }
        // rows: M <- G^dagger M
        for (std::size_t r = 0; r < n; ++r) {
          const Complex mp = m(p, r), mq = m(q, r);
          m(p, r) = c * mp + std::conj(gqp) * mq;
          m(q, r) = s * mp + std::conj(gqq) * mq;
        }
        m(p, q) = m(q, p) = 0.0;
        m(p, p) = Complex(m(p, p).real(), 0.0);
        m(q, q) = Complex(m(q, q).real(), 0.0);

        // accumulate eigenvectors: V <- V G
        for (std::size_t r = 0; r < n; ++r) {
          const Complex vp = v(r, p), vq = v(r, q);
          v(r, p) = vp * c + vq * gqp;
          v(r, q) = vp * s + vq * gqq;
        }
      }
    }
  }
  if (sweep == max_sweeps && off_diagonal_norm(m) > 1e-8 * std::max(scale, 1e-300))
    throw NonConvergence("hermitian_eig: Jacobi sweeps did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return m(i, i).real() > m(j, j).real(); });

  EigenSystem out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t idx : order) {
    out.values.push_back(m(idx, idx).real());
    CVector col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = v(r, idx);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

// ============================================================================
// SVD
// ============================================================================

Svd svd(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw EmptyInput("svd of an empty matrix");
  if (m.rows() < m.cols()) {
    Svd t = svd(adjoint(m));
    return Svd{std::move(t.v), std::move(t.sigma), std::move(t.u)};
  }
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  const EigenSystem eig = hermitian_eig(adjoint(m) * m);  // descending

  CMatrix v(cols, cols);
  std::vector<double> sigma(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    sigma[j] = std::sqrt(std::max(eig.values[j], 0.0));
    for (std::size_t r = 0; r < cols; ++r) v(r, j) = eig.vectors[j][r];
  }
  const double sigma_max = sigma.empty() ? 0.0 : sigma[0];

  // back-substitute u = m v / sigma where sigma is meaningful, complete the
  // remaining columns to an orthonormal family otherwise
  std::vector<CVector> u_cols;
  u_cols.reserve(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    CVector col;
    if (sigma[j] > 1e-8 * std::max(sigma_max, 1.0) && sigma[j] > 0.0) {
      col = m * eig.vectors[j];
      for (Complex& x : col) x /= sigma[j];
    } else {
      col.assign(rows, 0.0);
    }
    // clean against previous columns; escalate to basis completion when the
    // candidate is (near) dependent
    for (int pass = 0; pass < 2; ++pass)
      for (const CVector& b : u_cols) {
        const Complex c = inner(b, col);
        for (std::size_t r = 0; r < rows; ++r) col[r] -= c * b[r];
      }
    double residual = norm(col);
    if (residual < 0.5) {
      for (std::size_t axis = 0; axis < rows && residual < 0.5; ++axis) {
        col.assign(rows, 0.0);
        col[axis] = 1.0;
        for (int pass = 0; pass < 2; ++pass)
          for (const CVector& b : u_cols) {
            const Complex c = inner(b, col);
            for (std::size_t r = 0; r < rows; ++r) col[r] -= c * b[r];
          }
        residual = norm(col);
      }
      if (residual < 0.5) throw NonConvergence("svd: failed to complete the left basis");
    }
    for (Complex& x : col) x /= residual;
    u_cols.push_back(std::move(col));
  }

  CMatrix u(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t r = 0; r < rows; ++r) u(r, j) = u_cols[j][r];

  // Rayleigh refinement: diag(u^dagger m v) recovers the singular values to
  // full precision even when sigma^2 sits at rounding level
  const CMatrix cross = adjoint(u) * (m * v);
  for (std::size_t j = 0; j < cols; ++j) {
    double refined = cross(j, j).real();
    if (refined < 0.0) {
      refined = -refined;
      for (std::size_t r = 0; r < rows; ++r) u(r, j) = -u(r, j);
    }
    sigma[j] = refined;
  }

  // refinement can perturb exact ties by an ulp; restore descending order
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });
  Svd out;
  out.u = CMatrix(rows, cols);
  out.v = CMatrix(cols, cols);
  out.sigma.resize(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    out.sigma[j] = sigma[order[j]];
    for (std::size_t r = 0; r < rows; ++r) out.u(r, j) = u(r, order[j]);
    for (std::size_t r = 0; r < cols; ++r) out.v(r, j) = v(r, order[j]);
  }
  return out;
}

}  // namespace subdisc
