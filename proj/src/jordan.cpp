#include "subdisc/jordan.hpp"

#include <cmath>
#include <string>

#include "subdisc/errors.hpp"

namespace subdisc {

namespace {

constexpr double kGeneralPositionTol = 1e-8;

}  // namespace

Subspace make_subspace(std::size_t ambient_dim, std::vector<CVector> spanning_vectors,
                       double tol) {
  if (spanning_vectors.empty()) throw EmptyInput("make_subspace: no spanning vectors");
  for (const CVector& v : spanning_vectors)
    if (v.size() != ambient_dim)
      throw DimensionMismatch("make_subspace: vector length " + std::to_string(v.size()) +
                              " does not match ambient dimension " + std::to_string(ambient_dim));

  Subspace s;
  s.ambient_dim = ambient_dim;
  s.basis = orthonormalize(spanning_vectors, tol);
  if (s.basis.empty()) throw ZeroSubspace("make_subspace: spanning set has numerical rank 0");
  s.spanning_vectors = std::move(spanning_vectors);
  s.projector = projector_onto(s.basis);
  return s;
}

JordanDecomposition jordan_decompose(const Subspace& s1, const Subspace& s2) {
  if (s1.ambient_dim != s2.ambient_dim)
    throw DimensionMismatch("jordan_decompose: ambient dimensions differ");
  const std::size_t k = s1.dim();
  if (s2.dim() != k)
    throw DimensionMismatch("jordan_decompose: subspace dimensions differ (" +
                            std::to_string(k) + " vs " + std::to_string(s2.dim()) + ")");
  if (s1.ambient_dim != 2 * k)
    throw DimensionMismatch("jordan_decompose: ambient dimension must be twice the subspace "
                            "dimension, got " + std::to_string(s1.ambient_dim) + " for k = " +
                            std::to_string(k));

  // cross-Gram of the orthonormal bases; its singular values are the
  // principal overlaps and its singular bases rotate each side into Jordan
  // position
  CMatrix gram(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) gram(a, b) = inner(s1.basis[a], s2.basis[b]);

  const Svd dec = svd(gram);
  for (double sv : dec.sigma)
    if (sv > 1.0 - kGeneralPositionTol)
      throw NotGeneralPosition("jordan_decompose: principal overlap " + std::to_string(sv) +
                               " indicates a shared direction");

  JordanDecomposition jd;
  jd.k = k;
  jd.cos_angles = dec.sigma;
  for (double& c : jd.cos_angles) c = std::min(std::max(c, 0.0), 1.0);

  const std::size_t dim = s1.ambient_dim;
  jd.basis1.assign(k, CVector(dim));
  jd.basis2.assign(k, CVector(dim));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      const Complex cu = dec.u(a, i);
      const Complex cv = dec.v(a, i);
      for (std::size_t r = 0; r < dim; ++r) {
        jd.basis1[i][r] += cu * s1.basis[a][r];
        jd.basis2[i][r] += cv * s2.basis[a][r];
      }
    }
  }

  auto frames = complement_frames(jd);
  jd.z_frame = std::move(frames.first);
  jd.y_frame = std::move(frames.second);
  return jd;
}

std::pair<std::vector<CVector>, std::vector<CVector>> complement_frames(
    const JordanDecomposition& jd) {
  std::vector<CVector> z(jd.k), y(jd.k);
  for (std::size_t i = 0; i < jd.k; ++i) {
    const double c = jd.cos_angles[i];
    const double s2 = 1.0 - c * c;
    if (s2 < kGeneralPositionTol * kGeneralPositionTol)
      throw DegenerateSector("complement_frames: sin(theta) below 1e-8 in sector " +
                             std::to_string(i));
    const double s = std::sqrt(s2);
    const std::size_t dim = jd.basis1[i].size();
    z[i].resize(dim);
    y[i].resize(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      z[i][r] = (jd.basis1[i][r] - c * jd.basis2[i][r]) / s;
      y[i][r] = (jd.basis2[i][r] - c * jd.basis1[i][r]) / s;
    }
  }
  return {std::move(z), std::move(y)};
}

}  // namespace subdisc
