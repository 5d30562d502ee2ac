#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "subdisc/linalg.hpp"

namespace subdisc {

// A subspace of C^ambient_dim given by spanning vectors, together with the
// derived orthonormal basis and projector. The stored dimension is the
// numerical rank of the spanning set.
struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<CVector> spanning_vectors;
  std::vector<CVector> basis;  // orthonormal
  CMatrix projector;

  std::size_t dim() const { return basis.size(); }
};

Subspace make_subspace(std::size_t ambient_dim, std::vector<CVector> spanning_vectors,
                       double tol = 1e-10);

// Paired orthonormal bases of two k-dimensional subspaces of C^{2k} whose
// cross overlaps are diagonal: <basis1[i]|basis2[j]> = delta_ij cos_angles[i],
// with the overlaps real, nonnegative and sorted descending. z_frame spans
// the kernel of the second projector, y_frame the kernel of the first; sector
// i is the plane spanned by (basis1[i], basis2[i]).
struct JordanDecomposition {
  std::size_t k = 0;
  std::vector<CVector> basis1;
  std::vector<CVector> basis2;
  std::vector<double> cos_angles;  // descending, in [0, 1)
  std::vector<CVector> z_frame;
  std::vector<CVector> y_frame;

  std::size_t ambient_dim() const { return 2 * k; }
};

// Requires dim(s1) = dim(s2) = k, ambient = 2k, and general position
// (every principal overlap <= 1 - 1e-8). Intersecting pairs are rejected,
// not reduced.
JordanDecomposition jordan_decompose(const Subspace& s1, const Subspace& s2);

// Per-sector unit normals: z_i = (psi_i - cos t_i psi_{i+k}) / sin t_i and
// y_i = (psi_{i+k} - cos t_i psi_i) / sin t_i. Throws DegenerateSector when
// some sin t_i < 1e-8.
std::pair<std::vector<CVector>, std::vector<CVector>> complement_frames(
    const JordanDecomposition& jd);

}  // namespace subdisc
