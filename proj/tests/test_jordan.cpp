#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "subdisc/errors.hpp"
#include "subdisc/jordan.hpp"
#include "testutil.hpp"

using namespace subdisc;
using testutil::basis_state;
using testutil::max_entry_diff;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Subspace axis_plane() { return make_subspace(4, {basis_state(4, 0), basis_state(4, 1)}); }

Subspace tilted_plane() {
  return make_subspace(4, {{Complex(kInvSqrt2), 0.0, Complex(kInvSqrt2), 0.0},
                           {0.0, Complex(kInvSqrt2), 0.0, Complex(kInvSqrt2)}});
}

}  // namespace

TEST_CASE("make_subspace of the first two axes") {
  const Subspace s = axis_plane();
  REQUIRE(s.dim() == 2);
  CMatrix expected(4, 4);
  expected(0, 0) = expected(1, 1) = 1.0;
  CHECK(max_entry_diff(s.projector, expected) < 1e-13);
}

TEST_CASE("make_subspace of the tilted plane") {
  const Subspace s = tilted_plane();
  REQUIRE(s.dim() == 2);
  CMatrix expected(4, 4);
  expected(0, 0) = expected(0, 2) = expected(2, 0) = expected(2, 2) = 0.5;
  expected(1, 1) = expected(1, 3) = expected(3, 1) = expected(3, 3) = 0.5;
  CHECK(max_entry_diff(s.projector, expected) < 1e-12);
}

TEST_CASE("make_subspace collapses dependent spans") {
  CVector doubled = basis_state(4, 0);
  for (Complex& x : doubled) x *= 2.0;
  const Subspace s = make_subspace(4, {basis_state(4, 0), doubled});
  CHECK(s.dim() == 1);
}

TEST_CASE("make_subspace validates its input") {
  CHECK_THROWS_AS(make_subspace(4, {basis_state(3, 0)}), DimensionMismatch);
  CHECK_THROWS_AS(make_subspace(4, {}), EmptyInput);
  CHECK_THROWS_AS(make_subspace(4, {CVector(4)}), ZeroSubspace);
}

TEST_CASE("subspace projectors are hermitian idempotent with trace k") {
  std::mt19937_64 gen(5);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t dim = 6;
    std::vector<CVector> span;
    for (int i = 0; i < 3; ++i) span.push_back(testutil::random_vector(dim, gen));
    const Subspace s = make_subspace(dim, span);
    CHECK(max_entry_diff(s.projector, adjoint(s.projector)) < 1e-12);
    CHECK(max_entry_diff(s.projector * s.projector, s.projector) < 1e-10);
    CHECK(std::abs(trace(s.projector).real() - static_cast<double>(s.dim())) < 1e-10);
  }
}

TEST_CASE("the worked example has two half-overlap angles") {
  const JordanDecomposition jd = jordan_decompose(axis_plane(), tilted_plane());
  REQUIRE(jd.k == 2);
  CHECK(std::abs(jd.cos_angles[0] - 0.7071067811865476) < 1e-12);
  CHECK(std::abs(jd.cos_angles[1] - 0.7071067811865476) < 1e-12);
}

TEST_CASE("an already-diagonal cross-Gram reads off the overlaps") {
  const double a = 1.0 / std::sqrt(2.0);
  const double b = 1.0 / std::sqrt(5.0);
  const Subspace s2 = make_subspace(4, {{Complex(a), 0.0, Complex(a), 0.0},
                                        {0.0, Complex(b), 0.0, Complex(2.0 * b)}});
  const JordanDecomposition jd = jordan_decompose(axis_plane(), s2);
  CHECK(std::abs(jd.cos_angles[0] - 0.7071067811865476) < 1e-12);
  CHECK(std::abs(jd.cos_angles[1] - 0.4472135954999579) < 1e-12);
}

TEST_CASE("a shared direction is rejected") {
  const Subspace s2 = make_subspace(4, {basis_state(4, 0), basis_state(4, 2)});
  CHECK_THROWS_AS(jordan_decompose(axis_plane(), s2), NotGeneralPosition);
}

TEST_CASE("dimension checks fire before decomposition") {
  const Subspace line = make_subspace(4, {basis_state(4, 3)});
  CHECK_THROWS_AS(jordan_decompose(axis_plane(), line), DimensionMismatch);

  const Subspace big1 = make_subspace(6, {basis_state(6, 0), basis_state(6, 1)});
  const Subspace big2 = make_subspace(6, {basis_state(6, 2), basis_state(6, 3)});
  CHECK_THROWS_AS(jordan_decompose(big1, big2), DimensionMismatch);
}

TEST_CASE("complement frames of the worked example") {
  const JordanDecomposition jd = jordan_decompose(axis_plane(), tilted_plane());
  // z1 = (|0> - |2>)/sqrt2, y1 = |2>
  CHECK(std::abs(jd.z_frame[0][0] - kInvSqrt2) < 1e-12);
  CHECK(std::abs(jd.z_frame[0][2] + kInvSqrt2) < 1e-12);
  CHECK(std::abs(jd.z_frame[0][1]) < 1e-12);
  CHECK(std::abs(jd.z_frame[0][3]) < 1e-12);
  CHECK(std::abs(jd.y_frame[0][2] - 1.0) < 1e-12);
  CHECK(std::abs(jd.y_frame[0][0]) < 1e-12);
}

TEST_CASE("orthogonal subspaces give trivial frames") {
  const Subspace s2 = make_subspace(4, {basis_state(4, 2), basis_state(4, 3)});
  const JordanDecomposition jd = jordan_decompose(axis_plane(), s2);
  CHECK(jd.cos_angles[0] < 1e-12);
  CHECK(jd.cos_angles[1] < 1e-12);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(std::abs(std::abs(inner(jd.z_frame[i], jd.basis1[i])) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(inner(jd.y_frame[i], jd.basis2[i])) - 1.0) < 1e-12);
  }
}

TEST_CASE("complement_frames rejects near-degenerate sectors") {
  JordanDecomposition jd;
  jd.k = 1;
  jd.basis1 = {basis_state(2, 0)};
  jd.basis2 = {basis_state(2, 0)};
  jd.cos_angles = {1.0};  // sin(theta) = 0
  CHECK_THROWS_AS(complement_frames(jd), DegenerateSector);
}

TEST_CASE("decomposition invariants hold on random pairs") {
  std::mt19937_64 gen(42);
  for (int rep = 0; rep < 25; ++rep) {
    const std::size_t k = 1 + gen() % 4;
    const auto problem = testutil::random_problem(k, gen);
    const JordanDecomposition& jd = *problem.jordan;
    const std::size_t dim = jd.ambient_dim();

    // diagonal overlaps with real nonnegative entries, sorted descending
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const Complex overlap = inner(jd.basis1[i], jd.basis2[j]);
        const double expected = i == j ? jd.cos_angles[i] : 0.0;
        CHECK(std::abs(overlap - expected) < 1e-9);
      }
      if (i > 0) CHECK(jd.cos_angles[i] <= jd.cos_angles[i - 1] + 1e-15);
    }

    const CMatrix p1 = projector_onto(jd.basis1);
    const CMatrix p2 = projector_onto(jd.basis2);
    for (std::size_t i = 0; i < k; ++i) {
      const double cos2 = jd.cos_angles[i] * jd.cos_angles[i];
      const double sin_t = std::sqrt(1.0 - cos2);

      // basis vectors are eigenvectors of the alternating projections
      CVector lhs = p1 * (p2 * (p1 * jd.basis1[i]));
      for (std::size_t r = 0; r < dim; ++r) lhs[r] -= cos2 * jd.basis1[i][r];
      CHECK(norm(lhs) < 1e-9);
      lhs = p2 * (p1 * (p2 * jd.basis2[i]));
      for (std::size_t r = 0; r < dim; ++r) lhs[r] -= cos2 * jd.basis2[i][r];
      CHECK(norm(lhs) < 1e-9);

      // psi_i = sin t z_i + cos t psi_{i+k} and the mirrored relation
      for (std::size_t r = 0; r < dim; ++r) {
        const Complex d1 =
            jd.basis1[i][r] - (sin_t * jd.z_frame[i][r] + jd.cos_angles[i] * jd.basis2[i][r]);
        const Complex d2 =
            jd.basis2[i][r] - (sin_t * jd.y_frame[i][r] + jd.cos_angles[i] * jd.basis1[i][r]);
        CHECK(std::abs(d1) < 1e-9);
        CHECK(std::abs(d2) < 1e-9);
      }
    }

    // frames are orthonormal and span the kernels
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const double expected = i == j ? 1.0 : 0.0;
        CHECK(std::abs(inner(jd.z_frame[i], jd.z_frame[j]) - expected) < 1e-10);
        CHECK(std::abs(inner(jd.y_frame[i], jd.y_frame[j]) - expected) < 1e-10);
      }
    CHECK(max_entry_diff(projector_onto(jd.z_frame), CMatrix::identity(dim) - p2) < 1e-9);
    CHECK(max_entry_diff(projector_onto(jd.y_frame), CMatrix::identity(dim) - p1) < 1e-9);

    // sectors are mutually orthogonal planes
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        CHECK(std::abs(inner(jd.basis1[i], jd.basis1[j])) < 1e-9);
        CHECK(std::abs(inner(jd.basis2[i], jd.basis2[j])) < 1e-9);
        CHECK(std::abs(inner(jd.basis1[i], jd.basis2[j])) < 1e-9);
      }
  }
}

TEST_CASE("angles are invariant under recombining the spanning vectors") {
  std::mt19937_64 gen(1234);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t k = 2 + gen() % 2;
    const auto problem = testutil::random_problem(k, gen);
    const JordanDecomposition& jd = *problem.jordan;

    const CMatrix mix = testutil::random_unitary(k, gen);
    std::vector<CVector> recombined(k, CVector(2 * k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t r = 0; r < 2 * k; ++r)
          recombined[i][r] += mix(a, i) * jd.basis1[a][r];

    const Subspace s1 = make_subspace(2 * k, recombined);
    const Subspace s2 = make_subspace(2 * k, jd.basis2);
    const JordanDecomposition redo = jordan_decompose(s1, s2);
    for (std::size_t i = 0; i < k; ++i)
      CHECK(std::abs(redo.cos_angles[i] - jd.cos_angles[i]) < 1e-9);
  }
}
