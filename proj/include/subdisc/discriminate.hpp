#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subdisc/jordan.hpp"
#include "subdisc/linalg.hpp"

namespace subdisc {

// ============================================================================
// Problem definition
// ============================================================================

// Two states diagonal in the Jordan bases of their supports: the first with
// spectrum alpha on basis1, the second with spectrum beta on basis2. The
// scalar pipeline (failure probability, intervals, fidelity) needs only the
// angles and weights; assembling operators additionally needs the frames.
struct DiscriminationProblem {
  std::size_t k = 0;
  std::vector<double> cos_angles;  // descending, in [0, 1)
  std::vector<double> alpha;       // > 0, sums to 1
  std::vector<double> beta;        // > 0, sums to 1
  std::optional<JordanDecomposition> jordan;

  bool has_frames() const { return jordan.has_value(); }
};

// Angle-only form. Empty weight vectors default to uniform.
DiscriminationProblem make_problem(std::vector<double> cos_angles,
                                   std::vector<double> alpha = {},
                                   std::vector<double> beta = {});

// From explicit subspaces; runs the Jordan decomposition and attaches weights
// to sectors in descending-angle order.
DiscriminationProblem problem_from_subspaces(const Subspace& s1, const Subspace& s2,
                                   std::vector<double> alpha = {},
                                   std::vector<double> beta = {});

// rho1 = sum_i alpha_i |psi_i><psi_i|, rho2 likewise on basis2 (frames
// required).
std::pair<CMatrix, CMatrix> density_matrices(const DiscriminationProblem& problem);

// ============================================================================
// Per-sector optimum
// ============================================================================

struct SectorInterval {
  double c = 0.0;
  double d = 0.0;

  bool contains(double eta) const { return c <= eta && eta <= d; }
};

// I_i = [beta cos^2/ (alpha + beta cos^2), beta / (beta + alpha cos^2)]
std::vector<SectorInterval> sector_intervals(const DiscriminationProblem& problem);

enum class Regime { Below, Interior, Above };
const char* to_string(Regime regime);

struct SectorSolution {
  std::size_t index = 0;  // 0-based sector
  Regime regime = Regime::Interior;
  double q1_bar = 0.0;  // failure probability of |psi_i>
  double q2_bar = 0.0;  // failure probability of |psi_{i+k}>
  double lambda = 0.0;  // nonzero eigenvalue of the sector's inconclusive operator
  CVector zeta;         // its eigenvector, unit norm, coordinates in (|psi_i>, |psi_{i+k}>)
  double sector_prior = 0.0;  // p(T_i)
  double cond_prob1 = 0.0;    // p(i | T_i)
  double cond_prob2 = 0.0;    // p(i+k | T_i)
};

// The minimizing failure profile at prior eta. Intervals are treated as
// closed: at an endpoint the interior formula coincides with the adjacent
// projective branch.
std::vector<SectorSolution> optimal_profile(const DiscriminationProblem& problem, double eta);

// ============================================================================
// Assembled measurement
// ============================================================================

struct PovmSolution {
  double eta = 0.0;
  std::vector<SectorSolution> sectors;
  CMatrix pi0, pi1, pi2;
  double q_total = 0.0;
  double fidelity_bound = 0.0;  // 2 sqrt(eta (1-eta)) F
  bool saturates_bound = false;
};

// Requires frames. pi1 lives on the kernel of the second state's support,
// pi2 on the kernel of the first, pi0 = I - pi1 - pi2.
PovmSolution build_povm(const DiscriminationProblem& problem, double eta);

// Q(eta) = sum_i [eta alpha_i q1_i + (1-eta) beta_i q2_i]; angles suffice.
double failure_probability(const DiscriminationProblem& problem, double eta);

// F = sum_i sqrt(alpha_i beta_i) cos(theta_i)
double fidelity(const DiscriminationProblem& problem);

// Intersection of the sector intervals; priors inside it attain the fidelity
// bound. Empty intersection -> nullopt.
std::optional<SectorInterval> saturation_interval(const DiscriminationProblem& problem);

// ============================================================================
// Validation
// ============================================================================

struct CheckResult {
  std::string name;
  double value = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  const CheckResult& find(const std::string& name) const;
};

// Completeness, positivity, unambiguity, inconclusive-operator rank and
// failure-probability consistency of an assembled solution. Failures are
// report entries, never exceptions.
ValidationReport validate_povm(const PovmSolution& solution,
                               const DiscriminationProblem& problem);

}  // namespace subdisc
