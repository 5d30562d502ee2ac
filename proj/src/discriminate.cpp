#include "subdisc/discriminate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "subdisc/errors.hpp"

namespace subdisc {

namespace {

constexpr double kWeightSumTol = 1e-12;

std::vector<double> checked_weights(std::vector<double> w, std::size_t k, const char* name) {
  if (w.empty()) w.assign(k, 1.0 / static_cast<double>(k));
  if (w.size() != k)
    throw DimensionMismatch(std::string(name) + " has " + std::to_string(w.size()) +
                            " entries for " + std::to_string(k) + " sectors");
  double sum = 0.0;
  for (double x : w) {
    if (!(x > 0.0)) throw InvalidWeights(std::string(name) + " entries must be strictly positive");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kWeightSumTol)
    throw InvalidWeights(std::string(name) + " must sum to 1, got " + std::to_string(sum));
  return w;
}

void check_prior(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw InvalidPrior("prior must lie in [0, 1], got " + std::to_string(eta));
}

SectorInterval interval_for(double alpha, double beta, double cos2) {
  return SectorInterval{beta * cos2 / (alpha + beta * cos2), beta / (beta + alpha * cos2)};
}

}  // namespace

// ============================================================================
// Problem construction
// ============================================================================

DiscriminationProblem make_problem(std::vector<double> cos_angles, std::vector<double> alpha,
                                   std::vector<double> beta) {
  if (cos_angles.empty()) throw EmptyInput("a problem needs at least one sector");
  for (std::size_t i = 0; i < cos_angles.size(); ++i) {
    if (!(cos_angles[i] >= 0.0 && cos_angles[i] < 1.0))
      throw InvalidArgument("cos(theta) must lie in [0, 1), got " +
                            std::to_string(cos_angles[i]));
    if (i > 0 && cos_angles[i] > cos_angles[i - 1])
      throw InvalidArgument("cos(theta) values must be sorted descending");
  }
  DiscriminationProblem p;
  p.k = cos_angles.size();
  p.cos_angles = std::move(cos_angles);
  p.alpha = checked_weights(std::move(alpha), p.k, "alpha");
  p.beta = checked_weights(std::move(beta), p.k, "beta");
  return p;
}

DiscriminationProblem problem_from_subspaces(const Subspace& s1, const Subspace& s2,
                                   std::vector<double> alpha, std::vector<double> beta) {
  JordanDecomposition jd = jordan_decompose(s1, s2);
  DiscriminationProblem p = make_problem(jd.cos_angles, std::move(alpha), std::move(beta));
  p.jordan = std::move(jd);
  return p;
}

std::pair<CMatrix, CMatrix> density_matrices(const DiscriminationProblem& problem) {
  if (!problem.has_frames())
    throw MissingFrames("density matrices need an explicit Jordan decomposition");
  const JordanDecomposition& jd = *problem.jordan;
  const std::size_t dim = jd.ambient_dim();
  CMatrix rho1(dim, dim), rho2(dim, dim);
  for (std::size_t i = 0; i < problem.k; ++i) {
    rho1 = rho1 + problem.alpha[i] * outer(jd.basis1[i], jd.basis1[i]);
    rho2 = rho2 + problem.beta[i] * outer(jd.basis2[i], jd.basis2[i]);
  }
  return {std::move(rho1), std::move(rho2)};
}

// ============================================================================
// Per-sector optimum
// ============================================================================

std::vector<SectorInterval> sector_intervals(const DiscriminationProblem& problem) {
  std::vector<SectorInterval> out;
  out.reserve(problem.k);
  for (std::size_t i = 0; i < problem.k; ++i) {
    const double c = problem.cos_angles[i];
    out.push_back(interval_for(problem.alpha[i], problem.beta[i], c * c));
  }
  return out;
}

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::Below:
      return "below";
    case Regime::Interior:
      return "interior";
    case Regime::Above:
      return "above";
  }
  return "?";
}

std::vector<SectorSolution> optimal_profile(const DiscriminationProblem& problem, double eta) {
  check_prior(eta);
  std::vector<SectorSolution> out;
  out.reserve(problem.k);
  for (std::size_t i = 0; i < problem.k; ++i) {
    const double cosang = problem.cos_angles[i];
    const double cos2 = cosang * cosang;
    const double sin2 = 1.0 - cos2;
    const double a = problem.alpha[i];
    const double b = problem.beta[i];
    const SectorInterval iv = interval_for(a, b, cos2);

    SectorSolution s;
    s.index = i;
    s.sector_prior = eta * a + (1.0 - eta) * b;
    s.cond_prob1 = eta * a / s.sector_prior;
    s.cond_prob2 = 1.0 - s.cond_prob1;

    if (cos2 == 0.0) {
      // orthogonal sector: both basis states are identified with certainty
      // and the inconclusive operator vanishes on the sector
      s.regime = Regime::Interior;
      s.q1_bar = 0.0;
      s.q2_bar = 0.0;
      s.lambda = 0.0;
      s.zeta = {Complex(1.0), Complex(0.0)};
      out.push_back(std::move(s));
      continue;
    }

    if (eta < iv.c) {
      s.regime = Regime::Below;
      s.q1_bar = 1.0;
      s.q2_bar = cos2;
    } else if (eta > iv.d) {
      s.regime = Regime::Above;
      s.q1_bar = cos2;
      s.q2_bar = 1.0;
    } else {
      // the interval guards eta away from 0 and 1, so the quotient is finite
      s.regime = Regime::Interior;
      s.q1_bar = std::sqrt((1.0 - eta) * b / (eta * a)) * cosang;
      s.q1_bar = std::min(std::max(s.q1_bar, cos2), 1.0);
      s.q2_bar = cos2 / s.q1_bar;
    }

    s.lambda = (cos2 / s.q1_bar - 2.0 * cos2 + s.q1_bar) / sin2;
    const double coeff2 = cosang * (1.0 - s.q1_bar) / sin2;
    const double coeff1 = (s.q1_bar - cos2) / sin2;
    const double zeta_norm = std::hypot(coeff1, coeff2);
    if (zeta_norm > 0.0) {
      s.zeta = {Complex(coeff1 / zeta_norm), Complex(coeff2 / zeta_norm)};
    } else {
      s.zeta = {Complex(1.0), Complex(0.0)};
    }
    out.push_back(std::move(s));
  }
  return out;
}

// ============================================================================
// Assembled measurement
// ============================================================================

double fidelity(const DiscriminationProblem& problem) {
  double sum = 0.0;
  for (std::size_t i = 0; i < problem.k; ++i)
    sum += std::sqrt(problem.alpha[i] * problem.beta[i]) * problem.cos_angles[i];
  return sum;
}

double failure_probability(const DiscriminationProblem& problem, double eta) {
  check_prior(eta);
  double q = 0.0;
  const std::vector<SectorSolution> profile = optimal_profile(problem, eta);
  for (std::size_t i = 0; i < problem.k; ++i)
    q += eta * problem.alpha[i] * profile[i].q1_bar +
         (1.0 - eta) * problem.beta[i] * profile[i].q2_bar;
  return q;
}

std::optional<SectorInterval> saturation_interval(const DiscriminationProblem& problem) {
  const std::vector<SectorInterval> ivs = sector_intervals(problem);
  double lo = 0.0, hi = 1.0;
  for (const SectorInterval& iv : ivs) {
    lo = std::max(lo, iv.c);
    hi = std::min(hi, iv.d);
  }
  if (lo > hi) return std::nullopt;
  return SectorInterval{lo, hi};
}

PovmSolution build_povm(const DiscriminationProblem& problem, double eta) {
  check_prior(eta);
  if (!problem.has_frames())
    throw MissingFrames("build_povm needs explicit frames; this problem carries angles only");
  const JordanDecomposition& jd = *problem.jordan;
  const std::size_t dim = jd.ambient_dim();

  PovmSolution sol;
  sol.eta = eta;
  sol.sectors = optimal_profile(problem, eta);

  sol.pi1 = CMatrix(dim, dim);
  sol.pi2 = CMatrix(dim, dim);
  for (std::size_t i = 0; i < problem.k; ++i) {
    const double cos2 = problem.cos_angles[i] * problem.cos_angles[i];
    const double sin2 = 1.0 - cos2;
    sol.pi1 = sol.pi1 + ((1.0 - sol.sectors[i].q1_bar) / sin2) * outer(jd.z_frame[i], jd.z_frame[i]);
    sol.pi2 = sol.pi2 + ((1.0 - sol.sectors[i].q2_bar) / sin2) * outer(jd.y_frame[i], jd.y_frame[i]);
  }
  sol.pi0 = CMatrix::identity(dim) - sol.pi1 - sol.pi2;

  sol.q_total = failure_probability(problem, eta);
  sol.fidelity_bound = 2.0 * std::sqrt(eta * (1.0 - eta)) * fidelity(problem);
  const std::optional<SectorInterval> sat = saturation_interval(problem);
  sol.saturates_bound = sat.has_value() && sat->contains(eta);
  return sol;
}

// ============================================================================
// Validation
// ============================================================================

bool ValidationReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckResult& ValidationReport::find(const std::string& name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return c;
  throw InvalidArgument("no check named " + name);
}

ValidationReport validate_povm(const PovmSolution& solution,
                               const DiscriminationProblem& problem) {
  ValidationReport report;
  auto add = [&report](std::string name, double value, bool pass) {
    report.checks.push_back(CheckResult{std::move(name), value, pass});
  };

  const std::size_t dim = solution.pi0.rows();
  const CMatrix identity = CMatrix::identity(dim);

  const double completeness = max_abs(solution.pi0 + solution.pi1 + solution.pi2 - identity);
  add("completeness_residual", completeness, completeness <= 1e-10);

  const CMatrix* ops[3] = {&solution.pi0, &solution.pi1, &solution.pi2};
  const char* names[3] = {"pi0", "pi1", "pi2"};
  std::size_t rank_pi0 = 0;
  for (int j = 0; j < 3; ++j) {
    const double herm = max_abs(*ops[j] - adjoint(*ops[j]));
    add(std::string(names[j]) + "_hermiticity_residual", herm, herm <= 1e-10);
    const EigenSystem eig = hermitian_eig(*ops[j]);
    const double min_eig = eig.values.back();
    add(std::string(names[j]) + "_min_eigenvalue", min_eig, min_eig >= -1e-9);
    if (j == 0)
      for (double v : eig.values)
        if (v > 1e-8) ++rank_pi0;
  }
  add("pi0_rank", static_cast<double>(rank_pi0), rank_pi0 <= problem.k);

  const auto [rho1, rho2] = density_matrices(problem);
  const double leak1 = std::abs(trace(solution.pi1 * rho2));
  const double leak2 = std::abs(trace(solution.pi2 * rho1));
  add("unambiguity_trace_pi1_rho2", leak1, leak1 <= 1e-10);
  add("unambiguity_trace_pi2_rho1", leak2, leak2 <= 1e-10);

  const double q_from_ops = solution.eta * trace(solution.pi0 * rho1).real() +
                            (1.0 - solution.eta) * trace(solution.pi0 * rho2).real();
  const double q_residual = std::abs(q_from_ops - solution.q_total);
  add("failure_probability_residual", q_residual, q_residual <= 1e-10);

  return report;
}

}  // namespace subdisc
