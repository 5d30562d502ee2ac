#include "subdisc/simulate.hpp"

#include <array>
#include <cmath>
#include <string>
#include <tuple>

#include "subdisc/errors.hpp"

namespace subdisc {

namespace {

std::size_t draw_weighted(const std::vector<double>& weights, Rng& rng) {
  const double u = rng.next_double();
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  return weights.size() - 1;
}

CVector tensor(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

CVector basis_state(std::size_t dim, std::size_t index) {
  CVector v(dim);
  v[index] = 1.0;
  return v;
}

}  // namespace

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Identify1:
      return "identify1";
    case Outcome::Identify2:
      return "identify2";
    case Outcome::Fail:
      return "fail";
  }
  return "?";
}

std::pair<int, CVector> sample_state(const DiscriminationProblem& problem, double eta,
                                     Rng& rng) {
  if (!problem.has_frames()) throw MissingFrames("sampling needs explicit frames");
  const int label = rng.next_double() < eta ? 1 : 2;
  if (label == 1) {
    const std::size_t i = draw_weighted(problem.alpha, rng);
    return {1, problem.jordan->basis1[i]};
  }
  const std::size_t i = draw_weighted(problem.beta, rng);
  return {2, problem.jordan->basis2[i]};
}

Outcome measure(const PovmSolution& solution, const CVector& state, Rng& rng) {
  if (std::abs(norm(state) - 1.0) > 1e-10)
    throw UnnormalizedState("measured state must have unit norm");
  const double p1 = std::max(expectation(solution.pi1, state).real(), 0.0);
  const double p2 = std::max(expectation(solution.pi2, state).real(), 0.0);
  const double u = rng.next_double();
  if (u < p1) return Outcome::Identify1;
  if (u < p1 + p2) return Outcome::Identify2;
  return Outcome::Fail;
}

TrialStats run_trials(const DiscriminationProblem& problem, double eta, std::uint64_t trials,
                      std::uint64_t seed, unsigned shards) {
  if (trials == 0) throw InvalidArgument("run_trials needs at least one trial");
  if (shards == 0) shards = 1;
  const PovmSolution solution = build_povm(problem, eta);

  TrialStats stats;
  stats.trials = trials;
  stats.expected_failure_rate = solution.q_total;

  for (unsigned s = 0; s < shards; ++s) {
    const std::uint64_t lo = trials * s / shards;
    const std::uint64_t hi = trials * (s + 1) / shards;
    for (std::uint64_t t = lo; t < hi; ++t) {
      Rng rng = Rng::for_trial(seed, t);
      const auto [label, state] = sample_state(problem, eta, rng);
      switch (measure(solution, state, rng)) {
        case Outcome::Identify1:
          ++stats.identify1;
          if (label != 1) ++stats.misidentifications;
          break;
        case Outcome::Identify2:
          ++stats.identify2;
          if (label != 2) ++stats.misidentifications;
          break;
        case Outcome::Fail:
          ++stats.failures;
          break;
      }
    }
  }

  stats.empirical_failure_rate =
      static_cast<double>(stats.failures) / static_cast<double>(trials);
  const double q = stats.expected_failure_rate;
  const double variance = q * (1.0 - q) / static_cast<double>(trials);
  stats.z_score = variance > 0.0
                      ? (stats.empirical_failure_rate - q) / std::sqrt(variance)
                      : 0.0;
  return stats;
}

// ============================================================================
// Scenarios
// ============================================================================

DiscriminationProblem half_overlap_problem() {
  const double r = 1.0 / std::sqrt(2.0);
  const Subspace s1 = make_subspace(4, {basis_state(4, 0), basis_state(4, 1)});
  const Subspace s2 = make_subspace(
      4, {{Complex(r), 0.0, Complex(r), 0.0}, {0.0, Complex(r), 0.0, Complex(r)}});
  return problem_from_subspaces(s1, s2);
}

namespace {

// exact 9-entry joint outcome distribution of (Pi_a, Pi_b) on a two-particle
// state, outcome order (identify1, identify2, fail) for each side
using JointTable = std::array<std::array<double, 3>, 3>;

JointTable joint_distribution(const PovmSolution& solution, const CVector& psi) {
  const CMatrix* ops[3] = {&solution.pi1, &solution.pi2, &solution.pi0};
  JointTable table{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      table[a][b] = std::max(expectation(kron(*ops[a], *ops[b]), psi).real(), 0.0);
  return table;
}

std::pair<Outcome, Outcome> sample_joint(const JointTable& table, Rng& rng) {
  static constexpr Outcome kOutcomes[3] = {Outcome::Identify1, Outcome::Identify2,
                                           Outcome::Fail};
  const double u = rng.next_double();
  double acc = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      acc += table[a][b];
      if (u < acc) return {kOutcomes[a], kOutcomes[b]};
    }
  return {Outcome::Fail, Outcome::Fail};
}

bool contradicts(Outcome outcome, int sent_bit) {
  return (outcome == Outcome::Identify1 && sent_bit == 1) ||
         (outcome == Outcome::Identify2 && sent_bit == 0);
}

CVector eve_resend(const DiscriminationProblem& problem, Outcome eve_outcome, Rng& rng) {
  const JordanDecomposition& jd = *problem.jordan;
  switch (eve_outcome) {
    case Outcome::Identify1:
      return jd.basis1[rng.next_index(jd.k)];
    case Outcome::Identify2:
      return jd.basis2[rng.next_index(jd.k)];
    case Outcome::Fail:
      return basis_state(jd.ambient_dim(), rng.next_index(jd.ambient_dim()));
  }
  return basis_state(jd.ambient_dim(), 0);
}

}  // namespace

KeySharingReport scenario_key_sharing(std::uint64_t rounds, std::uint64_t seed, bool eve) {
  if (rounds == 0) throw InvalidArgument("key sharing needs at least one round");
  const DiscriminationProblem problem = half_overlap_problem();
  const PovmSolution solution = build_povm(problem, 0.5);

  const double r = 1.0 / std::sqrt(2.0);
  // |0>|1> + |1>|0> and |u0>|u1> + |u1>|u0>, normalized
  CVector psi0(16), psi1(16);
  {
    const CVector e0 = basis_state(4, 0), e1 = basis_state(4, 1);
    CVector u0(4), u1(4);
    u0[0] = u0[2] = r;
    u1[1] = u1[3] = r;
    const CVector t01 = tensor(e0, e1), t10 = tensor(e1, e0);
    const CVector s01 = tensor(u0, u1), s10 = tensor(u1, u0);
    for (std::size_t i = 0; i < 16; ++i) {
      psi0[i] = r * (t01[i] + t10[i]);
      psi1[i] = r * (s01[i] + s10[i]);
    }
  }
  const JointTable joint[2] = {joint_distribution(solution, psi0),
                               joint_distribution(solution, psi1)};

  KeySharingReport report;
  report.rounds = rounds;
  report.eve_enabled = eve;

  std::uint64_t alice_ok = 0, bob_ok = 0;
  for (std::uint64_t round = 0; round < rounds; ++round) {
    Rng rng = Rng::for_trial(seed, round);
    const int bit = static_cast<int>(rng.next_index(2));

    Outcome alice, bob;
    if (!eve) {
      std::tie(alice, bob) = sample_joint(joint[bit], rng);
    } else {
      const auto [eve_a, eve_b] = sample_joint(joint[bit], rng);
      alice = measure(solution, eve_resend(problem, eve_a, rng), rng);
      bob = measure(solution, eve_resend(problem, eve_b, rng), rng);
    }

    if (alice != Outcome::Fail) ++alice_ok;
    if (bob != Outcome::Fail) ++bob_ok;
    if (alice != Outcome::Fail && bob != Outcome::Fail) {
      ++report.valid_bits;
      report.bit_values.push_back(static_cast<char>('0' + bit));
    }
    if (contradicts(alice, bit) || contradicts(bob, bit)) ++report.disturbance_detected;
  }

  report.alice_success_rate = static_cast<double>(alice_ok) / static_cast<double>(rounds);
  report.bob_success_rate = static_cast<double>(bob_ok) / static_cast<double>(rounds);
  report.valid_rate = static_cast<double>(report.valid_bits) / static_cast<double>(rounds);
  return report;
}

BlackBoxReport scenario_black_box(std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw InvalidArgument("black box scenario needs at least one trial");
  const DiscriminationProblem problem = half_overlap_problem();
  const PovmSolution solution = build_povm(problem, 0.5);
  const double r = 1.0 / std::sqrt(2.0);

  BlackBoxReport report;
  report.trials = trials;
  report.expected_success_rate = (2.0 - std::sqrt(2.0)) / 2.0;

  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, t);
    const int box = 1 + static_cast<int>(rng.next_index(2));

    // Haar direction for the rotated second qubit: U|0> = a|0> + b|1>
    Complex a = rng.next_complex_gaussian();
    Complex b = rng.next_complex_gaussian();
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    a /= n;
    b /= n;

    // two-qubit amplitudes over |q1 q2>, input |0>|0>
    std::array<Complex, 4> amp{};  // index 2*q1 + q2
    amp[0] = a;                    // |00>
    amp[1] = b;                    // |01>
    if (box == 2) {
      // Hadamard on the first qubit, then CNOT with it as control
      std::array<Complex, 4> h{};
      for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2) {
          h[0 * 2 + q2] += r * amp[q1 * 2 + q2];
          h[1 * 2 + q2] += (q1 == 0 ? r : -r) * amp[q1 * 2 + q2];
        }
      amp = {h[0], h[1], h[3], h[2]};  // CNOT swaps |10> and |11>
    }

    // correspondence onto the 4-dimensional example:
    // |00> -> |0>, |01> -> |1>, |11> -> |2>, |10> -> |3>
    CVector state(4);
    state[0] = amp[0];
    state[1] = amp[1];
    state[2] = amp[3];
    state[3] = amp[2];

    const CMatrix& correct = box == 1 ? solution.pi1 : solution.pi2;
    const double analytic = expectation(correct, state).real();
    report.max_analytic_deviation = std::max(
        report.max_analytic_deviation, std::abs(analytic - report.expected_success_rate));

    const Outcome outcome = measure(solution, state, rng);
    if (box == 1)
      ++report.box1_trials;
    else
      ++report.box2_trials;
    if ((box == 1 && outcome == Outcome::Identify1) ||
        (box == 2 && outcome == Outcome::Identify2))
      ++report.successes;
    else if (outcome == Outcome::Fail)
      ++report.failures;
    else
      ++report.misidentifications;
  }

  report.success_rate = static_cast<double>(report.successes) / static_cast<double>(trials);
  return report;
}

}  // namespace subdisc
