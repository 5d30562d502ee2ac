#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "subdisc/discriminate.hpp"
#include "subdisc/rng.hpp"

namespace subdisc {

// ============================================================================
// Born-rule sampling
// ============================================================================

enum class Outcome { Identify1, Identify2, Fail };
const char* to_string(Outcome outcome);

// Draws the source (probability eta for the first state) and then a spectral
// component of the drawn state. Frames required.
std::pair<int, CVector> sample_state(const DiscriminationProblem& problem, double eta, Rng& rng);

// Born rule for a pure input state: outcome j with probability <s|Pi_j|s>.
Outcome measure(const PovmSolution& solution, const CVector& state, Rng& rng);

struct TrialStats {
  std::uint64_t trials = 0;
  std::uint64_t identify1 = 0;
  std::uint64_t identify2 = 0;
  std::uint64_t failures = 0;
  std::uint64_t misidentifications = 0;
  double empirical_failure_rate = 0.0;
  double expected_failure_rate = 0.0;
  double z_score = 0.0;

  bool operator==(const TrialStats&) const = default;
};

// Deterministic for a given seed: trial t draws from a substream derived
// purely from (seed, t), so any contiguous sharding of the trial range
// reproduces the unsharded result exactly.
TrialStats run_trials(const DiscriminationProblem& problem, double eta, std::uint64_t trials,
                      std::uint64_t seed, unsigned shards = 1);

// ============================================================================
// Application scenarios (4-dimensional worked example)
// ============================================================================

// The half-overlap pair: S1 = span{|0>,|1>}, S2 = span{(|0>+|2>)/sqrt2,
// (|1>+|3>)/sqrt2}, uniform weights. Both Jordan overlaps equal 1/sqrt2.
DiscriminationProblem half_overlap_problem();

struct KeySharingReport {
  std::uint64_t rounds = 0;
  std::uint64_t valid_bits = 0;
  std::string bit_values;  // one '0'/'1' per valid round
  double alice_success_rate = 0.0;
  double bob_success_rate = 0.0;
  double valid_rate = 0.0;
  bool eve_enabled = false;
  // rounds where a succeeded measurement contradicts the sent state
  std::uint64_t disturbance_detected = 0;

  bool operator==(const KeySharingReport&) const = default;
};

// Charlie distributes one particle each of an entangled two-particle state;
// Alice and Bob run the equal-prior optimal measurement on their halves. The
// joint outcome distribution is evaluated exactly on the two-particle space
// and sampled. The optional eavesdropper intercepts both particles, measures
// with the same POVM, and resends: a spectral sample of the identified
// subspace's uniform state on success, a uniformly random basis state on
// failure.
KeySharingReport scenario_key_sharing(std::uint64_t rounds, std::uint64_t seed, bool eve = false);

struct BlackBoxReport {
  std::uint64_t trials = 0;
  std::uint64_t box1_trials = 0;
  std::uint64_t box2_trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;
  std::uint64_t misidentifications = 0;
  double success_rate = 0.0;
  double expected_success_rate = 0.0;   // (2 - sqrt 2)/2, rotation-independent
  double max_analytic_deviation = 0.0;  // worst per-trial |<s|Pi_box|s> - expected|

  bool operator==(const BlackBoxReport&) const = default;
};

// Discriminates which of two operation sets acted on |0>|0>: an arbitrary
// rotation of the second qubit, or the same followed by a Hadamard on the
// first and a controlled-NOT. The output space maps onto the half-overlap
// pair, so identifying the box is subspace discrimination.
BlackBoxReport scenario_black_box(std::uint64_t trials, std::uint64_t seed);

}  // namespace subdisc
