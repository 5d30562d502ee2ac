#pragma once

#include <cstdint>

#include "subdisc/linalg.hpp"

namespace subdisc {

// Counter-based splitmix64 stream: draw i of seed s is
// finalize(s + (i+1) * 0x9E3779B97F4A7C15), with the standard finalizer
// (xor-shift 30, * 0xBF58476D1CE4E5B9, xor-shift 27, * 0x94D049BB133111EB,
// xor-shift 31). Streams are reproducible across platforms; substreams for
// trial t of master seed m start from finalize(m) ^ finalize(t + 1).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng for_trial(std::uint64_t master_seed, std::uint64_t trial_index);

  std::uint64_t next_u64();
  double next_double();  // uniform in [0, 1)
  std::uint64_t next_index(std::uint64_t n);
  double next_gaussian();  // standard normal, Box-Muller
  Complex next_complex_gaussian();

 private:
  std::uint64_t state_;
};

}  // namespace subdisc
