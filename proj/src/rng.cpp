#include "subdisc/rng.hpp"

#include <cmath>
#include <numbers>

namespace subdisc {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::for_trial(std::uint64_t master_seed, std::uint64_t trial_index) {
  return Rng(finalize(master_seed) ^ finalize(trial_index + 1));
}

std::uint64_t Rng::next_u64() {
  state_ += kGamma;
  return finalize(state_);
}

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::next_index(std::uint64_t n) { return next_u64() % n; }

double Rng::next_gaussian() {
  // one fresh Box-Muller pair per call keeps draws a pure function of the
  // counter position
  const double u1 = 1.0 - next_double();
  const double u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::next_complex_gaussian() {
  const double u1 = 1.0 - next_double();
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  return Complex(r * std::cos(2.0 * std::numbers::pi * u2),
                 r * std::sin(2.0 * std::numbers::pi * u2));
}

}  // namespace subdisc
