#pragma once

#include <cstdint>
#include <limits>

namespace speclimit::random {

/// SplitMix64 step; used for seeding and for deriving substreams.
std::uint64_t splitmix64(std::uint64_t& state);

/**
 * xoshiro256** (Blackman & Vigna) with a portable Box-Muller normal
 * transform, so a (seed, stream) pair yields the same sequence on every
 * platform. Substreams are derived by hashing (seed, stream) through
 * SplitMix64; stream k of a seed is independent of the order in which
 * streams are consumed.
 */
class Generator {
 public:
  using result_type = std::uint64_t;

  explicit Generator(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal deviate.
  double normal();

 private:
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace speclimit::random
