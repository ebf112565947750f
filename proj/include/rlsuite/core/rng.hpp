#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>

namespace rlsuite {

/// SplitMix64 step. Used for seeding and for deriving child streams.
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Combine two 64-bit values into a well-mixed seed (order sensitive).
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept;

/// xoshiro256** generator seeded through SplitMix64.
///
/// The update is fully specified so every port reproduces the same stream:
///
///   result = rotl(s1 * 5, 7) * 9
///   t = s1 << 17
///   s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3
///   s2 ^= t;  s3 = rotl(s3, 45)
///
/// Bounded integers use Lemire's multiply-shift with rejection, and doubles
/// take the top 53 bits. Nothing here goes through <random> distributions,
/// whose output differs between standard library implementations.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept { return next(); }
  std::uint64_t next() noexcept;

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t uniform(std::uint64_t bound) noexcept;

  /// Uniform real in [0, 1).
  double uniform01() noexcept;

  /// Uniform real in [lo, hi).
  double uniform_real(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

  /// Independent child stream; advances this generator by one draw.
  Rng split() noexcept;

  template <typename T>
  void shuffle(std::span<T> items) noexcept {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  bool operator==(const Rng&) const = default;

 private:
  std::uint64_t s_[4];
};

}  // namespace rlsuite
