#pragma once

#include <cstdint>
#include <random>

namespace swarmaze {

/// Mixes a seed with a stream tag into a fresh, well-scrambled seed.
/// splitmix64 finalizer; stable across platforms.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

/// Seeded random source with a reproducibility contract: the same seed and
/// the same call sequence produce the same outputs on every platform.
///
/// The engine is mt19937_64 (bit-exact per the standard); the distributions
/// are implemented here instead of the std:: ones, whose output is
/// implementation-defined.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform real in [0, 1).
  double uniform_real() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [lo, hi], both ends inclusive. Unbiased (rejection).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform real in [-1, 1], both ends reachable.
  double uniform_symmetric() {
    const double unit =
        static_cast<double>(next_u64() >> 11) / 9007199254740991.0;  // 2^53-1
    return 2.0 * unit - 1.0;
  }

  /// Child source with an independent stream; does not consume from this one.
  RandomSource derive(std::uint64_t tag) const {
    return RandomSource(derive_seed(seed_, tag));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace swarmaze
