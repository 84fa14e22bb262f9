#include "swarmaze/random.hpp"

#include <stdexcept>

namespace swarmaze {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ull * (tag + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

std::int64_t RandomSource::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
  const std::uint64_t range =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(next_u64());  // full width
  // Rejection sampling over the top of the 64-bit range keeps the draw
  // unbiased; the loop terminates almost immediately for small ranges.
  std::uint64_t x, r;
  do {
    x = next_u64();
    r = x % range;
  } while (x - r > std::uint64_t(0) - range);
  return lo + static_cast<std::int64_t>(r);
}

}  // namespace swarmaze
