#ifndef PERMRANK_RANDOM_UTIL_HPP
#define PERMRANK_RANDOM_UTIL_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace permrank {

// Uniform draw from [0, bound) by rejection; platform-independent, unlike
// std::uniform_int_distribution.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  const std::uint64_t rem = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t v = rng();
    if (rem == 0 || v <= std::numeric_limits<std::uint64_t>::max() - rem) return v % bound;
  }
}

}  // namespace permrank

#endif
