#include "rlroute/random.hpp"

#include <cmath>

namespace rlroute {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, Stream stream)
    : engine_(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(stream)))) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased for bounds that do not divide 2^64.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

std::uint32_t Rng::poisson(double mean) {
  if (!(mean > 0.0)) return 0;
  // Knuth's product method on chunks of mean <= 16; Poisson is additive.
  std::uint32_t total = 0;
  while (mean > 0.0) {
    const double chunk = mean > 16.0 ? 16.0 : mean;
    mean -= chunk;
    const double limit = std::exp(-chunk);
    double product = uniform01();
    std::uint32_t k = 0;
    while (product > limit) {
      ++k;
      product *= uniform01();
    }
    total += k;
  }
  return total;
}

}  // namespace rlroute
