#pragma once

#include <cstdint>
#include <random>

namespace rlroute {

// Independent streams derived from one user seed. Changing what one stream
// consumes never perturbs another.
enum class Stream : std::uint64_t {
  Topology = 1,
  Traffic = 2,
  Updates = 3,
};

// Seeded generator with platform-independent draws. The std distributions are
// implementation-defined, so every draw is derived from raw mt19937_64 output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, Stream stream);

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  bool bernoulli(double p) { return uniform01() < p; }

  std::uint32_t poisson(double mean);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace rlroute
