#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace windsentry {

// Deterministic random helpers. mt19937_64 output is pinned by the standard,
// but the distribution adaptors are not, so the mapping from raw draws to
// uniforms/gaussians is done by hand here to keep runs bit-identical across
// compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased integer in [0, n) via rejection sampling. n must be > 0.
  std::size_t uniform_index(std::size_t n);

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform_unit();

  // Standard normal via Box-Muller. Always consumes two uniforms and
  // discards the second variate, so draw counts stay predictable.
  double gaussian();

  double gaussian(double mean, double stddev) {
    return mean + stddev * gaussian();
  }

  // In-place Fisher-Yates.
  void shuffle(std::vector<std::size_t>& items);

  // k distinct indices from [0, n), in shuffled order. k <= n required.
  std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                      std::size_t k);

 private:
  std::mt19937_64 engine_;
};

// Mixes several values into a single seed so that derived streams are
// decorrelated (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0);

}  // namespace windsentry
