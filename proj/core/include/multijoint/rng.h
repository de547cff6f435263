#ifndef MULTIJOINT_RNG_H_
#define MULTIJOINT_RNG_H_

#include <cstdint>
#include <random>

namespace multijoint {

// SplitMix64 finalizer, used to derive independent stream seeds.
uint64_t SplitMix64(uint64_t x);

// std::mt19937_64 (fully specified by the standard) with samplers written
// here, since the standard distributions are not portable across libraries.
// A stream is identified by (seed, a, b); in the sampling experiment a is
// the trial index and b the family index.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(SplitMix64(seed)) {}
  static Rng ForStream(uint64_t seed, uint64_t a, uint64_t b = 0);

  uint64_t Next() { return engine_(); }
  // Uniform in [0, n), n >= 1, by rejection; unbiased.
  uint64_t UniformInt(uint64_t n);
  // Uniform in [lo, hi].
  int64_t UniformRange(int64_t lo, int64_t hi);
  // True with probability num / den.
  bool Bernoulli(uint64_t num, uint64_t den) { return UniformInt(den) < num; }
  // Uniform in [0, 1) with 53 random bits.
  double UniformDouble() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace multijoint

#endif  // MULTIJOINT_RNG_H_
