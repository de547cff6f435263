#include "multijoint/rng.h"

namespace multijoint {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::ForStream(uint64_t seed, uint64_t a, uint64_t b) {
  return Rng(SplitMix64(SplitMix64(seed) ^ SplitMix64(a * 2 + 1)) ^ SplitMix64(b * 2));
}

uint64_t Rng::UniformInt(uint64_t n) {
  if (n <= 1) return 0;
  // Largest multiple of n representable, so every residue is equally likely.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    const uint64_t x = Next();
    if (x < limit) return x % n;
  }
}

int64_t Rng::UniformRange(int64_t lo, int64_t hi) {
  return lo + static_cast<int64_t>(UniformInt(static_cast<uint64_t>(hi - lo) + 1));
}

}  // namespace multijoint
