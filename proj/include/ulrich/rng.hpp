#ifndef ULRICH_RNG_HPP
#define ULRICH_RNG_HPP

#include <cstdint>
#include <vector>

#include "ulrich/rational.hpp"

namespace ulrich {

/// SplitMix64. Counter-friendly: distinct streams come from distinct seeds,
/// so candidate k of a run can be keyed by mix(seed, k) independent of any
/// worker partitioning.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound). bound > 0.
  uint64_t below(uint64_t bound) {
    // Rejection keeps the draw unbiased and the stream deterministic.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  static uint64_t mix(uint64_t seed, uint64_t counter) {
    SplitMix64 g(seed ^ (counter * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull));
    return g.next();
  }

 private:
  uint64_t state_;
};

/// Nonzero integer points with coordinates in [-9, 9], used to sample
/// projective points for rank screening.
inline std::vector<Rational> random_projective_point(SplitMix64& gen, int n) {
  std::vector<Rational> point(n + 1);
  bool nonzero = false;
  do {
    for (int i = 0; i <= n; ++i) {
      const long v = long(gen.below(19)) - 9;
      point[i] = v;
      nonzero = nonzero || v != 0;
    }
  } while (!nonzero);
  return point;
}

}  // namespace ulrich

#endif
