#pragma once

#include <cstdint>

namespace twh {

// SplitMix64. One master seed per run; every instance derives its own
// stream from (seed, index), so reports are reproducible regardless of
// evaluation order or thread count.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). bound > 0.
  uint64_t below(uint64_t bound) {
    // Rejection keeps it exactly uniform and still deterministic.
    uint64_t threshold = -bound % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  int range(int lo, int hi) {  // inclusive ends
    return lo + (int)below((uint64_t)(hi - lo + 1));
  }

  bool chance(double p) { return (double)next() / 18446744073709551616.0 < p; }

  Rng split(uint64_t index) const {
    Rng derived(state_ ^ (0xA0761D6478BD642FULL * (index + 1)));
    derived.next();
    return derived;
  }

 private:
  uint64_t state_;
};

}  // namespace twh
