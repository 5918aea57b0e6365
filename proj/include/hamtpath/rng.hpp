#pragma once

#include <cstdint>

namespace hamtpath {

// SplitMix64 (Steele, Lea & Flood's 64-bit mix, the java.util.SplitMix64
// constants). Chosen over std engines because its output is pinned by the
// algorithm itself: campaigns replay bit-for-bit across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // True with probability p (p <= 0 never, p >= 1 always).
  bool bernoulli(double p) { return next_unit() < p; }

 private:
  std::uint64_t state_;
};

// Instance k of a campaign draws from SplitMix64 seeded with the (k+1)-th
// output of SplitMix64(campaign_seed), so instances are independent of
// each other and of execution order.
inline std::uint64_t instance_seed(std::uint64_t campaign_seed, int index) {
  SplitMix64 base(campaign_seed);
  std::uint64_t s = 0;
  for (int k = 0; k <= index; ++k) s = base.next();
  return s;
}

}  // namespace hamtpath
