#pragma once

#include <cstdint>

namespace ncdoc {

/// Counter-based SplitMix64: draw i of seed s is mix(s + (i+1) * 0x9E3779B97F4A7C15),
/// where mix is the SplitMix64 finalizer. Stateless apart from the counter, so
/// any draw can be recomputed independently in another language.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t at(std::uint64_t seed, std::uint64_t i) {
    return mix(seed + (i + 1) * 0x9E3779B97F4A7C15ULL);
  }

  std::uint64_t next() { return at(seed_, counter_++); }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [lo, hi] (modulo bias is negligible for the small ranges used).
  long range(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  bool coin() { return (next() >> 63) != 0; }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace ncdoc
