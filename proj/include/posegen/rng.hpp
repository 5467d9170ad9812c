#pragma once

#include <cstdint>
#include <random>

namespace posegen {

/// Reproducible stream over std::mt19937_64 (its output sequence is fixed by
/// the C++ standard). Conversions to reals and bounded integers are done here
/// rather than with <random> distributions, whose algorithms are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Substream for one character: seed XOR instance id.
  static Rng for_instance(std::uint64_t seed, int instance_id) {
    return Rng(seed ^ static_cast<std::uint64_t>(instance_id));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi].
  double uniform(double lo, double hi) {
    const double u = lo + (hi - lo) * uniform();
    return u > hi ? hi : u;
  }

  /// Uniform integer in [0, n) by rejection sampling.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  bool operator==(const Rng& other) const { return engine_ == other.engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace posegen
