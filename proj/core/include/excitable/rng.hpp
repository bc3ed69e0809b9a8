#pragma once

#include <cstdint>

namespace excitable {

/// SplitMix64 finalizer. Also used to key tree nodes by path so that a
/// vertex's color is reproducible without storing the tree.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

/// Deterministic counter-based stream: the sequence is a pure function of
/// (seed, stream_index), and distinct stream indices give statistically
/// independent streams. Every generator in this library draws all of its
/// randomness from one of these, so any run is reproducible from a single
/// 64-bit seed plus trial indices.
class RngStream {
public:
  RngStream(std::uint64_t seed, std::uint64_t stream_index = 0)
      : seed_(seed),
        stream_(stream_index),
        state_(mix64(seed + kGolden * (stream_index + 1))) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_; }

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Uniform in [0,1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, n), unbiased (rejection on the wraparound band).
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return x % n;
    }
  }

  bool next_bernoulli(double p) { return next_unit() < p; }

  /// Derived independent stream; used to give parallel trials and
  /// sub-generators their own reproducible randomness.
  RngStream fork(std::uint64_t tag) const {
    return RngStream(seed_, mix64(stream_ ^ (kGolden * (tag + 1))));
  }

private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t state_;
};

}  // namespace excitable
