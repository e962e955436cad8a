#pragma once

#include <cstdint>
#include <random>

namespace vcpack {

// All randomized code uses std::mt19937_64 seeded explicitly; the engine's
// output sequence is fully specified by the standard, so identical seeds
// give identical streams on every platform. Portable distributions are
// built from raw 64-bit outputs below (std::uniform_int_distribution is
// not portable across library implementations).

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Sub-seed derivation: subseed(s, i) feeds s and the stream index through
/// splitmix64 so retries and parallel streams are decorrelated but
/// reproducible.
inline std::uint64_t subseed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index + 1));
}

/// Deterministic random bits/integers on top of mt19937_64.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  bool next_bit() {
    if (avail_ == 0) {
      buf_ = eng_();
      avail_ = 64;
    }
    const bool b = buf_ & 1;
    buf_ >>= 1;
    --avail_;
    return b;
  }

  /// Uniform in [0, n) by rejection; exact and portable.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

 private:
  std::mt19937_64 eng_;
  std::uint64_t buf_ = 0;
  int avail_ = 0;
};

}  // namespace vcpack
