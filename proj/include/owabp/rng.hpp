#pragma once

#include <cstdint>

namespace owabp {

/// SplitMix64 generator (Steele, Lea, Flood 2014). Chosen because the whole
/// state transition fits in a dozen lines and reproduces identically on any
/// platform, so instance corpora can be regenerated bit-for-bit elsewhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound). The modulo bias is irrelevant for the
  /// tiny bounds used here and keeps the mapping trivially portable.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace owabp
