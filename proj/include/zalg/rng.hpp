#pragma once

#include <cstdint>

#include "bigint.hpp"

namespace zalg {

// deterministic 64-bit stream (splitmix64); every randomized operation takes
// one of these explicitly so identical seeds give identical runs everywhere
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), n > 0, by rejection
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw precondition_error("next_below: empty range");
    std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= lim);
    return v % n;
  }

  // uniform in [lo, hi] for small signed ranges
  long long next_range(long long lo, long long hi) {
    return lo + static_cast<long long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // uniform in [0, n), n > 0 arbitrary precision
  Int next_int_below(const Int& n) {
    if (n <= 0) throw precondition_error("next_int_below: empty range");
    std::size_t bits = bit_length(n);
    std::size_t words = (bits + 63) / 64;
    for (;;) {
      Int v = 0;
      for (std::size_t i = 0; i < words; ++i) {
        v <<= 64;
        v += next_u64();
      }
      v >>= (words * 64 - bits);
      if (v < n) return v;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace zalg
