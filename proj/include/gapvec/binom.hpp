#pragma once

#include <cassert>
#include <cstdint>

namespace gapvec {

// Exact binomial coefficient, small enough for table dimensions (values stay
// far below 2^63 for every size this project touches). Asserts on overflow.
inline long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    assert(r <= static_cast<unsigned __int128>(INT64_MAX));
  }
  return static_cast<long long>(r);
}

// Floor of the integer square root.
inline uint64_t isqrt_floor(uint64_t n) {
  if (n == 0) return 0;
  uint64_t x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  while ((x + 1) * (x + 1) <= n) ++x;  // guard against rounding short
  while (x * x > n) --x;
  return x;
}

}  // namespace gapvec
