#pragma once

#include <cstdint>
#include <string_view>

namespace gapvec {

// splitmix64 finalizer. All sampling below is pure 64-bit integer math, so a
// given (seed, stream) pair produces the same sequence on every platform and
// under any thread schedule.
inline uint64_t mix64(uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

// Stable stream id for a named task: FNV-1a over the task name, then fold in
// the two integer coordinates (typically j and the trial index).
inline uint64_t stream_id(std::string_view task, uint64_t a = 0, uint64_t b = 0) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : task) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  h ^= a;
  h *= 1099511628211ULL;
  h ^= b;
  h *= 1099511628211ULL;
  return h;
}

// splitmix64-style generator with a per-stream odd increment, so distinct
// streams walk unrelated orbits even under the same seed.
class SeededSampler {
 public:
  SeededSampler(uint64_t seed, uint64_t stream)
      : state_(mix64(seed ^ mix64(stream + 0x5851F42D4C957F2DULL))),
        gamma_(mix64(stream * 0x9E3779B97F4A7C15ULL + 0x1D8E4E27C47D124FULL) | 1ULL) {}

  uint64_t next_u64() {
    state_ += gamma_;
    return mix64(state_);
  }

  // Uniform in [0, bound) by rejection; bound >= 1.
  uint64_t next_below(uint64_t bound) {
    uint64_t limit = bound * (UINT64_MAX / bound);  // multiple of bound
    uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform integer in [lo, hi], inclusive.
  int64_t next_int(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
    return lo + static_cast<int64_t>(next_below(span));
  }

 private:
  uint64_t state_;
  uint64_t gamma_;
};

// Integer sampling box for exact-rational mode.
inline constexpr int64_t kSampleBoxLo = -1000;
inline constexpr int64_t kSampleBoxHi = 1000;

}  // namespace gapvec
