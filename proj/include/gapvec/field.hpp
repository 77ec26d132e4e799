#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "gapvec/errors.hpp"

namespace gapvec {

enum class FieldKind { ExactRational, PrimeField };

// Ten fixed primes just below 2^62, largest first (all >= 2^61). Computations
// never test primality at runtime; these are the only primes the prime-field
// mode will accept.
inline constexpr std::array<uint64_t, 10> kPrimes = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL,
    4611686018427387761ULL, 4611686018427387751ULL, 4611686018427387737ULL,
    4611686018427387733ULL, 4611686018427387709ULL, 4611686018427387701ULL,
    4611686018427387631ULL,
};

// Selects the arithmetic for a whole run: exact rationals, or one fixed
// word-sized prime field. Immutable after creation.
struct FieldContext {
  FieldKind kind = FieldKind::PrimeField;
  uint64_t prime = kPrimes[0];  // meaningful iff kind == PrimeField

  static FieldContext rational() { return {FieldKind::ExactRational, 0}; }

  static FieldContext modp(uint64_t p) {
    for (uint64_t q : kPrimes)
      if (q == p) return {FieldKind::PrimeField, p};
    throw InvalidVariety("prime " + std::to_string(p) + " is not in the baked-in prime list");
  }

  static FieldContext modp_index(unsigned i) {
    return {FieldKind::PrimeField, kPrimes[i % kPrimes.size()]};
  }

  bool is_rational() const { return kind == FieldKind::ExactRational; }
};

// Arithmetic mod one baked-in prime. Elements are plain residues in [0, p).
// The elimination kernels convert rows to the Montgomery domain once and then
// pay a single Montgomery multiply per update, which is what makes the big
// evaluation tables fast; everything else uses the plain 128-bit reduction.
class PrimeOps {
 public:
  explicit PrimeOps(uint64_t p);

  uint64_t p() const { return p_; }

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;  // p < 2^62, no wraparound
    return s >= p_ ? s - p_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  uint64_t inv(uint64_t a) const;                        // a != 0
  uint64_t div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }

  // Montgomery domain (R = 2^64): values represent a*R mod p.
  uint64_t to_mont(uint64_t a) const { return mont_mul(a, r2_); }
  uint64_t from_mont(uint64_t a) const { return mont_reduce(a); }
  uint64_t mont_one() const { return one_; }
  uint64_t mont_mul(uint64_t a, uint64_t b) const {
    unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    uint64_t m = static_cast<uint64_t>(t) * pinv_neg_;
    uint64_t r = static_cast<uint64_t>((t + static_cast<unsigned __int128>(m) * p_) >> 64);
    return r >= p_ ? r - p_ : r;
  }
  uint64_t mont_inv(uint64_t a_mont) const { return to_mont(inv(from_mont(a_mont))); }

  // Residues of arbitrary-precision integers and rationals.
  uint64_t reduce_int(const mpz_class& z) const;
  uint64_t reduce_rat(const mpq_class& q) const;
  uint64_t from_int64(int64_t v) const {
    uint64_t r = static_cast<uint64_t>(v % static_cast<int64_t>(p_));
    return v < 0 ? r + p_ : r;
  }

 private:
  uint64_t mont_reduce(uint64_t a) const {  // a * R^{-1} mod p
    uint64_t m = a * pinv_neg_;
    uint64_t r = static_cast<uint64_t>((static_cast<unsigned __int128>(m) * p_ + a) >> 64);
    return r >= p_ ? r - p_ : r;
  }

  uint64_t p_;
  uint64_t pinv_neg_;  // -p^{-1} mod 2^64
  uint64_t r2_;        // (2^64)^2 mod p
  uint64_t one_;       // 2^64 mod p (Montgomery image of 1)
};

}  // namespace gapvec
