#include <doctest.h>

#include "gapvec/field.hpp"
#include "gapvec/rng.hpp"

using namespace gapvec;

namespace {

using u128 = unsigned __int128;

uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t p) {
  u128 acc = 1, cur = b % p;
  while (e) {
    if (e & 1) acc = acc * cur % p;
    cur = cur * cur % p;
    e >>= 1;
  }
  return static_cast<uint64_t>(acc);
}

// Deterministic Miller–Rabin: this witness set decides primality for every
// 64-bit integer.
bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull,
                     37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull,
                     37ull}) {
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = static_cast<uint64_t>(u128(x) * x % n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("every baked-in modulus is a distinct prime below 2^62") {
  for (size_t i = 0; i < kPrimes.size(); ++i) {
    CHECK(is_prime_u64(kPrimes[i]));
    CHECK(kPrimes[i] < (1ull << 62));
    CHECK(kPrimes[i] > (1ull << 61));
    for (size_t j = i + 1; j < kPrimes.size(); ++j) CHECK(kPrimes[i] != kPrimes[j]);
  }
}

TEST_CASE("prime-field arithmetic matches a wide-integer reference") {
  PrimeOps F(kPrimes[0]);
  const uint64_t p = kPrimes[0];
  SeededSampler s(5, stream_id("unit-field"));
  for (int i = 0; i < 500; ++i) {
    uint64_t a = s.next_below(p), b = s.next_below(p);
    CHECK(F.add(a, b) == (a + b) % p);
    CHECK(F.sub(a, b) == (a + p - b) % p);
    CHECK(F.mul(a, b) == static_cast<uint64_t>(u128(a) * b % p));
    CHECK(F.neg(a) == (a == 0 ? 0 : p - a));
    if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
  }
}

TEST_CASE("montgomery domain round-trips and multiplies correctly") {
  for (uint64_t p : {kPrimes[0], kPrimes[5], kPrimes[9]}) {
    PrimeOps F(p);
    SeededSampler s(9, stream_id("unit-mont"));
    CHECK(F.from_mont(F.mont_one()) == 1);
    for (int i = 0; i < 300; ++i) {
      uint64_t a = s.next_below(p), b = s.next_below(p);
      CHECK(F.from_mont(F.to_mont(a)) == a);
      uint64_t ab = F.mont_mul(F.to_mont(a), F.to_mont(b));
      CHECK(F.from_mont(ab) == F.mul(a, b));
      if (a != 0) {
        uint64_t ia = F.mont_inv(F.to_mont(a));
        CHECK(F.from_mont(F.mont_mul(F.to_mont(a), ia)) == 1);
      }
    }
  }
}

TEST_CASE("integer and rational reduction") {
  PrimeOps F(kPrimes[0]);
  CHECK(F.from_int64(-1) == kPrimes[0] - 1);
  CHECK(F.from_int64(0) == 0);
  CHECK(F.reduce_int(mpz_class(kPrimes[0]) * 3 + 17) == 17);
  CHECK(F.reduce_int(mpz_class(-5)) == kPrimes[0] - 5);
  mpq_class half(1, 2);
  uint64_t h = F.reduce_rat(half);
  CHECK(F.mul(h, 2) == 1);
  mpq_class bad(1, 1);
  bad = mpq_class(mpz_class(1), mpz_class(kPrimes[0]));
  CHECK_THROWS_AS((void)F.reduce_rat(bad), InternalInconsistency);
}

TEST_CASE("field context selects and validates primes") {
  CHECK(FieldContext::rational().is_rational());
  CHECK_FALSE(FieldContext::modp_index(0).is_rational());
  CHECK(FieldContext::modp_index(0).prime == kPrimes[0]);
  CHECK(FieldContext::modp(kPrimes[3]).prime == kPrimes[3]);
  CHECK_THROWS_AS(FieldContext::modp(97), InvalidVariety);
}
