#include "gapvec/field.hpp"

namespace gapvec {

PrimeOps::PrimeOps(uint64_t p) : p_(p) {
  // Newton iteration for p^{-1} mod 2^64 (p odd), then negate.
  uint64_t inv = p;  // correct mod 2^4 already after first refinements
  for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
  pinv_neg_ = ~inv + 1;
  one_ = static_cast<uint64_t>((static_cast<unsigned __int128>(1) << 64) % p);
  r2_ = static_cast<uint64_t>(static_cast<unsigned __int128>(one_) * one_ % p);
}

uint64_t PrimeOps::inv(uint64_t a) const {
  // Extended Euclid on signed 128-bit accumulators; p is prime, a != 0.
  int64_t t = 0, new_t = 1;
  uint64_t r = p_, new_r = a;
  while (new_r != 0) {
    uint64_t q = r / new_r;
    int64_t tmp_t = t - static_cast<int64_t>(q) * new_t;
    t = new_t;
    new_t = tmp_t;
    uint64_t tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(p_)) : static_cast<uint64_t>(t);
}

uint64_t PrimeOps::reduce_int(const mpz_class& z) const {
  uint64_t r = mpz_fdiv_ui(z.get_mpz_t(), p_);  // nonnegative remainder of floor division
  return r;
}

uint64_t PrimeOps::reduce_rat(const mpq_class& q) const {
  uint64_t num = reduce_int(q.get_num());
  uint64_t den = reduce_int(q.get_den());
  if (den == 0) throw InternalInconsistency("rational with denominator divisible by the field prime");
  return mul(num, inv(den));
}

}  // namespace gapvec
