#include "sevenfour/core/bigint.hpp"

#include "sevenfour/core/errors.hpp"

namespace sevenfour {

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw InvalidInput("isqrt of negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const BigInt& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

unsigned long two_adic_valuation(const BigInt& n) {
  if (n == 0) throw InvalidInput("2-adic valuation of zero");
  return mpz_scan1(n.get_mpz_t(), 0);
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigInt mod_floor(const BigInt& n, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace sevenfour
