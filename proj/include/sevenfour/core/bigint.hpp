#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sevenfour {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_dec(const BigInt& n) { return n.get_str(10); }

inline int sign(const BigInt& n) { return sgn(n); }

/// Floor of the square root; n must be nonnegative.
BigInt isqrt(const BigInt& n);

bool is_perfect_square(const BigInt& n);

/// Exponent of 2 in n; n must be nonzero.
unsigned long two_adic_valuation(const BigInt& n);

BigInt ipow(const BigInt& base, unsigned long exp);

/// Least nonnegative residue of n modulo m (m > 0).
BigInt mod_floor(const BigInt& n, const BigInt& m);

inline bool fits_int64(const BigInt& n) {
  return n.fits_slong_p();
}

}  // namespace sevenfour
