#pragma once

#include <vector>

#include "sevenfour/core/bigint.hpp"

namespace sevenfour::arith {

/// Jacobi symbol (a | n) for odd n >= 1. Throws InvalidInput otherwise.
int jacobi_symbol(const BigInt& a, const BigInt& n);

/// Least m >= 1 with p^m = 1 (mod d), for d >= 2 and gcd(p, d) = 1.
unsigned long multiplicative_order(const BigInt& p, unsigned long d);

unsigned long euler_phi(unsigned long n);

/// Moebius function of n >= 1.
int moebius(unsigned long n);

/// Positive divisors of n >= 1, ascending.
std::vector<unsigned long> divisors(unsigned long n);

unsigned long gcd_ul(unsigned long a, unsigned long b);

}  // namespace sevenfour::arith
