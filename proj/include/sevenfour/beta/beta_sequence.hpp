#pragma once

#include <string>
#include <vector>

#include "sevenfour/core/factor_integer.hpp"

namespace sevenfour::beta {

using arith::Factorization;
using arith::FactorLimits;

/// a + b*i + c*sqrt15 + d*i*sqrt15 with rational coordinates.
struct QuarticElem {
  Rational a, b, c, d;

  static QuarticElem one() { return {1, 0, 0, 0}; }
  /// (i + sqrt15) / 4
  static QuarticElem beta() { return {0, Rational(1, 4), Rational(1, 4), 0}; }
  /// 2 * beta
  static QuarticElem gamma() { return {0, Rational(1, 2), Rational(1, 2), 0}; }

  QuarticElem operator*(const QuarticElem& o) const;
  QuarticElem operator+(const QuarticElem& o) const;
  bool operator==(const QuarticElem& o) const = default;
};

QuarticElem quartic_pow(const QuarticElem& x, unsigned long n);

/// 2^(n+1) Im(beta^n) for odd n >= 1, an integer. Even n is rejected: the
/// quantity is then an irrational multiple of sqrt15.
BigInt s_of_n(unsigned long n);

/// s(n) = 1 mod 4 when n = 1 mod 4 and 3 mod 4 when n = 3 mod 4.
bool s_residue_audit(unsigned long n);

/// Signed product over d | n of the real cyclotomic norms of c_d (d = 1 term 1).
BigInt norm_product(unsigned long n);

/// |norm_product(n)| == |s(n)| for odd n.
bool abs_product_identity_audit(unsigned long n);

/// norm_product(n) == s(n) exactly, for n = 1 mod 4 and n >= 5.
bool product_identity_audit(unsigned long n);

struct AngleInterval {
  /// Midpoint of an enclosure of frac(n * arg(beta) / 2pi), rounded to double.
  double fraction = 0;
  /// The true fractional part lies within fraction +- error_bound.
  double error_bound = 0;
  /// +1 if the enclosure lies in (0, 1/2), -1 if in (1/2, 1), 0 if undecided.
  int sign_hint = 0;
  unsigned precision_bits = 0;
};

/// Interval enclosure from MPFR with directed rounding; precision is raised
/// internally until the enclosure is narrower than 2^(-precision_bits/2).
AngleInterval angle_prescreen(unsigned long n, unsigned precision_bits = 128);

struct SignEntry {
  unsigned long n = 0;
  int s_sign = 0;
  AngleInterval prescreen;
  bool operator==(const SignEntry& o) const { return n == o.n && s_sign == o.s_sign; }
};

struct SignSequence {
  std::vector<unsigned long> generators;
  std::vector<SignEntry> entries;
};

struct SearchOptions {
  /// Largest multiplier tried at each step.
  unsigned long budget = 1'000'000;
  unsigned precision_bits = 128;
};

/// Semigroup elements (excluding 1) generated by `generators`, ascending, up to bound.
std::vector<unsigned long> semigroup_elements(const std::vector<unsigned long>& generators, unsigned long bound);

/// n_1 is the least semigroup element with s < 0; n_(i+1) = n_i * m for the
/// least semigroup element m whose product has s of the alternating sign.
/// Throws InvalidInput for fewer than two distinct generators or a generator
/// that is not a prime = 1 mod 4, ResourceExhausted if a step runs past the budget.
SignSequence build_n_sequence(const std::vector<unsigned long>& generators, unsigned count,
                              const SearchOptions& options = {});

struct RamificationCertificate {
  unsigned index = 0;
  unsigned long d = 0;
  BigInt norm;
  Factorization factorization;
  /// Primes = 3 mod 4 with odd exponent not dividing d; exponents are exact
  /// even when the factorization is partial.
  std::vector<BigInt> primes;
};

/// Factoring stops as soon as a qualifying prime is found.
FactorLimits certificate_limits();

/// For each entry the least divisor d_i of n_i (not dividing n_(i-1)) whose
/// norm is negative, with its factorization and ramified primes.
std::vector<RamificationCertificate> extract_d_sequence(const SignSequence& seq,
                                                        const FactorLimits& limits = certificate_limits());

/// Checks the certificate invariants; returns an empty string or the first failure.
std::string certificate_problem(const std::vector<RamificationCertificate>& certs);

}  // namespace sevenfour::beta
