#pragma once

#include <vector>

#include "sevenfour/core/factor_integer.hpp"
#include "sevenfour/core/int_poly.hpp"

namespace sevenfour::cyclo {

using arith::Factorization;
using arith::FactorLimits;
using arith::IntPoly;

/// d-th cyclotomic polynomial as prod over e | d of (x^e - 1)^mu(d/e), every
/// division exact. Results are memoized behind a mutex.
IntPoly cyclotomic_poly(unsigned long d);

/// Minimal polynomial of 2cos(2 pi / d) for odd d >= 3: the monic psi with
/// x^m psi(x + 1/x) = Phi_d(x), m = phi(d)/2.
IntPoly real_minimal_poly(unsigned long d);

struct CycData {
  unsigned long d = 0;
  unsigned long phi = 0;
  IntPoly cyclotomic;
  IntPoly real_minimal;
};

CycData cyc_data(unsigned long d);

/// Signed norm from the real cyclotomic field down to Q of
/// 4(z^2 + z^-2) - 7, z a primitive d-th root of unity, evaluated as
/// (-4)^m psi_d(7/4). d = 1 gives the degenerate value 1.
BigInt norm_cd_value(unsigned long d);

struct NormResult {
  unsigned long d = 0;
  BigInt value;
  /// |value| mod 4
  int residue_mod4 = 1;
  Factorization factorization;
  /// Primes = 3 mod 4 occurring to an odd power, ascending. Drawn from the
  /// listed primes only when the factorization is partial.
  std::vector<BigInt> ramified_primes;
};

/// Norm plus factorization and ramified primes. Throws ResourceExhausted if
/// `limits` require a complete factorization that cannot be reached.
NormResult norm_cd(unsigned long d, const FactorLimits& limits = {});

/// Independent route: s^2 = Res(Phi_d, 4x^4 - 7x^2 + 4), sign fixed by the
/// requirement that the norm is 1 mod 4.
BigInt norm_cd_via_resultant(unsigned long d);

std::vector<BigInt> surgery_ramified_primes(unsigned long d);

/// Primes = 3 mod 4 with odd exponent in a factorization.
std::vector<BigInt> odd_exponent_primes_3mod4(const Factorization& f);

struct OrderAudit {
  unsigned long d = 0;
  bool ok = true;
  /// (prime, multiplicative order mod d) for every prime factor not dividing d.
  std::vector<std::pair<BigInt, unsigned long>> orders;
};

OrderAudit order_bound_report(unsigned long d, const FactorLimits& limits = {});

/// Every prime p dividing the norm with p not dividing d has order 1 or 2 mod d.
bool order_bound_audit(unsigned long d, const FactorLimits& limits = {});

}  // namespace sevenfour::cyclo
