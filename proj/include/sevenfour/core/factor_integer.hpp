#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sevenfour/core/bigint.hpp"

namespace sevenfour::arith {

/// Largest input for which the fixed Miller-Rabin witness set {2,...,41} is
/// a proof of primality (Sorenson-Webster bound 3317044064679887385961981).
const BigInt& deterministic_mr_bound();

enum class PrimalityMethod { kTrial, kDeterministicMillerRabin, kBailliePSW };

/// Deterministic primality decision. Below deterministic_mr_bound() the
/// answer is proven; above it the Baillie-PSW test is used (no known
/// counterexample, not a proof). `method` reports which path was taken.
bool is_prime(const BigInt& n, PrimalityMethod* method = nullptr);

struct PrimePower {
  BigInt prime;
  unsigned long exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

/// sign * cofactor * prod prime^exponent == n. `cofactor` is 1 for a
/// complete factorization; otherwise it is the composite part the effort
/// budget could not split, coprime to every listed prime.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;
  BigInt cofactor = 1;

  bool complete() const { return cofactor == 1; }
  BigInt value() const;
  /// Exponent of p (0 when absent).
  unsigned long exponent_of(const BigInt& p) const;
  /// e.g. "-1 * 11^1" or "5^2 * 13^1 * [c240]" for a partial result.
  std::string to_string() const;
};

struct EcmStage {
  unsigned long b1 = 0;
  unsigned curves = 0;
};

struct FactorLimits {
  unsigned long trial_bound = 1'000'000;
  /// Brent-rho iterations per composite before handing over to ECM.
  unsigned long rho_iterations = 1UL << 18;
  /// Curves tried in order; stage 2 runs to 100 * b1.
  std::vector<EcmStage> ecm_schedule = {{2'000, 25}, {11'000, 90}, {50'000, 300}, {250'000, 700}};
  /// Throw ResourceExhausted instead of returning a partial factorization.
  bool require_complete = true;
  /// Checked after each newly found prime; returning true ends the search
  /// early with a (possibly partial) factorization.
  std::function<bool(const Factorization&)> stop_when;
};

/// Prime factorization of a nonzero integer: trial division, Brent's variant
/// of Pollard rho, then ECM (Montgomery curves, Suyama parametrization) with
/// fixed seeds. Deterministic for fixed n and limits.
Factorization factor_integer(const BigInt& n, const FactorLimits& limits = {});

/// One nontrivial factor of composite n by Brent-rho, or nullopt when the
/// iteration budget runs out.
std::optional<BigInt> pollard_brent(const BigInt& n, unsigned long max_iterations, unsigned long c = 1);

/// One nontrivial factor of n by a single ECM curve with Suyama parameter
/// sigma (>= 6), stage-1 bound b1 and stage-2 bound b2.
std::optional<BigInt> ecm_curve(const BigInt& n, unsigned long sigma, unsigned long b1, unsigned long b2);

/// Primes up to `bound` in ascending order.
std::vector<unsigned long> primes_up_to(unsigned long bound);

}  // namespace sevenfour::arith
