#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sevenfour/core/int_poly.hpp"

namespace sevenfour::arith {

/// Polynomial over the prime field F_p, coefficients in [0, p), lowest degree
/// first. The modulus must be a prime below 2^31.
class ModPoly {
 public:
  ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  ModPoly(std::uint64_t p, const IntPoly& f);

  static ModPoly zero(std::uint64_t p) { return ModPoly(p, std::vector<std::uint64_t>{}); }
  static ModPoly one(std::uint64_t p) { return ModPoly(p, std::vector<std::uint64_t>{1}); }
  static ModPoly x(std::uint64_t p) { return ModPoly(p, std::vector<std::uint64_t>{0, 1}); }

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t lead() const { return c_.back(); }

  ModPoly monic() const;
  ModPoly derivative() const;

  ModPoly operator+(const ModPoly& o) const;
  ModPoly operator-(const ModPoly& o) const;
  ModPoly operator*(const ModPoly& o) const;
  ModPoly scaled(std::uint64_t s) const;
  bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

  /// Lift to Z[x] with coefficients in [0, p) (or symmetric range when `symmetric`).
  IntPoly lift(bool symmetric = false) const;
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
/// Monic gcd (zero if both inputs are zero).
ModPoly gcd(const ModPoly& a, const ModPoly& b);
/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct ModXgcd {
  ModPoly g, s, t;
};
ModXgcd xgcd(const ModPoly& a, const ModPoly& b);

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m);
ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& m);

bool is_squarefree(const ModPoly& f);

/// True iff f is irreducible over F_p, decided by distinct-degree
/// factorization. Requires deg f >= 1 and lead(f) != 0 mod p.
bool irreducible_mod_p(const ModPoly& f);

/// Distinct-degree factorization of a monic squarefree f: pairs
/// (product of all irreducible factors of degree d, d).
std::vector<std::pair<ModPoly, int>> distinct_degree_factor(const ModPoly& f);

/// Full factorization of a monic squarefree f into monic irreducibles,
/// sorted by (degree, coefficients). Cantor-Zassenhaus equal-degree
/// splitting with a caller-seeded generator; p must be odd.
std::vector<ModPoly> factor_squarefree_mod_p(const ModPoly& f, std::mt19937_64& rng);

}  // namespace sevenfour::arith
