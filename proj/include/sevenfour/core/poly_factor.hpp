#pragma once

#include <utility>
#include <vector>

#include "sevenfour/core/int_poly.hpp"

namespace sevenfour::arith {

struct PolyFactorization {
  /// Signed content; content * prod factor^exponent reproduces the input.
  BigInt content = 1;
  /// Primitive irreducible factors with positive leading coefficient, sorted
  /// by (degree, coefficients).
  std::vector<std::pair<IntPoly, unsigned>> factors;

  IntPoly expand() const;
  bool irreducible() const { return factors.size() == 1 && factors.front().second == 1; }
};

constexpr int kDefaultFactorDegreeBound = 64;

/// Factorization over Z: squarefree split (Yun), Cantor-Zassenhaus modulo the
/// best of a few small primes, multifactor quadratic Hensel lifting past the
/// Mignotte bound, then subset recombination. Throws UnsupportedSize above
/// `max_degree` and InvalidInput on the zero polynomial.
PolyFactorization factor_over_Z(const IntPoly& f, int max_degree = kDefaultFactorDegreeBound);

/// Squarefree decomposition of a primitive polynomial with positive leading
/// coefficient: pairs (a_i, i) with f = prod a_i^i, each a_i squarefree.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f);

}  // namespace sevenfour::arith
