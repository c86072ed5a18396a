#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sevenfour/core/errors.hpp"
#include "sevenfour/core/factor_integer.hpp"
#include "sevenfour/core/mod_poly.hpp"
#include "sevenfour/core/number_theory.hpp"
#include "sevenfour/core/numeric_roots.hpp"
#include "sevenfour/core/poly_factor.hpp"
#include "sevenfour/core/resultant.hpp"

using namespace sevenfour;
using namespace sevenfour::arith;

TEST_SUITE("core_arith") {

TEST_CASE("int_poly basics") {
  const IntPoly f{-4, 0, 8, 4};
  CHECK(f.degree() == 3);
  CHECK(f.content() == 4);
  CHECK(f.primitive_part() == IntPoly{-1, 0, 2, 1});
  CHECK(f.content() * f.primitive_part() == f);
  CHECK(IntPoly{0, 0, 0}.is_zero());
  CHECK(IntPoly{}.degree() == -1);
  CHECK(f.eval(BigInt(-1)) == 0);
  CHECK(IntPoly{1, 1}.pow(3) == IntPoly{1, 3, 3, 1});
  CHECK(IntPoly{-1, 0, 1}.taylor_shift(1) == IntPoly{0, 2, 1});
  CHECK(IntPoly{1, 2}.inflate(2) == IntPoly{1, 0, 2});
  CHECK(exact_div(IntPoly{-1, 0, 0, 1}, IntPoly{-1, 1}) == IntPoly{1, 1, 1});
  CHECK_THROWS_AS(exact_div(IntPoly{1, 0, 1}, IntPoly{-1, 1}), InternalConsistency);
}

TEST_CASE("resultant examples") {
  const IntPoly q{4, 0, -7, 0, 4};
  CHECK(resultant(IntPoly{-1, 1}, q) == 1);
  CHECK(resultant(IntPoly{-1, 0, 0, 1}, q) == 121);
  CHECK(resultant(IntPoly{1, 1, 1}, q) == 121);
  CHECK(oracle::sylvester_resultant(IntPoly{-1, 0, 0, 1}, q) == 121);
  CHECK_THROWS_AS(resultant(IntPoly{}, q), InvalidInput);
}

TEST_CASE("resultant matches Sylvester determinant and swaps with sign") {
  oracle::Gen gen(0x5e5u);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly f = gen.poly(static_cast<int>(gen.range(1, 6)), -9, 9, true);
    const IntPoly g = gen.poly(static_cast<int>(gen.range(1, 6)), -9, 9, true);
    const BigInt r = resultant(f, g);
    CHECK(r == oracle::sylvester_resultant(f, g));
    const int s = (f.degree() * g.degree()) % 2 == 0 ? 1 : -1;
    CHECK(r == s * resultant(g, f));
  }
  // non-monic inputs too
  for (int trial = 0; trial < 100; ++trial) {
    const IntPoly f = gen.poly(static_cast<int>(gen.range(1, 5)), -9, 9);
    const IntPoly g = gen.poly(static_cast<int>(gen.range(1, 5)), -9, 9);
    CHECK(resultant(f, g) == oracle::sylvester_resultant(f, g));
  }
}

TEST_CASE("factor_integer examples") {
  const auto f80 = factor_integer(80);
  CHECK(f80.sign == 1);
  CHECK(f80.factors == std::vector<PrimePower>{{2, 4}, {5, 1}});
  const auto f11 = factor_integer(-11);
  CHECK(f11.sign == -1);
  CHECK(f11.factors == std::vector<PrimePower>{{11, 1}});
  CHECK(f11.to_string() == "-1 * 11^1");
  CHECK(factor_integer(121).factors == std::vector<PrimePower>{{11, 2}});
  CHECK(factor_integer(1).factors.empty());
  CHECK_THROWS_AS(factor_integer(0), InvalidInput);
}

TEST_CASE("factor_integer reproduces n and agrees with trial division") {
  oracle::Gen gen(0xfac7u);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<unsigned long long>(gen.range(2, 4'000'000'000L)) *
                   static_cast<unsigned long long>(gen.range(1, 3000));
    const auto f = factor_integer(BigInt(std::to_string(n)));
    CHECK(f.value() == BigInt(std::to_string(n)));
    const auto ref = oracle::trial_factor(n);
    REQUIRE(f.factors.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      CHECK(f.factors[i].prime == BigInt(std::to_string(ref[i].first)));
      CHECK(f.factors[i].exponent == ref[i].second);
    }
  }
}

TEST_CASE("factor_integer splits products of large primes") {
  // two 20-digit primes need rho or ECM
  const BigInt p("99999999999999999989"), q("100000000000000000039");
  REQUIRE(is_prime(p));
  REQUIRE(is_prime(q));
  const auto f = factor_integer(p * q * 3 * 3);
  CHECK(f.value() == p * q * 9);
  CHECK(f.factors.size() == 3);
  for (const auto& pp : f.factors) CHECK(is_prime(pp.prime));
}

TEST_CASE("partial factorization keeps a composite cofactor") {
  FactorLimits lim;
  lim.require_complete = false;
  lim.rho_iterations = 16;
  lim.ecm_schedule = {};
  const BigInt p("1000000000000000000000000000057"), q("1000000000000000000000000000099");
  REQUIRE(is_prime(p));
  REQUIRE(is_prime(q));
  const auto f = factor_integer(7 * p * q, lim);
  CHECK_FALSE(f.complete());
  CHECK(f.cofactor == p * q);
  CHECK(f.value() == 7 * p * q);
  lim.require_complete = true;
  CHECK_THROWS_AS(factor_integer(7 * p * q, lim), ResourceExhausted);
}

TEST_CASE("is_prime against naive primality and known pseudoprimes") {
  for (unsigned long long n = 0; n < 20000; ++n) {
    CHECK(is_prime(BigInt(std::to_string(n))) == oracle::naive_is_prime(n));
  }
  // Carmichael numbers and strong base-2 pseudoprimes
  for (const char* c : {"561", "1105", "1729", "2047", "3215031751", "3825123056546413051",
                        "318665857834031151167461", "3317044064679887385961981"}) {
    CHECK_FALSE(is_prime(BigInt(c)));
  }
  PrimalityMethod m{};
  CHECK(is_prime(BigInt("170141183460469231731687303715884105727"), &m));  // 2^127 - 1
  CHECK(m == PrimalityMethod::kBailliePSW);
  CHECK(is_prime(BigInt("1000000007"), &m));
  CHECK(m == PrimalityMethod::kDeterministicMillerRabin);
}

TEST_CASE("is_prime agrees with GMP on random 90-bit odd numbers") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(74);
  for (int i = 0; i < 3000; ++i) {
    BigInt n = rng.get_z_bits(90) | 1;
    CHECK(is_prime(n) == (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0));
  }
}

TEST_CASE("jacobi_symbol") {
  CHECK(jacobi_symbol(-1, 11) == -1);
  CHECK(jacobi_symbol(-1, 13) == 1);
  CHECK(jacobi_symbol(2, 15) == 1);
  CHECK(jacobi_symbol(5, 1) == 1);
  CHECK_THROWS_AS(jacobi_symbol(3, 8), InvalidInput);
  CHECK_THROWS_AS(jacobi_symbol(3, -7), InvalidInput);
}

TEST_CASE("jacobi_symbol equals Euler's criterion for primes below 10^4") {
  for (long p = 3; p < 10000; p += 2) {
    if (!oracle::naive_is_prime(static_cast<unsigned long long>(p))) continue;
    for (long a = 1; a < p; a += (p < 200 ? 1 : 37)) {
      REQUIRE(jacobi_symbol(a, p) == oracle::euler_criterion(a, p));
    }
  }
}

TEST_CASE("multiplicative_order") {
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(11, 3) == 2);
  CHECK(multiplicative_order(1, 9) == 1);
  CHECK_THROWS_AS(multiplicative_order(3, 9), InvalidInput);
  for (unsigned long d = 2; d < 200; ++d) {
    for (unsigned long p = 1; p < 60; ++p) {
      if (std::gcd(p, d) != 1) continue;
      REQUIRE(multiplicative_order(p, d) == oracle::brute_order(p, d));
    }
  }
}

TEST_CASE("euler_phi, moebius and divisors") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(45) == 24);
  CHECK(moebius(30) == -1);
  CHECK(moebius(12) == 0);
  CHECK(divisors(45) == std::vector<unsigned long>{1, 3, 5, 9, 15, 45});
}

TEST_CASE("irreducible_mod_p examples") {
  CHECK(irreducible_mod_p(ModPoly(2, IntPoly{1, 1, 1})));
  CHECK_FALSE(irreducible_mod_p(ModPoly(3, IntPoly{-1, 0, 1})));
  CHECK(irreducible_mod_p(ModPoly(2, IntPoly{-1, 0, 1, 1})));  // R^3 + R^2 - 1
}

TEST_CASE("irreducible_mod_p agrees with root and quadratic-factor search") {
  // degree <= 3 over F_p: irreducible iff no root
  oracle::Gen gen(0x1dd);
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL}) {
    for (int trial = 0; trial < 60; ++trial) {
      const int deg = static_cast<int>(gen.range(2, 3));
      const IntPoly f = gen.poly(deg, 0, static_cast<long>(p) - 1, true);
      bool has_root = false;
      for (unsigned long x = 0; x < p; ++x) {
        if (mpz_divisible_ui_p(f.eval(BigInt(x)).get_mpz_t(), p)) has_root = true;
      }
      CHECK(irreducible_mod_p(ModPoly(p, f)) == !has_root);
    }
  }
}

TEST_CASE("factor_over_Z examples") {
  const auto f2 = factor_over_Z(IntPoly{-4, 0, 8, 4});
  CHECK(f2.content == 4);
  REQUIRE(f2.factors.size() == 2);
  CHECK(f2.factors[0] == std::make_pair(IntPoly{1, 1}, 1u));
  CHECK(f2.factors[1] == std::make_pair(IntPoly{-1, 1, 1}, 1u));

  const auto c = factor_over_Z(IntPoly{-1, 0, 0, 1});
  CHECK(c.content == 1);
  REQUIRE(c.factors.size() == 2);
  CHECK(c.factors[0].first == IntPoly{-1, 1});
  CHECK(c.factors[1].first == IntPoly{1, 1, 1});

  // 3x^4 + 8x^3 - 12x - 8 vanishes at x = -2, so it is not irreducible
  const IntPoly f3{-8, -12, 0, 8, 3};
  CHECK(f3.eval(BigInt(-2)) == 0);
  const auto g = factor_over_Z(f3);
  REQUIRE(g.factors.size() == 2);
  CHECK(g.factors[0].first == IntPoly{2, 1});
  CHECK(g.factors[1].first == IntPoly{-4, -4, 2, 3});

  CHECK_THROWS_AS(factor_over_Z(IntPoly{}), InvalidInput);
  CHECK_THROWS_AS(factor_over_Z(IntPoly::monomial(1, 65) + IntPoly{1}), UnsupportedSize);
}

TEST_CASE("factor_over_Z reproduces random products") {
  oracle::Gen gen(0xf00d);
  for (int trial = 0; trial < 120; ++trial) {
    IntPoly f{static_cast<long>(gen.range(1, 3)) * (gen.range(0, 1) ? 1 : -1)};
    const int parts = static_cast<int>(gen.range(1, 4));
    for (int i = 0; i < parts; ++i) f = f * gen.poly(static_cast<int>(gen.range(1, 4)), -5, 5);
    if (f.degree() > 12) continue;
    const auto fac = factor_over_Z(f);
    CHECK(fac.expand() == f);
    for (const auto& [g, e] : fac.factors) {
      CHECK(g.lead() > 0);
      CHECK(g.content() == 1);
      CHECK(e >= 1);
    }
  }
}

TEST_CASE("factor_over_Z on x^n - 1 gives the cyclotomic factors") {
  for (unsigned long n : {6UL, 12UL, 30UL, 60UL}) {
    const auto fac = factor_over_Z(IntPoly::monomial(1, n) - IntPoly{1});
    std::size_t divisor_count = 0;
    for (unsigned long e = 1; e <= n; ++e) divisor_count += n % e == 0;
    CHECK(fac.factors.size() == divisor_count);
    for (const auto& [g, e] : fac.factors) {
      CHECK(e == 1);
      bool matched = false;
      for (unsigned long k = 1; k <= n; ++k) {
        if (n % k == 0 && g == oracle::cyclotomic(k)) matched = true;
      }
      CHECK(matched);
    }
  }
}

TEST_CASE("squarefree_decomposition") {
  const IntPoly f = IntPoly{1, 1}.pow(3) * IntPoly{-2, 0, 1} * IntPoly{1, 0, 1}.pow(2);
  const auto sq = squarefree_decomposition(f);
  IntPoly prod{1};
  for (const auto& [g, e] : sq) prod = prod * g.pow(e);
  CHECK(prod == f);
}

TEST_CASE("complex_roots") {
  const auto roots = complex_roots(IntPoly{-1, 0, 0, 1});
  REQUIRE(roots.size() == 3);
  for (const auto& z : roots) CHECK(std::abs(z * z * z - Complex(1)) < 1e-12L);
  CHECK_THROWS_AS(complex_roots(IntPoly{5}), InvalidInput);
}

}  // TEST_SUITE
