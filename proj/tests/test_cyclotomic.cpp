#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sevenfour/core/errors.hpp"
#include "sevenfour/core/number_theory.hpp"
#include "sevenfour/core/resultant.hpp"
#include "sevenfour/cyclo/cyclotomic.hpp"

using namespace sevenfour;
using namespace sevenfour::cyclo;

TEST_SUITE("cyclotomic") {

TEST_CASE("cyclotomic_poly examples") {
  CHECK(cyclotomic_poly(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_poly(3) == IntPoly{1, 1, 1});
  const IntPoly p15 = cyclotomic_poly(15);
  CHECK(p15.degree() == 8);
  CHECK(p15.lead() == 1);
  CHECK(p15.eval(BigInt(1)) == 1);
}

TEST_CASE("cyclotomic_poly matches repeated division of x^d - 1") {
  for (unsigned long d = 1; d <= 150; ++d) {
    const IntPoly p = cyclotomic_poly(d);
    REQUIRE(p == oracle::cyclotomic(d));
    CHECK(p.degree() == static_cast<int>(arith::euler_phi(d)));
  }
}

TEST_CASE("real_minimal_poly examples and expansion oracle") {
  CHECK(real_minimal_poly(3) == IntPoly{1, 1});
  CHECK(real_minimal_poly(5) == IntPoly{-1, 1, 1});
  CHECK(real_minimal_poly(7) == IntPoly{-1, -2, 1, 1});
  CHECK_THROWS_AS(real_minimal_poly(4), InvalidInput);
  CHECK_THROWS_AS(real_minimal_poly(1), InvalidInput);
  for (unsigned long d = 3; d <= 201; d += 2) {
    const IntPoly psi = real_minimal_poly(d);
    REQUIRE(psi.degree() == static_cast<int>(arith::euler_phi(d) / 2));
    CHECK(psi.lead() == 1);
    CHECK(oracle::palindromic_lift(psi) == cyclotomic_poly(d));
  }
}

TEST_CASE("cyc_data") {
  const CycData c = cyc_data(9);
  CHECK(c.phi == 6);
  CHECK(c.cyclotomic == cyclotomic_poly(9));
  CHECK(c.real_minimal == real_minimal_poly(9));
}

TEST_CASE("norm_cd examples") {
  const NormResult n3 = norm_cd(3);
  CHECK(n3.value == -11);
  CHECK(n3.residue_mod4 == 3);
  CHECK(n3.ramified_primes == std::vector<BigInt>{11});
  const NormResult n5 = norm_cd(5);
  CHECK(n5.value == 61);
  CHECK(n5.residue_mod4 == 1);
  CHECK(n5.ramified_primes.empty());
  CHECK(norm_cd_value(1) == 1);
  CHECK_THROWS_AS(norm_cd(4), InvalidInput);
}

TEST_CASE("norm_cd_value matches a floating product over conjugates") {
  for (unsigned long d = 3; d <= 41; d += 2) {
    const long double approx = oracle::norm_numeric(d);
    const long double exact = norm_cd_value(d).get_d();
    CHECK(std::fabs(approx - exact) <= 1e-9L * std::max<long double>(1, std::fabs(exact)));
  }
}

TEST_CASE("norm_cd_value is 1 mod 4 and odd for odd d up to 501") {
  for (unsigned long d = 3; d <= 501; d += 2) {
    const BigInt v = norm_cd_value(d);
    REQUIRE(mpz_fdiv_ui(v.get_mpz_t(), 4) == 1);
  }
}

TEST_CASE("norm_cd_via_resultant examples") {
  CHECK(norm_cd_via_resultant(3) == -11);
  CHECK(norm_cd_via_resultant(5) == 61);
  const BigInt n9 = norm_cd_via_resultant(9);
  CHECK(mpz_fdiv_ui(n9.get_mpz_t(), 4) == 1);
  CHECK(n9 == norm_cd_value(9));
}

TEST_CASE("resultant route squared matches the Sylvester determinant for small d") {
  const IntPoly q{4, 0, -7, 0, 4};
  for (unsigned long d : {3UL, 5UL, 7UL, 9UL, 11UL, 15UL}) {
    const BigInt v = norm_cd_value(d);
    CHECK(oracle::sylvester_resultant(cyclotomic_poly(d), q) == v * v);
  }
}

TEST_CASE("two norm algorithms agree for odd d up to 201") {
  for (unsigned long d = 3; d <= 201; d += 2) REQUIRE(norm_cd_via_resultant(d) == norm_cd_value(d));
}

TEST_CASE("ramified primes are exactly the odd-exponent primes 3 mod 4") {
  for (unsigned long d = 3; d <= 61; d += 2) {
    const NormResult r = norm_cd(d);
    REQUIRE(r.factorization.complete());
    CHECK(r.factorization.value() == r.value);
    std::vector<BigInt> expected;
    for (const auto& pp : r.factorization.factors) {
      if (mpz_fdiv_ui(pp.prime.get_mpz_t(), 4) == 3 && pp.exponent % 2 == 1) expected.push_back(pp.prime);
    }
    CHECK(r.ramified_primes == expected);
    // a norm = 3 mod 4 in absolute value forces at least one such prime
    if (r.residue_mod4 == 3) CHECK_FALSE(r.ramified_primes.empty());
  }
}

TEST_CASE("surgery_ramified_primes") {
  CHECK(surgery_ramified_primes(3) == std::vector<BigInt>{11});
  CHECK(surgery_ramified_primes(5).empty());
  CHECK(surgery_ramified_primes(1).empty());
}

TEST_CASE("order bound examples") {
  CHECK(order_bound_audit(3));
  CHECK(order_bound_audit(5));
  CHECK(order_bound_audit(7));
  const OrderAudit a = order_bound_report(3);
  REQUIRE(a.orders.size() == 1);
  CHECK(a.orders[0].first == 11);
  CHECK(a.orders[0].second == 2);
}

TEST_CASE("order bound holds for odd d up to 201 with brute-force orders") {
  for (unsigned long d = 3; d <= 201; d += 2) {
    const OrderAudit a = order_bound_report(d);
    REQUIRE(a.ok);
    for (const auto& [p, ord] : a.orders) {
      if (p.fits_ulong_p()) CHECK(ord == oracle::brute_order(p.get_ui(), d));
      CHECK((ord == 1 || ord == 2));
    }
  }
}

}  // TEST_SUITE
