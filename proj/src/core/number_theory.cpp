#include "sevenfour/core/number_theory.hpp"

#include <algorithm>
#include <numeric>

#include "sevenfour/core/errors.hpp"
#include "sevenfour/core/factor_integer.hpp"

namespace sevenfour::arith {

int jacobi_symbol(const BigInt& a_in, const BigInt& n_in) {
  if (n_in < 1 || mpz_even_p(n_in.get_mpz_t())) {
    throw InvalidInput("Jacobi symbol needs an odd positive modulus");
  }
  BigInt a = mod_floor(a_in, n_in);
  BigInt n = n_in;
  int result = 1;
  while (a != 0) {
    const unsigned long twos = mpz_scan1(a.get_mpz_t(), 0);
    if (twos != 0) {
      mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), twos);
      const unsigned long n8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if ((twos & 1U) && (n8 == 3 || n8 == 5)) result = -result;
    }
    // quadratic reciprocity
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) result = -result;
    std::swap(a, n);
    a = mod_floor(a, n);
  }
  return n == 1 ? result : 0;
}

unsigned long gcd_ul(unsigned long a, unsigned long b) { return std::gcd(a, b); }

unsigned long euler_phi(unsigned long n) {
  if (n == 0) throw InvalidInput("phi(0)");
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int moebius(unsigned long n) {
  if (n == 0) throw InvalidInput("moebius(0)");
  int mu = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<unsigned long> divisors(unsigned long n) {
  if (n == 0) throw InvalidInput("divisors(0)");
  std::vector<unsigned long> out;
  for (unsigned long i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      out.push_back(i);
      if (i != n / i) out.push_back(n / i);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned long multiplicative_order(const BigInt& p, unsigned long d) {
  if (d < 2) throw InvalidInput("multiplicative order needs modulus >= 2");
  const BigInt dd(d);
  BigInt g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), dd.get_mpz_t());
  if (g != 1) throw InvalidInput("multiplicative order needs gcd(p, d) = 1");
  const unsigned long base = mod_floor(p, dd).get_ui();
  // The order divides phi(d); strip prime factors of phi(d) while the power stays 1.
  unsigned long order = euler_phi(d);
  const Factorization f = factor_integer(BigInt(order));
  auto powmod = [d](unsigned long b, unsigned long e) {
    unsigned __int128 r = 1, x = b % d;
    while (e != 0) {
      if (e & 1U) r = r * x % d;
      x = x * x % d;
      e >>= 1U;
    }
    return static_cast<unsigned long>(r);
  };
  for (const auto& pp : f.factors) {
    const unsigned long q = pp.prime.get_ui();
    while (order % q == 0 && powmod(base, order / q) == 1) order /= q;
  }
  return order;
}

}  // namespace sevenfour::arith
