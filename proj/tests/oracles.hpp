// Slow, obviously-correct reference computations used only by the tests.
// None of these share code with the library routines they check.
#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sevenfour/core/int_poly.hpp"

namespace oracle {

using sevenfour::BigInt;
using sevenfour::Rational;
using sevenfour::arith::IntPoly;

// Bareiss fraction-free determinant.
inline BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Res(f, g) as the determinant of the Sylvester matrix.
inline BigInt sylvester_resultant(const IntPoly& f, const IntPoly& g) {
  const int m = f.degree(), n = g.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) s[i][i + j] = f.coeff(static_cast<std::size_t>(m - j));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = g.coeff(static_cast<std::size_t>(n - j));
  }
  return determinant(s);
}

// Schoolbook long division by a monic polynomial; returns the quotient and
// asserts nothing. Coefficient vectors, lowest first.
inline std::pair<std::vector<BigInt>, std::vector<BigInt>> monic_divide(std::vector<BigInt> num,
                                                                       const std::vector<BigInt>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {{}, num};
  std::vector<BigInt> q(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    const BigInt c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  num.resize(dn);
  return {q, num};
}

// Phi_d by dividing x^d - 1 by Phi_e for every proper divisor e.
inline IntPoly cyclotomic(unsigned long d) {
  std::vector<BigInt> num(d + 1, 0);
  num[0] = -1;
  num[d] = 1;
  for (unsigned long e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    const IntPoly pe = cyclotomic(e);
    num = monic_divide(num, pe.coeffs()).first;
  }
  return IntPoly(num);
}

// x^m psi(x + 1/x) expanded, m = deg psi.
inline IntPoly palindromic_lift(const IntPoly& psi) {
  const auto m = static_cast<std::size_t>(psi.degree());
  IntPoly acc;
  for (std::size_t k = 0; k <= m; ++k) {
    // (x^2 + 1)^k x^(m - k)
    IntPoly term{1};
    for (std::size_t j = 0; j < k; ++j) term = term * IntPoly{1, 0, 1};
    acc += psi.coeff(k) * term * IntPoly::monomial(1, m - k);
  }
  return acc;
}

// Trial division up to sqrt(n); fine for n below ~1e14.
inline std::vector<std::pair<unsigned long long, unsigned>> trial_factor(unsigned long long n) {
  std::vector<std::pair<unsigned long long, unsigned>> out;
  for (unsigned long long p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool naive_is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

inline unsigned long brute_order(unsigned long p, unsigned long d) {
  unsigned long x = p % d, k = 1;
  while (x != 1 % d) {
    x = (x * (p % d)) % d;
    ++k;
  }
  return k;
}

// Euler's criterion a^((p-1)/2) mod p mapped to {-1, 0, 1}.
inline int euler_criterion(long a, long p) {
  BigInt r, base = a, e = (p - 1) / 2, mod = p;
  base %= mod;
  if (base < 0) base += mod;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

// s(n) = 2^(n+1) Im(beta^n) for odd n from the binomial expansion of
// ((sqrt15 + i)/2)^n: only odd powers of i contribute, with even powers of sqrt15.
inline BigInt s_binomial(unsigned long n) {
  BigInt sum = 0, binom = 1, pow15;
  for (unsigned long k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * (n - k + 1) / k;
    if (k % 2 == 1) {
      mpz_ui_pow_ui(pow15.get_mpz_t(), 15, (n - k) / 2);
      const BigInt term = binom * pow15;
      sum += ((k - 1) / 2) % 2 == 0 ? term : BigInt(-term);
    }
  }
  // s = 2 * sum / 2^n
  BigInt out;
  mpz_tdiv_q_2exp(out.get_mpz_t(), sum.get_mpz_t(), n - 1);
  return out;
}

// prod over primitive d-th roots z (up to inversion) of (4(z^2 + z^-2) - 7), in long double.
inline long double norm_numeric(unsigned long d) {
  const long double pi = 3.141592653589793238462643383279502884L;
  long double prod = 1;
  for (unsigned long k = 1; k < d; ++k) {
    if (std::gcd(k, d) != 1 || 2 * k > d) continue;
    prod *= 8 * std::cos(4 * pi * static_cast<long double>(k) / d) - 7;
  }
  return prod;
}

// Affine point on a long Weierstrass curve with rational coordinates; `inf` marks O.
struct Point {
  Rational x, y;
  bool inf = false;
};

struct Curve {
  Rational a1, a2, a3, a4, a6;

  bool on_curve(const Point& p) const {
    if (p.inf) return true;
    return p.y * p.y + a1 * p.x * p.y + a3 * p.y == p.x * p.x * p.x + a2 * p.x * p.x + a4 * p.x + a6;
  }

  Point neg(const Point& p) const {
    if (p.inf) return p;
    return {p.x, -p.y - a1 * p.x - a3, false};
  }

  // Textbook chord-and-tangent addition.
  Point add(const Point& p, const Point& q) const {
    if (p.inf) return q;
    if (q.inf) return p;
    Rational lambda, nu;
    if (p.x == q.x) {
      if (p.y + q.y + a1 * q.x + a3 == 0) return {0, 0, true};
      lambda = (3 * p.x * p.x + 2 * a2 * p.x + a4 - a1 * p.y) / (2 * p.y + a1 * p.x + a3);
      nu = (-p.x * p.x * p.x + a4 * p.x + 2 * a6 - a3 * p.y) / (2 * p.y + a1 * p.x + a3);
    } else {
      lambda = (q.y - p.y) / (q.x - p.x);
      nu = (p.y * q.x - q.y * p.x) / (q.x - p.x);
    }
    const Rational x3 = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
    const Rational y3 = -(lambda + a1) * x3 - nu - a3;
    return {x3, y3, false};
  }
};

// Deterministic small-integer generator used by the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  IntPoly poly(int degree, long lo, long hi, bool monic = false) {
    std::vector<BigInt> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(range(lo, hi));
    if (monic) c.back() = 1;
    while (c.back() == 0) c.back() = range(1, hi);
    return IntPoly(c);
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
