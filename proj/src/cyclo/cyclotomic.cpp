#include "sevenfour/cyclo/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <string>

#include "sevenfour/core/errors.hpp"
#include "sevenfour/core/number_theory.hpp"
#include "sevenfour/core/resultant.hpp"

namespace sevenfour::cyclo {

namespace {

void require_odd(unsigned long d) {
  if (d == 0 || d % 2 == 0) throw InvalidInput("d must be odd and positive, got " + std::to_string(d));
}

std::mutex memo_mutex;
std::map<unsigned long, IntPoly> memo;

IntPoly binomial_power(unsigned long k) {
  // (x^2 + 1)^k
  std::vector<BigInt> c(2 * k + 1, 0);
  BigInt b = 1;
  for (unsigned long i = 0; i <= k; ++i) {
    c[2 * i] = b;
    b = b * (k - i) / (i + 1);
  }
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly cyclotomic_poly(unsigned long d) {
  if (d == 0) throw InvalidInput("cyclotomic polynomial index must be positive");
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    if (auto it = memo.find(d); it != memo.end()) return it->second;
  }
  // Phi_d = prod_{e | d} (x^e - 1)^mu(d/e): multiply the mu = +1 binomials,
  // then divide exactly by the mu = -1 ones. Each step is linear in the degree.
  std::vector<BigInt> c{1};
  std::vector<unsigned long> denominators;
  for (unsigned long e : arith::divisors(d)) {
    const int mu = arith::moebius(d / e);
    if (mu == 1) {
      std::vector<BigInt> next(c.size() + e, 0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + e] += c[i];
        next[i] -= c[i];
      }
      c = std::move(next);
    } else if (mu == -1) {
      denominators.push_back(e);
    }
  }
  for (unsigned long e : denominators) {
    // c = q * (x^e - 1): q_i = q_(i-e) - c_i read from the bottom.
    std::vector<BigInt> q(c.size() - e, 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] = -c[i];
      if (i >= e) q[i] += q[i - e];
    }
    for (std::size_t i = q.size(); i < c.size(); ++i) {
      const BigInt expect = i >= e ? q[i - e] : BigInt(0);
      if (expect != c[i]) throw InternalConsistency("inexact division by x^e - 1");
    }
    c = std::move(q);
  }
  IntPoly f(std::move(c));
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(d, std::move(f)).first->second;
}

IntPoly real_minimal_poly(unsigned long d) {
  require_odd(d);
  if (d == 1) throw InvalidInput("real minimal polynomial needs d >= 3");
  const IntPoly phi = cyclotomic_poly(d);
  const auto m = static_cast<unsigned long>(phi.degree() / 2);
  // Peel x^(m-k) (x^2+1)^k from the top; its leading term is x^(m+k).
  std::vector<BigInt> rest = phi.coeffs();
  std::vector<BigInt> psi(m + 1, 0);
  for (unsigned long k = m + 1; k-- > 0;) {
    const BigInt top = rest[m + k];
    psi[k] = top;
    if (top == 0) continue;
    const IntPoly term = binomial_power(k);
    for (std::size_t i = 0; i < term.coeffs().size(); ++i) rest[m - k + i] -= top * term.coeffs()[i];
  }
  for (const auto& c : rest) {
    if (c != 0) throw InternalConsistency("cyclotomic polynomial is not palindromic");
  }
  return IntPoly(std::move(psi));
}

CycData cyc_data(unsigned long d) {
  require_odd(d);
  CycData out;
  out.d = d;
  out.phi = arith::euler_phi(d);
  out.cyclotomic = cyclotomic_poly(d);
  if (d >= 3) out.real_minimal = real_minimal_poly(d);
  return out;
}

BigInt norm_cd_value(unsigned long d) {
  require_odd(d);
  if (d == 1) return 1;
  // (-4)^m psi(7/4) = (-1)^m sum_k psi_k 7^k 4^(m-k)
  const IntPoly psi = real_minimal_poly(d);
  const auto m = static_cast<unsigned long>(psi.degree());
  BigInt acc = 0, p7 = 1;
  for (unsigned long k = 0; k <= m; ++k) {
    acc += psi.coeff(k) * p7 * ipow(BigInt(4), m - k);
    p7 *= 7;
  }
  return m % 2 == 0 ? acc : BigInt(-acc);
}

std::vector<BigInt> odd_exponent_primes_3mod4(const Factorization& f) {
  std::vector<BigInt> out;
  for (const auto& pp : f.factors) {
    if (pp.exponent % 2 == 1 && mpz_fdiv_ui(pp.prime.get_mpz_t(), 4) == 3) out.push_back(pp.prime);
  }
  return out;
}

NormResult norm_cd(unsigned long d, const FactorLimits& limits) {
  NormResult out;
  out.d = d;
  out.value = norm_cd_value(d);
  out.residue_mod4 = static_cast<int>(mpz_fdiv_ui(out.value.get_mpz_t(), 4));
  if (out.value < 0) out.residue_mod4 = (4 - out.residue_mod4) % 4;
  out.factorization = arith::factor_integer(out.value, limits);
  out.ramified_primes = odd_exponent_primes_3mod4(out.factorization);
  return out;
}

BigInt norm_cd_via_resultant(unsigned long d) {
  require_odd(d);
  if (d == 1) return 1;
  const BigInt sq = arith::resultant(cyclotomic_poly(d), IntPoly{4, 0, -7, 0, 4});
  if (sq < 0 || !is_perfect_square(sq)) {
    throw InternalConsistency("Res(Phi_d, 4x^4-7x^2+4) is not a perfect square for d=" + std::to_string(d));
  }
  const BigInt s = isqrt(sq);
  return mpz_fdiv_ui(s.get_mpz_t(), 4) == 1 ? s : BigInt(-s);
}

std::vector<BigInt> surgery_ramified_primes(unsigned long d) {
  if (d == 1) return {};
  return norm_cd(d).ramified_primes;
}

OrderAudit order_bound_report(unsigned long d, const FactorLimits& limits) {
  require_odd(d);
  if (d < 3) throw InvalidInput("order audit needs d >= 3");
  FactorLimits complete = limits;
  complete.require_complete = true;
  const NormResult nr = norm_cd(d, complete);
  OrderAudit out;
  out.d = d;
  for (const auto& pp : nr.factorization.factors) {
    if (pp.prime.fits_ulong_p() && d % pp.prime.get_ui() == 0) continue;
    const unsigned long ord = arith::multiplicative_order(pp.prime, d);
    out.orders.emplace_back(pp.prime, ord);
    if (ord > 2) out.ok = false;
  }
  return out;
}

bool order_bound_audit(unsigned long d, const FactorLimits& limits) { return order_bound_report(d, limits).ok; }

}  // namespace sevenfour::cyclo
