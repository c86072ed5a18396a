#include "sevenfour/beta/beta_sequence.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "sevenfour/core/errors.hpp"
#include "sevenfour/core/number_theory.hpp"
#include "sevenfour/cyclo/cyclotomic.hpp"

namespace sevenfour::beta {

QuarticElem QuarticElem::operator*(const QuarticElem& o) const {
  // i^2 = -1, sqrt15^2 = 15, (i sqrt15)^2 = -15
  return {a * o.a - b * o.b + 15 * c * o.c - 15 * d * o.d,
          a * o.b + b * o.a + 15 * (c * o.d + d * o.c),
          a * o.c + c * o.a - (b * o.d + d * o.b),
          a * o.d + d * o.a + b * o.c + c * o.b};
}

QuarticElem QuarticElem::operator+(const QuarticElem& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }

QuarticElem quartic_pow(const QuarticElem& x, unsigned long n) {
  QuarticElem result = QuarticElem::one(), base = x;
  while (n != 0) {
    if (n & 1UL) result = result * base;
    n >>= 1UL;
    if (n != 0) base = base * base;
  }
  return result;
}

namespace {

// Integer coordinates of (i + sqrt15)^n on {1, i, sqrt15, i sqrt15}.
struct Z4 {
  BigInt a, b, c, d;
  Z4 operator*(const Z4& o) const {
    return {a * o.a - b * o.b + 15 * c * o.c - 15 * d * o.d, a * o.b + b * o.a + 15 * (c * o.d + d * o.c),
            a * o.c + c * o.a - (b * o.d + d * o.b), a * o.d + d * o.a + b * o.c + c * o.b};
  }
};

void require_odd(unsigned long n) {
  if (n % 2 == 0) throw InvalidInput("s(n) is only integral for odd n, got " + std::to_string(n));
}

}  // namespace

BigInt s_of_n(unsigned long n) {
  require_odd(n);
  Z4 result{1, 0, 0, 0}, base{0, 1, 1, 0};
  for (unsigned long e = n; e != 0;) {
    if (e & 1UL) result = result * base;
    e >>= 1UL;
    if (e != 0) base = base * base;
  }
  // gamma^n = (i + sqrt15)^n / 2^n and s(n) = 2 * (i-coordinate of gamma^n).
  if (result.b != 0 && mpz_scan1(result.b.get_mpz_t(), 0) < n - 1) {
    throw InternalConsistency("i-coordinate of (i+sqrt15)^n not divisible by 2^(n-1)");
  }
  BigInt s;
  mpz_tdiv_q_2exp(s.get_mpz_t(), result.b.get_mpz_t(), n - 1);
  return s;
}

bool s_residue_audit(unsigned long n) {
  const BigInt s = s_of_n(n);
  return mpz_fdiv_ui(s.get_mpz_t(), 4) == n % 4;
}

BigInt norm_product(unsigned long n) {
  require_odd(n);
  BigInt acc = 1;
  for (unsigned long d : arith::divisors(n)) acc *= cyclo::norm_cd_value(d);
  return acc;
}

bool abs_product_identity_audit(unsigned long n) { return abs(norm_product(n)) == abs(s_of_n(n)); }

bool product_identity_audit(unsigned long n) {
  if (n % 4 != 1 || n < 5) throw InvalidInput("signed identity needs n = 1 mod 4 and n >= 5");
  return norm_product(n) == s_of_n(n);
}

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

struct Enclosure {
  double mid = 0, half_width = 0;
  int sign_hint = 0;
  bool narrow = false;
};

// frac(n * atan(1/sqrt15) / 2pi) enclosed with directed rounding at `prec` bits.
Enclosure enclose(unsigned long n, mpfr_prec_t prec, double width_target) {
  Mpfr lo(prec), hi(prec), pi_lo(prec), pi_hi(prec), t(prec), k(prec);
  // Lower end: atan is increasing, so shrink the argument and enlarge the divisor.
  mpfr_sqrt_ui(t.get(), 15, MPFR_RNDU);
  mpfr_ui_div(lo.get(), 1, t.get(), MPFR_RNDD);
  mpfr_atan(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_mul_2ui(pi_hi.get(), pi_hi.get(), 1, MPFR_RNDU);
  mpfr_div(lo.get(), lo.get(), pi_hi.get(), MPFR_RNDD);
  mpfr_mul_ui(lo.get(), lo.get(), n, MPFR_RNDD);

  mpfr_sqrt_ui(t.get(), 15, MPFR_RNDD);
  mpfr_ui_div(hi.get(), 1, t.get(), MPFR_RNDU);
  mpfr_atan(hi.get(), hi.get(), MPFR_RNDU);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_mul_2ui(pi_lo.get(), pi_lo.get(), 1, MPFR_RNDD);
  mpfr_div(hi.get(), hi.get(), pi_lo.get(), MPFR_RNDU);
  mpfr_mul_ui(hi.get(), hi.get(), n, MPFR_RNDU);

  mpfr_floor(k.get(), lo.get());
  mpfr_sub(lo.get(), lo.get(), k.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), hi.get(), k.get(), MPFR_RNDU);

  Enclosure out;
  const bool below_one = mpfr_cmp_ui(hi.get(), 1) < 0;
  if (below_one && mpfr_sgn(lo.get()) > 0 && mpfr_cmp_d(hi.get(), 0.5) < 0) out.sign_hint = 1;
  if (below_one && mpfr_cmp_d(lo.get(), 0.5) > 0) out.sign_hint = -1;

  mpfr_sub(t.get(), hi.get(), lo.get(), MPFR_RNDU);
  out.narrow = mpfr_get_d(t.get(), MPFR_RNDU) < width_target;
  mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDU);
  out.half_width = mpfr_get_d(t.get(), MPFR_RNDU);
  mpfr_add(t.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDN);
  out.mid = mpfr_get_d(t.get(), MPFR_RNDN);
  return out;
}

}  // namespace

AngleInterval angle_prescreen(unsigned long n, unsigned precision_bits) {
  if (precision_bits < 64) throw InvalidInput("angle prescreen needs at least 64 bits of precision");
  AngleInterval out;
  out.precision_bits = precision_bits;
  if (n == 0) return out;
  const double target = std::ldexp(1.0, -static_cast<int>(precision_bits / 2));
  for (mpfr_prec_t prec = precision_bits;; prec += 64) {
    const Enclosure e = enclose(n, prec, target);
    if (!e.narrow) continue;
    out.fraction = e.mid;
    // Rounding the midpoint to double costs at most half an ulp below 1.
    out.error_bound = e.half_width + std::ldexp(1.0, -53);
    out.sign_hint = e.sign_hint;
    out.precision_bits = static_cast<unsigned>(prec);
    return out;
  }
}

std::vector<unsigned long> semigroup_elements(const std::vector<unsigned long>& generators, unsigned long bound) {
  std::vector<unsigned long> out{1};
  for (unsigned long g : generators) {
    if (g < 2) throw InvalidInput("semigroup generators must be >= 2");
    const std::size_t existing = out.size();
    for (std::size_t i = 0; i < existing; ++i) {
      for (unsigned long v = out[i]; v <= bound / g;) {
        v *= g;
        out.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(out.begin());  // drop 1
  return out;
}

namespace {

void validate_generators(const std::vector<unsigned long>& generators) {
  std::vector<unsigned long> g = generators;
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  if (g.size() < 2) throw InvalidInput("need at least two distinct generators (a single generator is lacunary)");
  for (unsigned long p : g) {
    if (p % 4 != 1 || !arith::is_prime(BigInt(p))) {
      throw InvalidInput("generator " + std::to_string(p) + " is not a prime = 1 mod 4");
    }
  }
}

}  // namespace

SignSequence build_n_sequence(const std::vector<unsigned long>& generators, unsigned count,
                              const SearchOptions& options) {
  validate_generators(generators);
  if (count < 1) throw InvalidInput("sequence length must be at least 1");
  SignSequence seq;
  seq.generators = generators;
  const std::vector<unsigned long> multipliers = semigroup_elements(generators, options.budget);
  unsigned long prev = 1;
  for (unsigned i = 1; i <= count; ++i) {
    const int want = (i % 2 == 1) ? -1 : 1;
    bool found = false;
    for (unsigned long m : multipliers) {
      if (m > ~0UL / prev) break;
      const unsigned long n = prev * m;
      const AngleInterval pre = angle_prescreen(n, options.precision_bits);
      if (pre.sign_hint == -want) continue;
      const int exact = sgn(s_of_n(n));
      if (pre.sign_hint != 0 && pre.sign_hint != exact) {
        throw InternalConsistency("angle prescreen disagrees with the exact sign at n=" + std::to_string(n));
      }
      if (exact != want) continue;
      seq.entries.push_back({n, exact, pre});
      prev = n;
      found = true;
      break;
    }
    if (!found) {
      throw ResourceExhausted("no multiplier up to the search budget " + std::to_string(options.budget) +
                              " gives the required sign at step " + std::to_string(i));
    }
  }
  return seq;
}

FactorLimits certificate_limits() {
  FactorLimits limits;
  limits.require_complete = false;
  limits.stop_when = [](const Factorization& f) { return !cyclo::odd_exponent_primes_3mod4(f).empty(); };
  return limits;
}

std::vector<RamificationCertificate> extract_d_sequence(const SignSequence& seq, const FactorLimits& limits) {
  std::vector<RamificationCertificate> out;
  unsigned long prev = 0;
  for (std::size_t i = 0; i < seq.entries.size(); ++i) {
    const unsigned long n = seq.entries[i].n;
    RamificationCertificate cert;
    cert.index = static_cast<unsigned>(i + 1);
    for (unsigned long d : arith::divisors(n)) {
      if (d == 1 || (prev != 0 && prev % d == 0)) continue;
      BigInt v = cyclo::norm_cd_value(d);
      if (v < 0) {
        cert.d = d;
        cert.norm = std::move(v);
        break;
      }
    }
    if (cert.d == 0) {
      throw InternalConsistency("no divisor of n=" + std::to_string(n) + " has a negative norm");
    }
    cert.factorization = arith::factor_integer(cert.norm, limits);
    for (const BigInt& p : cyclo::odd_exponent_primes_3mod4(cert.factorization)) {
      if (!(p.fits_ulong_p() && cert.d % p.get_ui() == 0)) cert.primes.push_back(p);
    }
    if (cert.primes.empty()) {
      if (cert.factorization.complete()) {
        throw InternalConsistency("complete factorization of a norm = 3 mod 4 has no prime = 3 mod 4 to an odd power");
      }
      throw ResourceExhausted("factoring budget ran out before a ramified prime was found for d=" +
                              std::to_string(cert.d));
    }
    out.push_back(std::move(cert));
    prev = n;
  }
  return out;
}

std::string certificate_problem(const std::vector<RamificationCertificate>& certs) {
  std::vector<unsigned long> seen;
  for (const auto& c : certs) {
    const std::string tag = "certificate " + std::to_string(c.index) + " (d=" + std::to_string(c.d) + "): ";
    if (mpz_fdiv_ui(BigInt(abs(c.norm)).get_mpz_t(), 4) != 3) return tag + "|norm| is not 3 mod 4";
    if (mpz_fdiv_ui(c.norm.get_mpz_t(), 4) != 1) return tag + "norm is not 1 mod 4";
    if (c.primes.empty()) return tag + "no ramified prime";
    if (c.factorization.value() != c.norm) return tag + "factorization does not multiply back to the norm";
    for (const auto& p : c.primes) {
      if (mpz_fdiv_ui(p.get_mpz_t(), 4) != 3) return tag + "listed prime not 3 mod 4";
      if (c.factorization.exponent_of(p) % 2 == 0) return tag + "listed prime has even exponent";
      if (p.fits_ulong_p() && c.d % p.get_ui() == 0) return tag + "listed prime divides d";
      if (!arith::is_prime(p)) return tag + "listed prime fails the primality test";
    }
    if (std::find(seen.begin(), seen.end(), c.d) != seen.end()) return tag + "d repeats an earlier certificate";
    seen.push_back(c.d);
  }
  return {};
}

}  // namespace sevenfour::beta
