#include "sevenfour/core/factor_integer.hpp"

#include <algorithm>
#include <numeric>
#include <mutex>
#include <sstream>

#include "sevenfour/core/errors.hpp"
#include "sevenfour/core/number_theory.hpp"

namespace sevenfour::arith {

const BigInt& deterministic_mr_bound() {
  static const BigInt bound("3317044064679887385961981", 10);
  return bound;
}

std::vector<unsigned long> primes_up_to(unsigned long bound) {
  std::vector<unsigned long> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (unsigned long i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = primes_up_to(1'000'000);
  return primes;
}

// Odd-number primality bitmap shared by ECM stage 2; grown on demand.
class PrimeBitmap {
 public:
  bool is_prime(unsigned long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    return !composite_[n / 2];
  }
  void ensure(unsigned long bound) {
    if (bound <= limit_) return;
    limit_ = bound;
    composite_.assign(bound / 2 + 1, false);
    composite_[0] = true;  // 1
    for (unsigned long i = 3; i * i <= bound; i += 2) {
      if (composite_[i / 2]) continue;
      for (unsigned long j = i * i; j <= bound; j += 2 * i) composite_[j / 2] = true;
    }
  }

 private:
  unsigned long limit_ = 0;
  std::vector<bool> composite_;
};

bool strong_probable_prime(const BigInt& n, const BigInt& base) {
  BigInt d = n - 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  BigInt x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const BigInt nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

BigInt half_mod(BigInt v, const BigInt& n) {
  v = mod_floor(v, n);
  if (mpz_odd_p(v.get_mpz_t())) v += n;
  mpz_tdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), 1);
  return v;
}

// Strong Lucas probable-prime test with Selfridge parameters (P = 1).
bool strong_lucas_probable_prime(const BigInt& n) {
  if (is_perfect_square(n)) return false;
  long dval = 5;
  for (;;) {
    const int j = jacobi_symbol(BigInt(dval), n);
    if (j == -1) break;
    if (j == 0 && abs(BigInt(dval)) != n) return false;
    dval = dval > 0 ? -(dval + 2) : -dval + 2;
  }
  const BigInt dd(dval);
  const BigInt q = mod_floor(BigInt((1 - dval) / 4), n);
  BigInt k = n + 1;
  const unsigned long s = mpz_scan1(k.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(k.get_mpz_t(), k.get_mpz_t(), s);

  BigInt u = 1, v = 1, qk = q;
  const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t i = bits - 1; i-- > 0;) {
    u = u * v % n;
    v = mod_floor(v * v - 2 * qk, n);
    qk = qk * qk % n;
    if (mpz_tstbit(k.get_mpz_t(), i)) {
      BigInt u2 = half_mod(u + v, n);
      BigInt v2 = half_mod(mod_floor(dd * u + v, n), n);
      u = std::move(u2);
      v = std::move(v2);
      qk = qk * q % n;
    }
  }
  if (u == 0 || v == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    v = mod_floor(v * v - 2 * qk, n);
    if (v == 0) return true;
    qk = qk * qk % n;
  }
  return false;
}

}  // namespace

bool is_prime(const BigInt& n, PrimalityMethod* method) {
  if (method != nullptr) *method = PrimalityMethod::kTrial;
  if (n < 2) return false;
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL, 41UL}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < 43 * 43) return true;
  if (n < deterministic_mr_bound()) {
    if (method != nullptr) *method = PrimalityMethod::kDeterministicMillerRabin;
    for (unsigned long b : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL, 41UL}) {
      if (!strong_probable_prime(n, BigInt(b))) return false;
    }
    return true;
  }
  if (method != nullptr) *method = PrimalityMethod::kBailliePSW;
  return strong_probable_prime(n, 2) && strong_lucas_probable_prime(n);
}

BigInt Factorization::value() const {
  BigInt v = cofactor;
  for (const auto& pp : factors) v *= ipow(pp.prime, pp.exponent);
  return sign < 0 ? BigInt(-v) : v;
}

unsigned long Factorization::exponent_of(const BigInt& p) const {
  for (const auto& pp : factors) {
    if (pp.prime == p) return pp.exponent;
  }
  return 0;
}

std::string Factorization::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " * ";
    first = false;
  };
  if (sign < 0) {
    sep();
    os << "-1";
  }
  for (const auto& pp : factors) {
    sep();
    os << to_dec(pp.prime) << '^' << pp.exponent;
  }
  if (cofactor != 1) {
    sep();
    os << "[c" << mpz_sizeinbase(cofactor.get_mpz_t(), 10) << ']';
  }
  if (first) os << '1';
  return os.str();
}

std::optional<BigInt> pollard_brent(const BigInt& n, unsigned long max_iterations, unsigned long c) {
  if (n < 4) return std::nullopt;
  if (mpz_even_p(n.get_mpz_t())) return BigInt(2);
  const BigInt cc(c);
  constexpr unsigned long kBatch = 128;
  BigInt y = 2, x, ys, q = 1, g = 1;
  unsigned long r = 1, spent = 0;
  auto step = [&](BigInt& v) {
    v = v * v + cc;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      const unsigned long m = std::min(kBatch, r - k);
      for (unsigned long i = 0; i < m; ++i) {
        step(y);
        q = q * abs(x - y) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
      spent += m;
      if (spent > max_iterations && g == 1) return std::nullopt;
    }
    r *= 2;
  }
  if (g == n) {
    // Batch overshot; replay one step at a time from the saved point.
    do {
      step(ys);
      BigInt diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n) return std::nullopt;
  return g;
}

namespace {

// Montgomery curve arithmetic in XZ coordinates modulo n.
struct XZ {
  BigInt x, z;
};

class MontgomeryCurve {
 public:
  MontgomeryCurve(const BigInt& n, const BigInt& a24) : n_(n), a24_(a24) {}

  void reduce(BigInt& v) const { mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n_.get_mpz_t()); }

  XZ dbl(const XZ& p) const {
    BigInt s = p.x + p.z, d = p.x - p.z;
    s *= s;
    reduce(s);
    d *= d;
    reduce(d);
    BigInt t = s - d;
    XZ r;
    r.x = s * d;
    reduce(r.x);
    BigInt w = a24_ * t + d;
    reduce(w);
    r.z = t * w;
    reduce(r.z);
    return r;
  }

  XZ add(const XZ& p, const XZ& q, const XZ& diff) const {
    BigInt u = (p.x - p.z) * (q.x + q.z);
    BigInt v = (p.x + p.z) * (q.x - q.z);
    reduce(u);
    reduce(v);
    BigInt s = u + v, d = u - v;
    s *= s;
    reduce(s);
    d *= d;
    reduce(d);
    XZ r;
    r.x = diff.z * s;
    reduce(r.x);
    r.z = diff.x * d;
    reduce(r.z);
    return r;
  }

  XZ mul(const XZ& p, unsigned long k) const {
    if (k == 0) return {BigInt(0), BigInt(0)};
    if (k == 1) return p;
    XZ r0 = p, r1 = dbl(p);
    const int top = 63 - __builtin_clzl(k);
    for (int i = top - 1; i >= 0; --i) {
      if ((k >> i) & 1UL) {
        r0 = add(r1, r0, p);
        r1 = dbl(r1);
      } else {
        r1 = add(r1, r0, p);
        r0 = dbl(r0);
      }
    }
    return r0;
  }

 private:
  const BigInt& n_;
  BigInt a24_;
};

std::optional<BigInt> nontrivial_gcd(const BigInt& a, const BigInt& n, bool* whole = nullptr) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  if (whole != nullptr) *whole = (g == n);
  if (g != 1 && g != n) return g;
  return std::nullopt;
}

}  // namespace

std::optional<BigInt> ecm_curve(const BigInt& n, unsigned long sigma, unsigned long b1, unsigned long b2) {
  if (sigma < 6) throw InvalidInput("ECM parameter sigma must be >= 6");
  if (n < 4) return std::nullopt;
  if (mpz_even_p(n.get_mpz_t())) return BigInt(2);

  const BigInt sg(sigma);
  const BigInt u = mod_floor(sg * sg - 5, n), v = mod_floor(4 * sg, n);
  BigInt den = 16 * u * u * u * v % n;
  bool whole = false;
  if (auto g = nontrivial_gcd(den, n, &whole)) return g;
  if (whole) return std::nullopt;
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t());
  BigInt vu = v - u;
  const BigInt a24 = mod_floor(vu * vu * vu * (3 * u + v) % n * inv, n);
  const MontgomeryCurve curve(n, a24);
  XZ q{u * u * u % n, v * v * v % n};

  // Stage 1: multiply by every maximal prime power up to b1.
  for (unsigned long p : primes_up_to(b1)) {
    unsigned long pk = p;
    while (pk <= b1 / p) pk *= p;
    q = curve.mul(q, pk);
  }
  if (auto g = nontrivial_gcd(q.z, n, &whole)) return g;
  if (whole || b2 <= b1) return std::nullopt;

  // Stage 2: primes l = m*D +- j in (b1, b2], paired against baby steps j < D/2.
  constexpr unsigned long D = 2310;
  static std::mutex bitmap_mutex;
  static PrimeBitmap bitmap;
  std::lock_guard<std::mutex> lock(bitmap_mutex);
  bitmap.ensure(b2 + D);

  std::vector<unsigned long> js;
  std::vector<XZ> baby;
  {
    const XZ q2 = curve.dbl(q);
    XZ a = q, b = curve.add(q2, q, q);  // [j]Q and [j+2]Q
    for (unsigned long j = 1; j < D / 2; j += 2) {
      if (std::gcd(j, D) == 1) {
        js.push_back(j);
        baby.push_back(a);
      }
      XZ c = curve.add(b, q2, a);
      a = std::move(b);
      b = std::move(c);
    }
  }
  const XZ qd = curve.mul(q, D);
  unsigned long m = std::max(1UL, b1 / D);
  XZ rm = curve.mul(q, m * D);
  XZ rm1 = curve.mul(q, (m + 1) * D);
  BigInt acc = 1;
  for (; m * D <= b2 + D; ++m) {
    for (std::size_t i = 0; i < js.size(); ++i) {
      const unsigned long lo = m * D - js[i], hi = m * D + js[i];
      const bool use = (lo > b1 && lo <= b2 && bitmap.is_prime(lo)) || (hi > b1 && hi <= b2 && bitmap.is_prime(hi));
      if (!use) continue;
      BigInt t = rm.x * baby[i].z - baby[i].x * rm.z;
      curve.reduce(t);
      acc *= t;
      curve.reduce(acc);
    }
    XZ next = curve.add(rm1, qd, rm);
    rm = std::move(rm1);
    rm1 = std::move(next);
  }
  return nontrivial_gcd(acc, n);
}

namespace {

class Factorer {
 public:
  Factorer(const BigInt& n, const FactorLimits& limits) : limits_(limits) {
    result_.sign = sgn(n) < 0 ? -1 : 1;
    rest_ = abs(n);
  }

  Factorization run() {
    if (trial_division()) return finish(false);
    if (rest_ == 1) return finish(false);
    std::vector<BigInt> pending{rest_};
    std::vector<BigInt> hard;
    while (!pending.empty()) {
      BigInt c = std::move(pending.back());
      pending.pop_back();
      strip_known(c);
      if (c == 1) continue;
      if (is_prime(c)) {
        if (record(c)) return finish(false);
        continue;
      }
      if (auto root = perfect_root(c)) {
        pending.push_back(*root);
        continue;
      }
      if (auto g = split(c)) {
        pending.push_back(c / *g);
        pending.push_back(*g);
        continue;
      }
      hard.push_back(c);
    }
    return finish(!hard.empty());
  }

 private:
  // Returns true when stop_when asked to end the search.
  bool trial_division() {
    const unsigned long bound = std::min(limits_.trial_bound, small_primes().back());
    for (unsigned long p : small_primes()) {
      if (p > bound) break;
      if (BigInt(p) * p > rest_) break;
      if (mpz_divisible_ui_p(rest_.get_mpz_t(), p)) {
        if (record(BigInt(p))) return true;
      }
    }
    // Whatever survives below the square of the trial bound is prime.
    if (rest_ > 1) {
      const BigInt tb(bound);
      if (rest_ < tb * tb) return record(rest_);
    }
    return false;
  }

  bool record(BigInt p) {  // by value: callers may pass rest_ itself
    BigInt cofactor;
    const unsigned long e = mpz_remove(cofactor.get_mpz_t(), rest_.get_mpz_t(), p.get_mpz_t());
    if (e == 0) throw InternalConsistency("recorded prime does not divide the remaining value");
    rest_ = cofactor;
    result_.factors.push_back({p, e});
    if (!limits_.stop_when) return false;
    return limits_.stop_when(snapshot());
  }

  void strip_known(BigInt& c) const {
    for (const auto& pp : result_.factors) {
      mpz_remove(c.get_mpz_t(), c.get_mpz_t(), pp.prime.get_mpz_t());
    }
  }

  static std::optional<BigInt> perfect_root(const BigInt& c) {
    if (!mpz_perfect_power_p(c.get_mpz_t())) return std::nullopt;
    const std::size_t bits = mpz_sizeinbase(c.get_mpz_t(), 2);
    BigInt r;
    for (unsigned long k = 2; k <= bits; ++k) {
      if (mpz_root(r.get_mpz_t(), c.get_mpz_t(), k) != 0) return r;
    }
    return std::nullopt;
  }

  std::optional<BigInt> split(const BigInt& c) {
    for (unsigned long cc = 1; cc <= 3; ++cc) {
      if (auto g = pollard_brent(c, limits_.rho_iterations / 3, cc)) return g;
    }
    for (const auto& stage : limits_.ecm_schedule) {
      for (unsigned i = 0; i < stage.curves; ++i) {
        if (auto g = ecm_curve(c, next_sigma_++, stage.b1, 100 * stage.b1)) return g;
      }
    }
    return std::nullopt;
  }

  Factorization snapshot() const {
    Factorization f = result_;
    f.cofactor = rest_;
    std::sort(f.factors.begin(), f.factors.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return f;
  }

  Factorization finish(bool incomplete) {
    Factorization f = snapshot();
    if (incomplete && limits_.require_complete) {
      throw ResourceExhausted("factoring budget exhausted with a " +
                              std::to_string(mpz_sizeinbase(rest_.get_mpz_t(), 10)) + "-digit composite left");
    }
    return f;
  }

  const FactorLimits& limits_;
  Factorization result_;
  BigInt rest_;
  unsigned long next_sigma_ = 6;
};

}  // namespace

Factorization factor_integer(const BigInt& n, const FactorLimits& limits) {
  if (n == 0) throw InvalidInput("cannot factor zero");
  return Factorer(n, limits).run();
}

}  // namespace sevenfour::arith
