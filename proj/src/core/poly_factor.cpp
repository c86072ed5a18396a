#include "sevenfour/core/poly_factor.hpp"

#include <algorithm>
#include <random>

#include "sevenfour/core/errors.hpp"
#include "sevenfour/core/factor_integer.hpp"
#include "sevenfour/core/mod_poly.hpp"

namespace sevenfour::arith {

namespace {

BigInt sym_mod(const BigInt& c, const BigInt& m) {
  BigInt r = mod_floor(c, m);
  if (2 * r > m) r -= m;
  return r;
}

IntPoly reduce(const IntPoly& f, const BigInt& m) {
  std::vector<BigInt> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(sym_mod(c, m));
  return IntPoly(std::move(v));
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const BigInt& m) { return reduce(a * b, m); }

// Division by a monic polynomial, reduced mod m.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& h, const BigInt& m) {
  auto [q, r] = divmod(a, h);
  return {reduce(q, m), reduce(r, m)};
}

BigInt modular_inverse(const BigInt& a, const BigInt& m) {
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw InternalConsistency("leading coefficient not invertible during Hensel lifting");
  }
  return inv;
}

struct LiftState {
  IntPoly g, h, s, t;
};

// One quadratic Hensel step: from f = g*h, s*g + t*h = 1 (mod m) with h monic
// to the same relations mod m^2.
LiftState hensel_step(const IntPoly& f, const LiftState& in, const BigInt& m) {
  const BigInt m2 = m * m;
  const IntPoly e = reduce(f - in.g * in.h, m2);
  auto [q, r] = divmod_monic(mul_mod(in.s, e, m2), in.h, m2);
  const IntPoly g2 = reduce(in.g + in.t * e + q * in.g, m2);
  const IntPoly h2 = reduce(in.h + r, m2);
  const IntPoly b = reduce(in.s * g2 + in.t * h2 - IntPoly{1}, m2);
  auto [c, d] = divmod_monic(mul_mod(in.s, b, m2), h2, m2);
  const IntPoly s2 = reduce(in.s - d, m2);
  const IntPoly t2 = reduce(in.t - in.t * b - c * g2, m2);
  return {g2, h2, s2, t2};
}

// Lift f = lc * prod(factors) mod p to monic factors mod a power of p that
// reaches `target`. Returns the modulus reached.
BigInt multifactor_lift(const IntPoly& f, std::uint64_t p, const std::vector<ModPoly>& factors,
                        const BigInt& target, std::vector<IntPoly>& lifted) {
  const BigInt bp(static_cast<unsigned long>(p));
  unsigned steps = 0;
  for (BigInt m = bp; m < target; m *= m) ++steps;

  BigInt modulus = bp;
  IntPoly cur = f;
  const std::uint64_t lc_p = ModPoly(p, IntPoly::constant(f.lead())).coeffs().front();
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    ModPoly rest = ModPoly(p, std::vector<std::uint64_t>{lc_p});
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = rest * factors[j];
    const ModXgcd eg = xgcd(rest, factors[i]);
    if (!eg.g.is_one()) throw InternalConsistency("modular factors are not coprime");
    LiftState st{rest.lift(true), factors[i].lift(true), eg.s.lift(true), eg.t.lift(true)};
    BigInt m = bp;
    for (unsigned k = 0; k < steps; ++k) {
      st = hensel_step(cur, st, m);
      m *= m;
    }
    modulus = m;
    lifted.push_back(st.h);
    cur = st.g;
  }
  // cur = lc * last factor; rescale to monic.
  lifted.push_back(reduce(cur * modular_inverse(f.lead(), modulus), modulus));
  return modulus;
}

BigInt coefficient_bound(const IntPoly& f) {
  // Mignotte: any factor h has |h_j| <= 2^deg * ||f||_2; the lc-scaled
  // candidate adds a factor |lc(f)|, and symmetric residues need twice that.
  BigInt norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  BigInt root = isqrt(norm2) + 1;
  return 2 * abs(f.lead()) * ipow(BigInt(2), static_cast<unsigned long>(f.degree())) * root + 1;
}

bool factor_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

IntPoly normalize(const IntPoly& g) {
  IntPoly h = g.primitive_part();
  return h.lead() < 0 ? -h : h;
}

// Irreducible factors of a squarefree primitive polynomial of degree >= 2.
std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  std::mt19937_64 rng(0x74u);
  std::vector<ModPoly> best;
  std::uint64_t best_p = 0;
  int good = 0;
  for (unsigned long p : primes_up_to(2000)) {
    if (p == 2) continue;
    if (mpz_divisible_ui_p(f.lead().get_mpz_t(), p)) continue;
    const ModPoly fp(p, f);
    if (!is_squarefree(fp)) continue;
    std::vector<ModPoly> fac = factor_squarefree_mod_p(fp.monic(), rng);
    if (best_p == 0 || fac.size() < best.size()) {
      best = std::move(fac);
      best_p = p;
    }
    if (best.size() == 1 || ++good >= 5) break;
  }
  if (best_p == 0) throw InternalConsistency("no good reduction prime below 2000");
  if (best.size() == 1) return {f};

  std::vector<IntPoly> lifted;
  const BigInt modulus = multifactor_lift(f, best_p, best, coefficient_bound(f), lifted);

  std::vector<IntPoly> found;
  IntPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    const BigInt lc = rest.lead();
    const BigInt rest_const = rest.coeff(0);
    const BigInt scaled_const = lc * rest_const;
    for (;;) {
      // Constant-term filter before the full product.
      BigInt ct = lc;
      for (std::size_t i : idx) ct = sym_mod(ct * lifted[i].coeff(0), modulus);
      const bool plausible = ct == 0 ? rest_const == 0 : (rest_const == 0 || mpz_divisible_p(scaled_const.get_mpz_t(), ct.get_mpz_t()));
      if (plausible) {
        IntPoly cand = IntPoly::constant(lc);
        for (std::size_t i : idx) cand = mul_mod(cand, lifted[i], modulus);
        cand = normalize(cand);
        if (cand.degree() > 0 && divides(cand, rest)) {
          found.push_back(cand);
          rest = exact_div(rest, cand);
          for (std::size_t k = idx.size(); k-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[k]));
          hit = true;
          break;
        }
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == lifted.size() - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (rest.degree() > 0) found.push_back(normalize(rest));
  return found;
}

}  // namespace

IntPoly PolyFactorization::expand() const {
  IntPoly out = IntPoly::constant(content);
  for (const auto& [g, e] : factors) out *= g.pow(e);
  return out;
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f) {
  std::vector<std::pair<IntPoly, unsigned>> out;
  if (f.degree() < 1) return out;
  const IntPoly df = f.derivative();
  const IntPoly a0 = gcd(f, df);
  if (a0.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  IntPoly b = exact_div(f, a0);
  IntPoly c = exact_div(df, a0);
  IntPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    IntPoly a = gcd(b, d);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(normalize(a), i);
  }
  return out;
}

PolyFactorization factor_over_Z(const IntPoly& f, int max_degree) {
  if (f.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  if (f.degree() > max_degree) {
    throw UnsupportedSize("polynomial degree " + std::to_string(f.degree()) + " exceeds the factoring bound " +
                          std::to_string(max_degree));
  }
  PolyFactorization out;
  out.content = f.content();
  if (f.lead() < 0) out.content = -out.content;
  const IntPoly prim = f.exact_div_scalar(out.content);
  for (const auto& [a, e] : squarefree_decomposition(prim)) {
    if (a.degree() == 1) {
      out.factors.emplace_back(a, e);
      continue;
    }
    for (auto& g : zassenhaus(a)) out.factors.emplace_back(std::move(g), e);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if (x.first == y.first) return x.second < y.second;
    return factor_less(x.first, y.first);
  });
  if (out.expand() != f) throw InternalConsistency("factorization does not reproduce its input");
  return out;
}

}  // namespace sevenfour::arith
