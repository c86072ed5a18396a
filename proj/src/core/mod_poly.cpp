#include "sevenfour/core/mod_poly.hpp"

#include <algorithm>
#include <sstream>

#include "sevenfour/core/errors.hpp"

namespace sevenfour::arith {

namespace {

inline std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }
inline std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

void check_same(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw InvalidInput("mixed moduli in ModPoly arithmetic");
}

}  // namespace

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1U) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw InvalidInput("inverse of zero modulo p");
  return mod_pow(a, p - 2, p);
}

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2 || p >= (std::uint64_t{1} << 31)) throw InvalidInput("ModPoly modulus out of range");
  for (auto& c : c_) c %= p_;
  trim();
}

ModPoly::ModPoly(std::uint64_t p, const IntPoly& f) : p_(p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31)) throw InvalidInput("ModPoly modulus out of range");
  c_.reserve(f.coeffs().size());
  BigInt m(static_cast<unsigned long>(p));
  for (const auto& c : f.coeffs()) c_.push_back(mod_floor(c, m).get_ui());
  trim();
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(mod_inverse(lead(), p_));
}

ModPoly ModPoly::derivative() const {
  std::vector<std::uint64_t> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(mulm(c_[i], i % p_, p_));
  return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
  check_same(*this, o);
  std::vector<std::uint64_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = addm(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0, p_);
  }
  return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
  check_same(*this, o);
  std::vector<std::uint64_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = subm(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0, p_);
  }
  return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
  check_same(*this, o);
  if (is_zero() || o.is_zero()) return zero(p_);
  std::vector<std::uint64_t> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = (v[i + j] + c_[i] * o.c_[j]) % p_;
  }
  return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::scaled(std::uint64_t s) const {
  std::vector<std::uint64_t> v(c_);
  for (auto& c : v) c = mulm(c, s % p_, p_);
  return ModPoly(p_, std::move(v));
}

IntPoly ModPoly::lift(bool symmetric) const {
  std::vector<BigInt> v;
  v.reserve(c_.size());
  for (auto c : c_) {
    if (symmetric && c > p_ / 2) {
      v.emplace_back(-static_cast<long>(p_ - c));
    } else {
      v.emplace_back(static_cast<unsigned long>(c));
    }
  }
  return IntPoly(std::move(v));
}

std::string ModPoly::to_string(const std::string& var) const { return lift().to_string(var); }

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  check_same(a, b);
  if (b.is_zero()) throw InvalidInput("ModPoly division by zero");
  const std::uint64_t p = a.modulus();
  if (a.degree() < b.degree()) return {ModPoly::zero(p), a};
  std::vector<std::uint64_t> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const std::uint64_t inv = mod_inverse(b.lead(), p);
  for (int i = a.degree(); i >= db; --i) {
    const std::uint64_t t = mulm(r[static_cast<std::size_t>(i)], inv, p);
    if (t == 0) continue;
    const std::size_t off = static_cast<std::size_t>(i - db);
    q[off] = t;
    for (std::size_t j = 0; j < bc.size(); ++j) r[off + j] = subm(r[off + j], mulm(t, bc[j], p), p);
  }
  r.resize(static_cast<std::size_t>(db));
  return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
  ModPoly u = a, v = b;
  while (!v.is_zero()) {
    ModPoly r = divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

ModXgcd xgcd(const ModPoly& a, const ModPoly& b) {
  const std::uint64_t p = a.modulus();
  ModPoly r0 = a, r1 = b;
  ModPoly s0 = ModPoly::one(p), s1 = ModPoly::zero(p);
  ModPoly t0 = ModPoly::zero(p), t1 = ModPoly::one(p);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    ModPoly s2 = s0 - q * s1;
    ModPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const std::uint64_t inv = mod_inverse(r0.lead(), p);
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m) { return divmod(a * b, m).second; }

ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& m) {
  ModPoly result = divmod(ModPoly::one(m.modulus()), m).second;
  ModPoly b = divmod(base, m).second;
  while (e != 0) {
    if (e & 1U) result = mulmod(result, b, m);
    e >>= 1U;
    if (e != 0) b = mulmod(b, b, m);
  }
  return result;
}

bool is_squarefree(const ModPoly& f) {
  ModPoly d = f.derivative();
  if (d.is_zero()) return f.degree() <= 0;
  return gcd(f, d).degree() == 0;
}

bool irreducible_mod_p(const ModPoly& f) {
  if (f.degree() < 1) throw InvalidInput("irreducibility test needs degree >= 1");
  const ModPoly g = f.monic();
  const std::uint64_t p = g.modulus();
  const ModPoly x = ModPoly::x(p);
  // h = x^(p^i) mod g; any common factor with h - x has degree dividing i.
  ModPoly h = divmod(x, g).second;
  for (int i = 1; 2 * i <= g.degree(); ++i) {
    h = powmod(h, p, g);
    if (gcd(g, h - x).degree() > 0) return false;
  }
  return true;
}

std::vector<std::pair<ModPoly, int>> distinct_degree_factor(const ModPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly rest = f.monic();
  const ModPoly x = ModPoly::x(p);
  ModPoly h = divmod(x, rest).second;
  for (int i = 1; 2 * i <= rest.degree(); ++i) {
    h = powmod(h, p, rest);
    ModPoly g = gcd(rest, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      rest = divmod(rest, g).first;
      h = divmod(h, rest).second;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

namespace {

void equal_degree_split(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const std::uint64_t p = f.modulus();
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  // (p^d - 1)/2 computed as a BigInt exponent by repeated powering.
  BigInt e = ipow(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  for (;;) {
    std::vector<std::uint64_t> rc(static_cast<std::size_t>(f.degree()));
    for (auto& c : rc) c = coef(rng);
    ModPoly a(p, std::move(rc));
    if (a.degree() < 1) continue;
    ModPoly g = gcd(f, a);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(divmod(f, g).first, d, rng, out);
      return;
    }
    // a^e mod f by square-and-multiply over the bits of e.
    ModPoly b = divmod(ModPoly::one(p), f).second;
    ModPoly base = divmod(a, f).second;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      b = mulmod(b, b, f);
      if (mpz_tstbit(e.get_mpz_t(), i)) b = mulmod(b, base, f);
    }
    g = gcd(f, b - ModPoly::one(p));
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ModPoly> factor_squarefree_mod_p(const ModPoly& f, std::mt19937_64& rng) {
  if (f.modulus() == 2) throw InvalidInput("equal-degree splitting needs an odd prime");
  std::vector<ModPoly> out;
  for (auto& [g, d] : distinct_degree_factor(f)) equal_degree_split(g, d, rng, out);
  std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  return out;
}

}  // namespace sevenfour::arith
