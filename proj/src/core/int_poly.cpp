#include "sevenfour/core/int_poly.hpp"

#include <algorithm>
#include <sstream>

#include "sevenfour/core/errors.hpp"

namespace sevenfour::arith {

namespace {

std::size_t max_bits(const std::vector<BigInt>& v) {
  std::size_t b = 0;
  for (const auto& c : v) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
  return b;
}

std::vector<BigInt> schoolbook_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

// Pack sum c_i 2^(64*limbs*i) into one integer. Coefficients may be negative;
// the slot width leaves room for the sign so unpacking is unambiguous.
BigInt kronecker_pack(const std::vector<BigInt>& v, std::size_t slot_limbs) {
  BigInt acc = 0;
  const std::size_t shift = 64 * slot_limbs;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), shift);
    acc += *it;
  }
  return acc;
}

std::vector<BigInt> kronecker_unpack(const BigInt& packed, std::size_t count, std::size_t slot_limbs) {
  std::vector<BigInt> out(count);
  const int s = sgn(packed);
  if (s == 0) return out;
  BigInt mag = abs(packed);
  std::size_t nlimbs = 0;
  std::vector<std::uint64_t> limbs((mpz_sizeinbase(mag.get_mpz_t(), 2) + 63) / 64 + 1, 0);
  mpz_export(limbs.data(), &nlimbs, -1, sizeof(std::uint64_t), 0, 0, mag.get_mpz_t());
  limbs.resize(std::max(nlimbs, count * slot_limbs) + 1, 0);

  BigInt half, full, chunk;
  mpz_setbit(full.get_mpz_t(), 64 * slot_limbs);
  mpz_setbit(half.get_mpz_t(), 64 * slot_limbs - 1);
  int carry = 0;
  for (std::size_t i = 0; i < count; ++i) {
    mpz_import(chunk.get_mpz_t(), slot_limbs, -1, sizeof(std::uint64_t), 0, 0, limbs.data() + i * slot_limbs);
    chunk += carry;
    if (chunk >= half) {
      chunk -= full;
      carry = 1;
    } else {
      carry = 0;
    }
    out[i] = s > 0 ? chunk : BigInt(-chunk);
  }
  if (carry != 0) throw InternalConsistency("Kronecker unpack overflow");
  return out;
}

std::vector<BigInt> kronecker_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t bits = max_bits(a) + max_bits(b) + 2;
  while ((std::size_t{1} << (bits - max_bits(a) - max_bits(b) - 2)) < n) ++bits;
  const std::size_t slot_limbs = (bits + 64) / 64;
  BigInt pa = kronecker_pack(a, slot_limbs);
  BigInt pb = kronecker_pack(b, slot_limbs);
  BigInt prod = pa * pb;
  return kronecker_unpack(prod, a.size() + b.size() - 1, slot_limbs);
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPoly::lead() const {
  if (coeffs_.empty()) throw InvalidInput("leading coefficient of zero polynomial");
  return coeffs_.back();
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  return exact_div_scalar(content());
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::taylor_shift(const BigInt& shift) const {
  // Horner in the shifted variable.
  std::vector<BigInt> v = coeffs_;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) {
      mpz_addmul(v[j - 1].get_mpz_t(), v[j].get_mpz_t(), shift.get_mpz_t());
    }
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::inflate(unsigned k) const {
  if (is_zero() || k == 1) return *this;
  std::vector<BigInt> v(static_cast<std::size_t>(degree()) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reversed() const {
  std::vector<BigInt> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(v));
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += Rational(*it);
  }
  acc.canonicalize();
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t small = std::min(a.coeffs_.size(), b.coeffs_.size());
  if (small < 16) return IntPoly(schoolbook_mul(a.coeffs_, b.coeffs_));
  return IntPoly(kronecker_mul(a.coeffs_, b.coeffs_));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

IntPoly IntPoly::exact_div_scalar(const BigInt& c) const {
  if (c == 0) throw InvalidInput("division by zero scalar");
  std::vector<BigInt> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), c.get_mpz_t())) {
      throw InternalConsistency("inexact scalar division of polynomial");
    }
    mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<IntPoly, IntPoly> divmod(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<BigInt> r = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {IntPoly{}, num};
  std::vector<BigInt> q(static_cast<std::size_t>(num.degree() - dd + 1));
  const BigInt& lc = den.lead();
  const auto& dc = den.coeffs();
  for (int i = num.degree(); i >= dd; --i) {
    BigInt& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) {
      throw InternalConsistency("non-integral quotient in polynomial division");
    }
    BigInt t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    const std::size_t off = static_cast<std::size_t>(i - dd);
    for (std::size_t j = 0; j < dc.size(); ++j) {
      mpz_submul(r[off + j].get_mpz_t(), t.get_mpz_t(), dc[j].get_mpz_t());
    }
    q[off] = std::move(t);
  }
  r.resize(static_cast<std::size_t>(dd));
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw InternalConsistency("polynomial division left a remainder");
  return q;
}

bool divides(const IntPoly& den, const IntPoly& num) {
  if (num.is_zero()) return true;
  try {
    auto [q, r] = divmod(num, den);
    return r.is_zero();
  } catch (const InternalConsistency&) {
    return false;
  }
}

std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw InvalidInput("polynomial division by zero");
  const int dd = den.degree();
  if (num.degree() < dd) return {IntPoly{}, num};
  const BigInt& lc = den.lead();
  const auto& dc = den.coeffs();
  std::vector<BigInt> r = num.coeffs();
  std::vector<BigInt> q(static_cast<std::size_t>(num.degree() - dd + 1));
  for (int i = num.degree(); i >= dd; --i) {
    // r <- lc*r - r_i x^(i-dd) den ; q <- lc*q + r_i x^(i-dd)
    BigInt t = r[static_cast<std::size_t>(i)];
    for (auto& c : q) c *= lc;
    for (auto& c : r) c *= lc;
    const std::size_t off = static_cast<std::size_t>(i - dd);
    q[off] += t;
    for (std::size_t j = 0; j < dc.size(); ++j) {
      mpz_submul(r[off + j].get_mpz_t(), t.get_mpz_t(), dc[j].get_mpz_t());
    }
  }
  r.resize(static_cast<std::size_t>(dd));
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  BigInt cg;
  BigInt ca = a.is_zero() ? BigInt(0) : a.content();
  BigInt cb = b.is_zero() ? BigInt(0) : b.content();
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly u = a.is_zero() ? a : a.primitive_part();
  IntPoly v = b.is_zero() ? b : b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    auto r = pseudo_divmod(u, v).second;
    u = std::move(v);
    v = r.is_zero() ? r : r.primitive_part();
  }
  if (u.lead() < 0) u = -u;
  return u * cg;
}

}  // namespace sevenfour::arith
