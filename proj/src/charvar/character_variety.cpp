#include "sevenfour/charvar/character_variety.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "sevenfour/core/errors.hpp"
#include "sevenfour/core/factor_integer.hpp"
#include "sevenfour/core/mod_poly.hpp"
#include "sevenfour/core/number_theory.hpp"
#include "sevenfour/core/numeric_roots.hpp"
#include "sevenfour/cyclo/cyclotomic.hpp"

namespace sevenfour::charvar {

namespace {

long common_d(const QuadNumber& x, const QuadNumber& y) {
  if (x.D == 0) return y.D;
  if (y.D == 0 || x.D == y.D) return x.D;
  throw InvalidInput("mixing elements of different quadratic fields");
}

bool is_rational_square(const Rational& q) {
  if (q < 0) return false;
  return is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

Rational rational_sqrt(const Rational& q) { return Rational(isqrt(q.get_num()), isqrt(q.get_den())); }

}  // namespace

QuadNumber QuadNumber::operator+(const QuadNumber& o) const { return {a + o.a, b + o.b, common_d(*this, o)}; }
QuadNumber QuadNumber::operator-(const QuadNumber& o) const { return {a - o.a, b - o.b, common_d(*this, o)}; }

QuadNumber QuadNumber::operator*(const QuadNumber& o) const {
  const long dd = common_d(*this, o);
  return {a * o.a + dd * b * o.b, a * o.b + b * o.a, dd};
}

QuadNumber QuadNumber::operator/(const QuadNumber& o) const {
  const long dd = common_d(*this, o);
  const Rational norm = o.a * o.a - dd * o.b * o.b;
  if (norm == 0) throw InvalidInput("division by zero in a quadratic field");
  const QuadNumber conj(o.a / norm, -o.b / norm, dd);
  return QuadNumber(a, b, dd) * conj;
}

std::string QuadNumber::to_string() const {
  std::ostringstream os;
  os << a.get_str();
  if (b != 0) os << (b > 0 ? " + " : " - ") << Rational(abs(b)).get_str() << "*sqrt(" << D << ")";
  return os.str();
}

bool is_square_in_quadratic_field(const QuadNumber& x) {
  if (x.is_zero()) return true;
  if (x.b == 0) {
    // a is a square iff a or a/D is a rational square
    return is_rational_square(x.a) || (x.D != 0 && is_rational_square(x.a / x.D));
  }
  // (u + v sqrt D)^2 = x forces u^2 = (a +- sqrt(N(x))) / 2.
  const Rational norm = x.a * x.a - x.D * x.b * x.b;
  if (!is_rational_square(norm)) return false;
  const Rational n = rational_sqrt(norm);
  for (const Rational& s : {n, Rational(-n)}) {
    const Rational u2 = (x.a + s) / 2;
    if (u2 != 0 && is_rational_square(u2)) return true;
  }
  return false;
}

namespace {

using Cx = std::complex<long double>;
using Mat = std::array<Cx, 4>;  // row-major 2x2

Mat mul(const Mat& m, const Mat& n) {
  return {m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3], m[2] * n[0] + m[3] * n[2],
          m[2] * n[1] + m[3] * n[3]};
}

}  // namespace

long double verify_representation(std::complex<long double> x, std::complex<long double> r) {
  if (x == Cx(0)) throw InvalidInput("representation parameter x must be nonzero");
  const Cx xi = Cx(1) / x;
  const Mat a{x, 1, 0, xi}, a_inv{xi, -1, 0, x};
  const Mat b{x, 0, r, xi}, b_inv{xi, 0, -r, x};
  Mat w = a;
  for (const Mat* m : {&b_inv, &a, &b_inv, &a_inv, &b, &a_inv, &b}) w = mul(w, *m);
  const Mat w2 = mul(w, w);
  const Mat lhs = mul(a, w2), rhs = mul(w2, b);
  long double worst = 0;
  for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
  return worst;
}

namespace {

void require_odd(unsigned long d) {
  if (d == 0 || d % 2 == 0) throw InvalidInput("d must be odd, got " + std::to_string(d));
}

IntPoly reduce_mod(const IntPoly& f, const IntPoly& monic) { return arith::divmod(f, monic).second; }

}  // namespace

SurgeryCubic surgery_cubic(unsigned long d) {
  require_odd(d);
  SurgeryCubic out;
  out.d = d;
  out.modulus = d == 1 ? IntPoly{-2, 1} : cyclo::real_minimal_poly(d);
  const IntPoly t = IntPoly::x();
  const IntPoly one{1};
  for (const IntPoly& c : {IntPoly{-1}, IntPoly{}, -t, one}) out.p.push_back(reduce_mod(c, out.modulus));
  // p(r + 2) = r^3 + (6 - t) r^2 + (12 - 4t) r + (7 - 4t)
  for (const IntPoly& c : {IntPoly{7, -4}, IntPoly{12, -4}, IntPoly{6, -1}, one}) {
    out.q.push_back(reduce_mod(c, out.modulus));
  }
  return out;
}

IntPoly rational_surgery_cubic(unsigned long d) {
  if (d == 0) throw InvalidInput("d must be positive");
  const unsigned long order = d % 2 == 0 ? d / 2 : d;  // order of z^2
  long t = 0;
  switch (order) {
    case 1: t = 2; break;
    case 2: t = -2; break;
    case 3: t = -1; break;
    case 4: t = 0; break;
    case 6: t = 1; break;
    default: throw InvalidInput("z^2 + z^-2 is irrational for d=" + std::to_string(d));
  }
  return IntPoly{-1, 0, -t, 1};
}

IntPoly norm_cubic(unsigned long d) {
  require_odd(d);
  if (d < 3) throw InvalidInput("norm cubic needs d >= 3");
  // Res_t(psi, (R^3 - 1) - R^2 t) = R^(2m) psi((R^3 - 1)/R^2) for monic psi of degree m.
  const IntPoly psi = cyclo::real_minimal_poly(d);
  const auto m = static_cast<std::size_t>(psi.degree());
  const IntPoly cube_minus_one{-1, 0, 0, 1};
  IntPoly acc, power{1};
  for (std::size_t k = 0; k <= m; ++k) {
    acc += psi.coeff(k) * power * IntPoly::monomial(1, 2 * (m - k));
    power *= cube_minus_one;
  }
  return acc;
}

IrreducibilityReport irreducibility_certificate(unsigned long d) {
  require_odd(d);
  if (d < 3) throw InvalidInput("irreducibility certificate needs d >= 3");
  if (d > 41) throw UnsupportedSize("d > 41 is covered by house_bound_check, not by a certificate");
  IrreducibilityReport rep;
  rep.d = d;
  const IntPoly F = norm_cubic(d);
  for (unsigned long p : arith::primes_up_to(500)) {
    if (mpz_divisible_ui_p(F.lead().get_mpz_t(), p)) continue;
    const arith::ModPoly fp(p, F);
    if (!arith::is_squarefree(fp)) continue;  // p divides the discriminant
    if (arith::irreducible_mod_p(fp)) {
      rep.method = IrreducibilityMethod::kModP;
      rep.verdict = Verdict::kIrreducible;
      rep.prime = p;
      return rep;
    }
  }
  rep.method = IrreducibilityMethod::kRationalFactorization;
  const arith::PolyFactorization fac = arith::factor_over_Z(F);
  rep.factors = fac.factors;
  rep.verdict = fac.irreducible() ? Verdict::kIrreducible : Verdict::kInconclusive;
  return rep;
}

namespace {

double cubic(double a, double x) { return x * x * (x - a) - 1; }
double cubic_d(double a, double x) { return x * (3 * x - 2 * a); }

// Root of the cubic on [lo, hi] where it is monotone and changes sign.
double refine(double a, double lo, double hi) {
  double flo = cubic(a, lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = cubic(a, mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  // A couple of Newton polish steps, kept only if they stay in the bracket.
  for (int it = 0; it < 3; ++it) {
    const double der = cubic_d(a, x);
    if (der == 0) break;
    const double nx = x - cubic(a, x) / der;
    if (nx < lo || nx > hi) break;
    x = nx;
  }
  return x;
}

}  // namespace

std::vector<double> cubic_real_roots(double a) {
  const double bound = 1 + std::max(1.0, std::fabs(a));
  std::vector<double> knots{-bound, 0.0, 2 * a / 3, bound};
  std::sort(knots.begin(), knots.end());
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double lo = knots[i], hi = knots[i + 1];
    if (hi <= lo) continue;
    const double flo = cubic(a, lo), fhi = cubic(a, hi);
    if (std::fabs(flo) < 1e-14) {
      roots.push_back(lo);
    } else if ((flo < 0) != (fhi < 0) && std::fabs(fhi) >= 1e-14) {
      roots.push_back(refine(a, lo, hi));
    }
  }
  if (std::fabs(cubic(a, knots.back())) < 1e-14) roots.push_back(knots.back());
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(), [](double x, double y) { return std::fabs(x - y) < 1e-12; }),
              roots.end());
  return roots;
}

double largest_real_root(double a) {
  if (!(a >= -2 - 1e-12 && a <= 2 + 1e-12)) throw InvalidInput("largest_real_root needs a in [-2, 2]");
  double best = 0;
  for (double r : cubic_real_roots(a)) best = std::max(best, std::fabs(r));
  return best;
}

double conjugate_root_maximum(unsigned long d) {
  if (d < 3) throw InvalidInput("conjugate maximum needs d >= 3");
  const long double pi = 3.141592653589793238462643383279502884L;
  double best = 0;
  for (unsigned long k = 1; k < d; ++k) {
    if (std::gcd(k, d) != 1) continue;
    const auto a = static_cast<double>(2 * std::cos(4 * pi * static_cast<long double>(k) / d));
    best = std::max(best, largest_real_root(a));
  }
  return best;
}

double house_threshold() { return (std::sqrt(7.0) + std::sqrt(3.0)) / 2; }

bool house_bound_check(unsigned long d) {
  require_odd(d);
  if (d < 43) throw InvalidInput("house bound check applies to d >= 43");
  const double m = conjugate_root_maximum(d);
  return m > house_threshold() + 1e-9 && m < 2.21;
}

TameSymbol<QuadNumber> tame_symbol_quadratic(long ord_alpha, long ord_beta, const QuadNumber& alpha_res,
                                             const QuadNumber& beta_res) {
  return tame_symbol<QuadNumber>(ord_alpha, ord_beta, alpha_res, beta_res, is_square_in_quadratic_field);
}

LocalSplit local_split_criterion(const BigInt& p, unsigned long f) {
  if (p == 2) throw UnsupportedSize("the local criterion is for non-dyadic places; p = 2 is unsupported");
  if (f < 1) throw InvalidInput("residue degree must be >= 1");
  if (!arith::is_prime(p)) throw InvalidInput("p must be an odd prime");
  const bool ramified = mpz_fdiv_ui(p.get_mpz_t(), 4) == 3 && f % 2 == 1;
  return ramified ? LocalSplit::kRamified : LocalSplit::kSplit;
}

namespace {

// Res_w(m(w), w^2 - x w + 1) as a polynomial in x.
IntPoly trace_resultant(const IntPoly& m) {
  // w^k = U_k(x) w + V_k(x) modulo w^2 - x w + 1
  IntPoly u, v{1}, A, B;
  const IntPoly x = IntPoly::x();
  for (std::size_t k = 0; k < m.coeffs().size(); ++k) {
    A += m.coeffs()[k] * u;
    B += m.coeffs()[k] * v;
    IntPoly nu = x * u + v;
    v = -u;
    u = std::move(nu);
  }
  // product of (A b + B) over the two roots b of w^2 - x w + 1
  return A * A + A * B * x + B * B;
}

// w^deg(h) h(w + 1/w)
IntPoly homogenized(const IntPoly& h) {
  const auto n = static_cast<std::size_t>(h.degree());
  const IntPoly w2p1{1, 0, 1};
  IntPoly acc, power{1};
  for (std::size_t j = 0; j <= n; ++j) {
    acc += h.coeff(j) * power * IntPoly::monomial(1, n - j);
    power *= w2p1;
  }
  return acc;
}

long double abs_eval(const IntPoly& h, arith::Complex z) {
  arith::Complex acc = 0;
  long double scale = 0;
  for (auto it = h.coeffs().rbegin(); it != h.coeffs().rend(); ++it) {
    acc = acc * z + arith::Complex(static_cast<long double>(it->get_d()));
    scale = scale * std::abs(z) + std::fabs(static_cast<long double>(it->get_d()));
  }
  return std::abs(acc) / std::max<long double>(scale, 1);
}

}  // namespace

ConditionStarReport condition_star(const IntPoly& alexander) {
  if (alexander.is_zero()) throw InvalidInput("Alexander polynomial must be nonzero");
  if (alexander.coeff(0) == 0) throw InvalidInput("Alexander polynomial must not vanish at 0");
  ConditionStarReport rep;
  rep.alexander = alexander;
  if (alexander.degree() == 0) return rep;
  const arith::PolyFactorization pf = arith::factor_over_Z(alexander.inflate(2));
  for (const auto& [m, e] : pf.factors) {
    (void)e;
    StarPairing pair;
    pair.w_poly = m;
    pair.w_degree = m.degree();
    const arith::Complex w0 = arith::complex_roots(m).front();
    const arith::Complex tau = w0 + arith::Complex(1) / w0;
    const arith::PolyFactorization rf = arith::factor_over_Z(trace_resultant(m));
    const IntPoly* best = nullptr;
    long double best_val = 0;
    for (const auto& [h, he] : rf.factors) {
      (void)he;
      const long double val = abs_eval(h, tau);
      if (best == nullptr || val < best_val) {
        best = &h;
        best_val = val;
      }
    }
    if (best == nullptr) throw InternalConsistency("trace resultant has no factor");
    if (!arith::divides(m, homogenized(*best))) {
      throw InternalConsistency("paired trace polynomial does not vanish on w + 1/w");
    }
    pair.trace_poly = *best;
    pair.trace_degree = best->degree();
    if (pair.trace_degree < pair.w_degree) rep.holds = false;
    rep.pairings.push_back(std::move(pair));
  }
  return rep;
}

}  // namespace sevenfour::charvar
