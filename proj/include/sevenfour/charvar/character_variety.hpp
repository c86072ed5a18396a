#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sevenfour/core/errors.hpp"
#include "sevenfour/core/int_poly.hpp"
#include "sevenfour/core/poly_factor.hpp"

namespace sevenfour::charvar {

using arith::IntPoly;

/// Exact element a + b*sqrt(D) of a quadratic field (D squarefree, != 0, 1).
struct QuadNumber {
  Rational a, b;
  long D = 15;

  QuadNumber() = default;
  QuadNumber(Rational a_, Rational b_, long d_) : a(std::move(a_)), b(std::move(b_)), D(d_) {
    a.canonicalize();
    b.canonicalize();
  }
  // Rational embedding; D is taken from the other operand in mixed arithmetic.
  QuadNumber(long v) : a(v), b(0), D(0) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return a == 0 && b == 0; }
  QuadNumber operator+(const QuadNumber& o) const;
  QuadNumber operator-(const QuadNumber& o) const;
  QuadNumber operator*(const QuadNumber& o) const;
  QuadNumber operator/(const QuadNumber& o) const;
  QuadNumber operator-() const { return {-a, -b, D}; }
  bool operator==(const QuadNumber& o) const { return a == o.a && b == o.b; }
  std::string to_string() const;
};

/// True iff x is a square in Q(sqrt D).
bool is_square_in_quadratic_field(const QuadNumber& x);

/// R^3 - R^2 Z^2 + 2R^2 - 1; zero exactly on the canonical component.
template <typename T>
T curve_eval(const T& R, const T& Z) {
  const T R2 = R * R;
  return R2 * R - R2 * Z * Z + T(2) * R2 - T(1);
}

template <typename T>
struct HilbertEntries {
  /// (-r^3 + 4r^2 - 4r - 1, -r) with r = R - 2
  T first, second;
  /// Equivalent pair (Z^2 - 4, R - 2)
  T z_first, z_second;
};

template <typename T>
HilbertEntries<T> hilbert_symbol_entries(const T& R, const T& Z) {
  const T r = R - T(2);
  const T r2 = r * r;
  return {-(r2 * r) + T(4) * r2 - T(4) * r - T(1), -r, Z * Z - T(4), r};
}

/// Max-entry magnitude of rho(a) rho(w)^2 - rho(w)^2 rho(b) for the
/// two-generator representation rho(a) = [[x,1],[0,1/x]], rho(b) =
/// [[x,0],[r,1/x]] and the word w = a b^-1 a b^-1 a^-1 b a^-1 b. It vanishes
/// when (R, Z) = (2 - r, x + 1/x) lies on the curve. Throws on x = 0.
long double verify_representation(std::complex<long double> x, std::complex<long double> r);

/// Cubics in R (and r = R - 2) with coefficients in Z[t]/(psi_d(t)), t the
/// image of z^2 + z^-2.
struct SurgeryCubic {
  unsigned long d = 0;
  IntPoly modulus;
  /// Coefficients of R^0..R^3 (resp. r^0..r^3), each reduced mod `modulus`.
  std::vector<IntPoly> p, q;
};

/// p_d(R) = R^3 - t R^2 - 1 and q_d(r) = p_d(r + 2). d odd; d = 1 is the
/// degenerate t = 2 case.
SurgeryCubic surgery_cubic(unsigned long d);

/// p_d as an integer cubic when t = z^2 + z^-2 is rational (z^2 of order
/// 1, 2, 3, 4 or 6, e.g. d = 4 or 8). Throws InvalidInput otherwise.
IntPoly rational_surgery_cubic(unsigned long d);

/// F_d(R) = Res_t(psi_d(t), R^3 - t R^2 - 1), degree 3 deg psi_d.
IntPoly norm_cubic(unsigned long d);

enum class IrreducibilityMethod { kModP, kRationalFactorization, kHouseBound };
enum class Verdict { kIrreducible, kReducible, kInconclusive };

struct IrreducibilityReport {
  unsigned long d = 0;
  IrreducibilityMethod method = IrreducibilityMethod::kModP;
  Verdict verdict = Verdict::kInconclusive;
  /// Prime used for the mod-p certificate (0 when none).
  unsigned long prime = 0;
  /// Factors of F_d over Q for the rational-factorization route.
  std::vector<std::pair<IntPoly, unsigned>> factors;
  /// Largest conjugate root for the house-bound route.
  double root_bound = 0;
};

/// Irreducibility of q_d over the real cyclotomic field via F_d, for odd
/// 3 <= d <= 41. Larger d are the house bound's job (UnsupportedSize).
IrreducibilityReport irreducibility_certificate(unsigned long d);

/// Real roots of R^3 - a R^2 - 1, ascending.
std::vector<double> cubic_real_roots(double a);

/// Absolute value of the real root of largest modulus of R^3 - a R^2 - 1
/// (for a above the discriminant zero near -1.88988 this is the largest
/// real root itself). Bracketing scan plus bisection and Newton, 1e-12 accuracy.
double largest_real_root(double a);

/// Largest value of largest_real_root over the conjugates a = 2cos(4 pi k/d), gcd(k, d) = 1.
double conjugate_root_maximum(unsigned long d);

/// (sqrt7 + sqrt3) / 2
double house_threshold();

/// True iff conjugate_root_maximum(d) exceeds house_threshold() + 1e-9 and stays below 2.21.
bool house_bound_check(unsigned long d);

template <typename T>
struct TameSymbol {
  T value;
  bool trivial = false;
};

/// (-1)^(oa*ob) beta^oa / alpha^ob in the residue field, classified by the
/// supplied square test.
template <typename T>
TameSymbol<T> tame_symbol(long ord_alpha, long ord_beta, const T& alpha_res, const T& beta_res,
                          const std::function<bool(const T&)>& is_square) {
  auto power = [](const T& base, long e) {
    T acc = T(1);
    const long n = e < 0 ? -e : e;
    for (long i = 0; i < n; ++i) acc = acc * base;
    return e < 0 ? T(1) / acc : acc;
  };
  if ((ord_beta != 0 && alpha_res == T(0)) || (ord_alpha != 0 && beta_res == T(0))) {
    throw InvalidInput("tame symbol needs nonzero residues where they are exponentiated");
  }
  T value = power(beta_res, ord_alpha) / power(alpha_res, ord_beta);
  if ((ord_alpha * ord_beta) % 2 != 0) value = -value;
  return {value, is_square(value)};
}

TameSymbol<QuadNumber> tame_symbol_quadratic(long ord_alpha, long ord_beta, const QuadNumber& alpha_res,
                                             const QuadNumber& beta_res);

enum class LocalSplit { kSplit, kRamified };

/// Local behaviour at a non-dyadic place with residue field of p^f elements:
/// ramified iff -1 is a nonsquare there, i.e. p = 3 mod 4 and f odd.
/// p = 2 throws UnsupportedSize.
LocalSplit local_split_criterion(const BigInt& p, unsigned long f);

struct StarPairing {
  IntPoly w_poly;      ///< minimal polynomial of a square root w of an Alexander root
  IntPoly trace_poly;  ///< minimal polynomial of w + 1/w
  int w_degree = 0;
  int trace_degree = 0;
};

struct ConditionStarReport {
  IntPoly alexander;
  std::vector<StarPairing> pairings;
  bool holds = true;
};

/// Checks Q(w + 1/w) = Q(w) for square roots w of the Alexander roots.
ConditionStarReport condition_star(const IntPoly& alexander);

}  // namespace sevenfour::charvar
