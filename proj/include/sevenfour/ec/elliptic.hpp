#pragma once

#include <string>
#include <vector>

#include "sevenfour/core/bigint.hpp"
#include "sevenfour/core/int_poly.hpp"

namespace sevenfour::ec {

using arith::IntPoly;

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Z with its standard
/// invariants. Construct through curve_invariants.
struct WeierstrassCurve {
  BigInt a1, a2, a3, a4, a6;
  BigInt b2, b4, b6, b8, c4, c6, disc;
  Rational j;
};

/// Throws SingularCurve when the discriminant vanishes.
WeierstrassCurve curve_invariants(const BigInt& a1, const BigInt& a2, const BigInt& a3, const BigInt& a4,
                                  const BigInt& a6);

/// y^2 = x^3 + 2x^2 - 1
WeierstrassCurve default_curve();

/// x-only division polynomials: f_n = psi_n for odd n and psi_n * psi_2 for
/// even n, so f_2 = 4x^3 + b2 x^2 + 2 b4 x + b6 and every f_n lies in Z[x].
class DivPolyTable {
 public:
  /// Builds f_1..f_max_n. Each recursion step divides by f_2 or f_2^2; a
  /// nonzero remainder throws InternalConsistency.
  DivPolyTable(const WeierstrassCurve& curve, unsigned max_n);

  const WeierstrassCurve& curve() const { return curve_; }
  unsigned max_n() const { return static_cast<unsigned>(f_.size()) - 1; }
  /// f_0 = 0 .. f_max_n; out-of-range n throws InvalidInput.
  const IntPoly& operator[](unsigned n) const;

 private:
  WeierstrassCurve curve_;
  std::vector<IntPoly> f_;
};

/// The congruence structure of f_n on the default curve:
/// degree, leading coefficient, odd-n mod 4 shape, even-n 2-power and mod 2 shape.
struct FactlistReport {
  unsigned n = 0;
  int degree = 0;
  BigInt leading;
  /// v_2(n) for even n, 0 for odd n
  unsigned two_adic = 0;
  /// f_n / 2^(k+1) reduced mod 2 for even n
  IntPoly quotient_mod2;
};

/// Throws VerificationFailure naming the clause and the coefficient index
/// that broke it. n >= 2 and n <= table.max_n().
FactlistReport factlist_check(const DivPolyTable& table, unsigned n);

/// f_2 | f_n in Z[x]; n even and >= 2.
bool divisibility_check(const DivPolyTable& table, unsigned n);

/// (R, Z) -> (R, R Z); generic over the scalar type.
template <typename T>
std::pair<T, T> birational_map(const T& R, const T& Z) {
  return {R, R * Z};
}

enum class TorsionKind { kNotTorsion, kTwoTorsionCandidate, kInconclusive };

struct TorsionVerdict {
  TorsionKind kind = TorsionKind::kInconclusive;
  std::string reason;
};

std::string to_string(TorsionKind k);

/// `r_cubic` is the cubic satisfied by R from R^3 + (2 - Z^2) R^2 - 1 = 0
/// with Z integral; only its leading and constant coefficients matter, and
/// they must be 1 and -1 (InvalidInput otherwise). Then R is a unit, so the
/// point (R, RZ) is not torsion unless y = RZ = 0, flagged by `z_is_zero`.
TorsionVerdict unit_obstruction(const IntPoly& r_cubic, bool z_is_zero);

/// Classifies a point of the default curve by the minimal polynomial of its
/// x-coordinate (monic, integral). Nonzero 2-torsion x-coordinates are the
/// roots of x^3 + 2x^2 - 1; an odd constant term makes x a unit, which rules
/// out torsion of order > 2 on this curve.
TorsionVerdict torsion_obstruction(const IntPoly& x_minpoly);

struct GaussianInt {
  BigInt re, im;

  GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
  GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
  GaussianInt operator*(const GaussianInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianInt conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
  std::string to_string() const;
};

/// f_n(z) by Horner in Z[i].
GaussianInt gaussian_divpoly_eval(const DivPolyTable& table, unsigned n, const GaussianInt& z);

struct IntersectionAudit {
  struct Row {
    unsigned n;
    GaussianInt at_plus, at_minus;  ///< f_n(1 + i), f_n(1 - i)
  };
  std::vector<Row> rows;
  /// Conclusion holds only given that the torsion subgroup over the field of
  /// the points is Z/6Z,
  /// an external input that is not recomputed here.
  std::string conclusion;
  std::string assumptions;
};

/// f_n(1 +- i) for n = 2..6 on the default curve. Any zero throws VerificationFailure.
IntersectionAudit intersection_point_audit();

}  // namespace sevenfour::ec
