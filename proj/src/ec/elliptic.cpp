#include "sevenfour/ec/elliptic.hpp"

#include <algorithm>
#include <sstream>

#include "sevenfour/core/errors.hpp"

namespace sevenfour::ec {

WeierstrassCurve curve_invariants(const BigInt& a1, const BigInt& a2, const BigInt& a3, const BigInt& a4,
                                  const BigInt& a6) {
  WeierstrassCurve e{a1, a2, a3, a4, a6, {}, {}, {}, {}, {}, {}, {}, {}};
  e.b2 = a1 * a1 + 4 * a2;
  e.b4 = 2 * a4 + a1 * a3;
  e.b6 = a3 * a3 + 4 * a6;
  e.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  if (4 * e.b8 != e.b2 * e.b6 - e.b4 * e.b4) throw InternalConsistency("4 b8 != b2 b6 - b4^2");
  e.c4 = e.b2 * e.b2 - 24 * e.b4;
  e.c6 = -e.b2 * e.b2 * e.b2 + 36 * e.b2 * e.b4 - 216 * e.b6;
  e.disc = -e.b2 * e.b2 * e.b8 - 8 * e.b4 * e.b4 * e.b4 - 27 * e.b6 * e.b6 + 9 * e.b2 * e.b4 * e.b6;
  if (e.disc == 0) throw SingularCurve("curve is singular (discriminant 0)");
  if (1728 * e.disc != e.c4 * e.c4 * e.c4 - e.c6 * e.c6) throw InternalConsistency("1728 disc != c4^3 - c6^2");
  e.j = Rational(e.c4 * e.c4 * e.c4, e.disc);
  e.j.canonicalize();
  return e;
}

WeierstrassCurve default_curve() { return curve_invariants(0, 2, 0, 0, -1); }

DivPolyTable::DivPolyTable(const WeierstrassCurve& curve, unsigned max_n) : curve_(curve) {
  if (max_n < 1) throw InvalidInput("division polynomial table needs max_n >= 1");
  const BigInt &b2 = curve.b2, &b4 = curve.b4, &b6 = curve.b6, &b8 = curve.b8;
  using V = std::vector<BigInt>;
  f_.resize(std::max(max_n, 4u) + 1);
  f_[1] = IntPoly{1};
  f_[2] = IntPoly(V{b6, 2 * b4, b2, 4});
  f_[3] = IntPoly(V{b8, 3 * b6, 3 * b4, b2, 3});
  f_[4] = f_[2] * IntPoly(V{b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, 2});
  const IntPoly& f2 = f_[2];
  const IntPoly f2sq = f2 * f2;
  for (unsigned n = 5; n <= max_n; ++n) {
    const unsigned m = n / 2;
    const auto cube = [](const IntPoly& p) { return p * p * p; };
    if (n % 2 == 0) {
      // f2 f_2m = f_m (f_(m-1)^2 f_(m+2) - f_(m-2) f_(m+1)^2)
      const IntPoly rhs = f_[m] * (f_[m - 1] * f_[m - 1] * f_[m + 2] - f_[m - 2] * f_[m + 1] * f_[m + 1]);
      f_[n] = arith::exact_div(rhs, f2);
    } else if (m % 2 == 0) {
      // f2^2 f_2m+1 = f_(m+2) f_m^3 - f2^2 f_(m-1) f_(m+1)^3
      const IntPoly rhs = f_[m + 2] * cube(f_[m]) - f2sq * f_[m - 1] * cube(f_[m + 1]);
      f_[n] = arith::exact_div(rhs, f2sq);
    } else {
      // f2^2 f_2m+1 = f2^2 f_(m+2) f_m^3 - f_(m-1) f_(m+1)^3
      const IntPoly rhs = f2sq * f_[m + 2] * cube(f_[m]) - f_[m - 1] * cube(f_[m + 1]);
      f_[n] = arith::exact_div(rhs, f2sq);
    }
  }
  f_.resize(max_n + 1);
}

const IntPoly& DivPolyTable::operator[](unsigned n) const {
  if (n >= f_.size()) throw InvalidInput("division polynomial index " + std::to_string(n) + " beyond table");
  return f_[n];
}

namespace {

bool is_default(const WeierstrassCurve& e) {
  return e.a1 == 0 && e.a2 == 2 && e.a3 == 0 && e.a4 == 0 && e.a6 == -1;
}

[[noreturn]] void fail(unsigned n, const std::string& clause, long index) {
  std::ostringstream os;
  os << "f_" << n << ": " << clause;
  if (index >= 0) os << " fails at coefficient index " << index;
  throw VerificationFailure(os.str());
}

}  // namespace

FactlistReport factlist_check(const DivPolyTable& table, unsigned n) {
  if (n < 2) throw InvalidInput("factlist_check needs n >= 2");
  if (!is_default(table.curve())) throw InvalidInput("factlist_check applies to y^2 = x^3 + 2x^2 - 1 only");
  const IntPoly& f = table[n];
  FactlistReport rep;
  rep.n = n;
  rep.degree = f.degree();
  rep.leading = f.lead();
  const auto& c = f.coeffs();
  if (n % 2 == 1) {
    if (rep.degree != static_cast<int>((n * n - 1) / 2)) fail(n, "degree (n^2 - 1)/2", rep.degree);
    if (rep.leading != n) fail(n, "leading coefficient n", rep.degree);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      if (!mpz_divisible_ui_p(c[i].get_mpz_t(), 4)) fail(n, "congruence f_n = +-x^deg mod 4", static_cast<long>(i));
    }
    return rep;
  }
  if (rep.degree != static_cast<int>(n * n / 2 + 1)) fail(n, "degree n^2/2 + 1", rep.degree);
  if (rep.leading != 2 * n) fail(n, "leading coefficient 2n", rep.degree);
  rep.two_adic = static_cast<unsigned>(__builtin_ctz(n));
  const unsigned shift = rep.two_adic + 1;
  std::vector<BigInt> q(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!mpz_divisible_2exp_p(c[i].get_mpz_t(), shift)) fail(n, "divisibility by 2^(k+1)", static_cast<long>(i));
    BigInt t;
    mpz_tdiv_q_2exp(t.get_mpz_t(), c[i].get_mpz_t(), shift);
    q[i] = mpz_odd_p(t.get_mpz_t()) ? 1 : 0;
  }
  rep.quotient_mod2 = IntPoly(q);
  // (x + 1)(x^2 + x + 1) x^(n^2/2 - 2) = (x^3 + 1) x^(n^2/2 - 2) over F_2
  const std::size_t low = n * n / 2 - 2;
  const IntPoly expected = IntPoly::monomial(1, low + 3) + IntPoly::monomial(1, low);
  if (!(rep.quotient_mod2 == expected)) {
    const auto& got = rep.quotient_mod2.coeffs();
    long bad = 0;
    for (std::size_t i = 0; i < std::max(got.size(), expected.coeffs().size()); ++i) {
      if (rep.quotient_mod2.coeff(i) != expected.coeff(i)) {
        bad = static_cast<long>(i);
        break;
      }
    }
    fail(n, "quotient mod 2 equals (x+1)(x^2+x+1)x^(n^2/2-2)", bad);
  }
  return rep;
}

bool divisibility_check(const DivPolyTable& table, unsigned n) {
  if (n < 2 || n % 2 != 0) throw InvalidInput("divisibility_check needs even n >= 2");
  return arith::divides(table[2], table[n]);
}

std::string to_string(TorsionKind k) {
  switch (k) {
    case TorsionKind::kNotTorsion: return "not_torsion";
    case TorsionKind::kTwoTorsionCandidate: return "two_torsion_candidate";
    case TorsionKind::kInconclusive: return "inconclusive";
  }
  return "?";
}

TorsionVerdict unit_obstruction(const IntPoly& r_cubic, bool z_is_zero) {
  if (r_cubic.degree() != 3 || r_cubic.lead() != 1) throw InvalidInput("attested cubic for R must be monic of degree 3");
  if (r_cubic.coeff(0) != -1) throw InvalidInput("attested cubic for R must have constant term -1");
  if (z_is_zero) return {TorsionKind::kTwoTorsionCandidate, "y = R Z = 0"};
  return {TorsionKind::kNotTorsion,
          "R is a unit, so v(x) = 0 at every place above 2; torsion of order > 2 needs v(x) < 0"};
}

TorsionVerdict torsion_obstruction(const IntPoly& x_minpoly) {
  if (x_minpoly.degree() < 1 || x_minpoly.lead() != 1) throw InvalidInput("x minimal polynomial must be monic");
  if (arith::divides(x_minpoly, IntPoly{-1, 0, 2, 1})) {
    return {TorsionKind::kTwoTorsionCandidate, "x is a root of x^3 + 2x^2 - 1"};
  }
  if (mpz_odd_p(x_minpoly.coeff(0).get_mpz_t())) {
    return {TorsionKind::kNotTorsion, "odd constant term: x is a unit, every valuation above 2 is zero"};
  }
  return {TorsionKind::kInconclusive, "valuation-positive: even constant term"};
}

std::string GaussianInt::to_string() const {
  std::ostringstream os;
  os << re.get_str() << (im < 0 ? "-" : "+") << BigInt(abs(im)).get_str() << "i";
  return os.str();
}

GaussianInt gaussian_divpoly_eval(const DivPolyTable& table, unsigned n, const GaussianInt& z) {
  if (n < 1) throw InvalidInput("division polynomial index must be >= 1");
  const auto& c = table[n].coeffs();
  GaussianInt acc{0, 0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + GaussianInt{*it, 0};
  return acc;
}

IntersectionAudit intersection_point_audit() {
  const DivPolyTable table(default_curve(), 6);
  IntersectionAudit audit;
  const GaussianInt plus{1, 1}, minus{1, -1};
  for (unsigned n = 2; n <= 6; ++n) {
    IntersectionAudit::Row row{n, gaussian_divpoly_eval(table, n, plus), gaussian_divpoly_eval(table, n, minus)};
    if (row.at_plus.is_zero() || row.at_minus.is_zero()) {
      throw VerificationFailure("f_" + std::to_string(n) + " vanishes at x = 1 +- i");
    }
    if (!(row.at_minus == row.at_plus.conj())) throw InternalConsistency("conjugate evaluations disagree");
    audit.rows.push_back(row);
  }
  audit.assumptions =
      "torsion subgroup over the field of the points is Z/6Z (external input); "
      "the -14/1 boundary slope is checked separately and not reproduced";
  audit.conclusion =
      "no point with x = 1 +- i has order 2..6; given the assumed Z/6Z torsion, these points have infinite order";
  return audit;
}

}  // namespace sevenfour::ec
