#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sevenfour/core/bigint.hpp"

namespace sevenfour::arith {

/// Dense univariate polynomial over the integers, coefficients stored lowest
/// degree first. The top stored coefficient is never zero; the zero
/// polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t degree);
  static IntPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i; zero past the degree.
  BigInt coeff(std::size_t i) const;
  const BigInt& lead() const;

  /// Positive gcd of the coefficients (zero for the zero polynomial).
  BigInt content() const;
  /// this / content(); keeps the sign of the leading coefficient.
  IntPoly primitive_part() const;

  IntPoly derivative() const;
  /// p(x + shift)
  IntPoly taylor_shift(const BigInt& shift) const;
  /// p(x^k)
  IntPoly inflate(unsigned k) const;
  /// x^degree * p(1/x)
  IntPoly reversed() const;

  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;
  template <typename T>
  T eval_as(const T& x) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend IntPoly operator*(const BigInt& c, IntPoly a) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  IntPoly pow(unsigned e) const;

  /// Divide every coefficient by c; throws InternalConsistency if any division is inexact.
  IntPoly exact_div_scalar(const BigInt& c) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Quotient and remainder over Q when the divisor is monic or divides exactly;
/// `divmod` requires lead(divisor) to divide every intermediate leading term
/// and throws InternalConsistency otherwise.
std::pair<IntPoly, IntPoly> divmod(const IntPoly& num, const IntPoly& den);

/// Quotient num/den, throwing InternalConsistency when the remainder is nonzero.
IntPoly exact_div(const IntPoly& num, const IntPoly& den);

/// True when den divides num in Z[x].
bool divides(const IntPoly& den, const IntPoly& num);

/// lead(den)^(deg num - deg den + 1) * num = q*den + r.
std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& num, const IntPoly& den);

/// Gcd in Z[x] with positive leading coefficient (primitive-PRS).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

template <typename T>
T IntPoly::eval_as(const T& x) const {
  T acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + T(it->get_d());
  }
  return acc;
}

}  // namespace sevenfour::arith
