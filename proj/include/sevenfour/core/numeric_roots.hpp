#pragma once

#include <complex>
#include <vector>

#include "sevenfour/core/int_poly.hpp"

namespace sevenfour::arith {

using Complex = std::complex<long double>;

/// All complex roots of a nonconstant polynomial by Aberth-Ehrlich iteration
/// in long double, started on a circle of the Cauchy radius. Multiple roots
/// converge slowly and are only accurate to about the square root of the
/// working precision.
std::vector<Complex> complex_roots(const IntPoly& f, int max_iterations = 500);

/// Same for a polynomial with real (long double) coefficients, lowest first.
std::vector<Complex> complex_roots(const std::vector<long double>& coeffs, int max_iterations = 500);

}  // namespace sevenfour::arith
