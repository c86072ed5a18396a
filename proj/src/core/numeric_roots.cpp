#include "sevenfour/core/numeric_roots.hpp"

#include <cmath>

#include "sevenfour/core/errors.hpp"

namespace sevenfour::arith {

std::vector<Complex> complex_roots(const std::vector<long double>& c_in, int max_iterations) {
  std::vector<long double> c = c_in;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.size() < 2) throw InvalidInput("root finding needs a nonconstant polynomial");
  const std::size_t n = c.size() - 1;
  long double radius = 0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::fabs(c[i] / c[n]));
  radius += 1;

  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    // Offset angle avoids symmetric starts that stall on real polynomials.
    const long double theta = 2 * 3.14159265358979323846L * static_cast<long double>(k) / n + 0.4L;
    z[k] = std::polar(radius, theta);
  }
  auto eval = [&](const Complex& x, Complex& dv) {
    Complex v = c[n];
    dv = 0;
    for (std::size_t i = n; i-- > 0;) {
      dv = dv * x + v;
      v = v * x + c[i];
    }
    return v;
  };
  for (int it = 0; it < max_iterations; ++it) {
    long double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex dv;
      const Complex v = eval(z[k], dv);
      if (v == Complex(0)) continue;
      const Complex ratio = v / dv;
      Complex repulsion = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) repulsion += Complex(1) / (z[k] - z[j]);
      }
      const Complex step = ratio / (Complex(1) - ratio * repulsion);
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max<long double>(1, std::abs(z[k])));
    }
    if (worst < 1e-18L) break;
  }
  return z;
}

std::vector<Complex> complex_roots(const IntPoly& f, int max_iterations) {
  std::vector<long double> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(static_cast<long double>(x.get_d()));
  return complex_roots(c, max_iterations);
}

}  // namespace sevenfour::arith
