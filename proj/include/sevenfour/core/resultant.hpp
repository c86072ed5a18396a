#pragma once

#include "sevenfour/core/int_poly.hpp"

namespace sevenfour::arith {

/// Res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a), i.e. the Sylvester
/// determinant with f's rows first. Computed by the subresultant PRS, so all
/// intermediate quantities stay in Z[x]. Throws InvalidInput on a zero input.
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)
BigInt discriminant(const IntPoly& f);

}  // namespace sevenfour::arith
