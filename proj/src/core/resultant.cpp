#include "sevenfour/core/resultant.hpp"

#include "sevenfour/core/errors.hpp"

namespace sevenfour::arith {

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw InvalidInput("resultant of a zero polynomial");
  IntPoly a = f;
  IntPoly b = g;
  int sgn = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) sgn = -sgn;
  }
  if (b.degree() == 0) {
    return ipow(b.lead(), static_cast<unsigned long>(a.degree())) * sgn;
  }
  const BigInt ca = a.content();
  const BigInt cb = b.content();
  const BigInt scale = ipow(ca, static_cast<unsigned long>(b.degree())) * ipow(cb, static_cast<unsigned long>(a.degree()));
  a = a.primitive_part();
  b = b.primitive_part();

  BigInt gg = 1;
  BigInt h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) sgn = -sgn;
    IntPoly r = pseudo_divmod(a, b).second;
    if (r.is_zero()) return 0;
    a = std::move(b);
    b = r.exact_div_scalar(gg * ipow(h, static_cast<unsigned long>(delta)));
    gg = a.lead();
    // h <- g^delta / h^(delta-1)
    if (delta != 0) {
      BigInt num = ipow(gg, static_cast<unsigned long>(delta));
      BigInt den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) break;
  }
  const unsigned long da = static_cast<unsigned long>(a.degree());
  BigInt num = ipow(b.lead(), da);
  BigInt den = ipow(h, da - 1);
  BigInt tail;
  mpz_divexact(tail.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return tail * scale * sgn;
}

BigInt discriminant(const IntPoly& f) {
  if (f.degree() < 1) throw InvalidInput("discriminant needs degree >= 1");
  const long n = f.degree();
  BigInt r = resultant(f, f.derivative());
  BigInt q;
  mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), f.lead().get_mpz_t());
  return ((n * (n - 1) / 2) % 2 == 0) ? q : BigInt(-q);
}

}  // namespace sevenfour::arith
