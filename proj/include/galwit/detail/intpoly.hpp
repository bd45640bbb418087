#ifndef GALWIT_DETAIL_INTPOLY_HPP
#define GALWIT_DETAIL_INTPOLY_HPP

// Integer polynomial kernels shared by the factorization, resultant and
// number field code. Ascending coefficients, trailing zeros trimmed.

#include "galwit/poly.hpp"

#include <vector>

namespace galwit::detail {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& f);
inline int deg(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }

Integer content(const IntPoly& f);
/// Divides out the content; the sign of the leading coefficient is kept.
IntPoly primitive_part(const IntPoly& f);

/// f = scale * P with P in Z[x] primitive and lc(P) > 0.
IntPoly to_primitive(const PolyQ& f, Rational& scale);
PolyQ to_polyq(const IntPoly& f);

IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly derivative(const IntPoly& f);
/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly prem(const IntPoly& a, const IntPoly& b);
/// Exact division over Z; false when b does not divide a.
bool exact_divide(const IntPoly& a, const IntPoly& b, IntPoly& quotient);
Integer eval(const IntPoly& f, const Integer& at);

/// Subresultant PRS resultant, same convention as galwit::resultant.
Integer resultant(IntPoly a, IntPoly b);
/// Same value, computed modulo word primes up to the Hadamard bound.
Integer resultant_modular(IntPoly a, IntPoly b);

} // namespace galwit::detail

#endif
