// Exact polynomial arithmetic over Z beyond ring ops: content/primitive part,
// gcd and lcm by the subresultant (primitive PRS) algorithm, and exact
// division. HomogPoly variants work through the dehomogenized X^a Y^b * q(T)
// form and restore the grading afterwards.
#pragma once

#include "divpoly/divpoly.hpp"

namespace edsp {

Int content(const IntPoly& p);
// primitive part with positive leading coefficient; zero stays zero
IntPoly primitive_part(const IntPoly& p);

// Exact division: returns q with num = q * den; throws DivisionNotExact.
IntPoly divexact(const IntPoly& num, const IntPoly& den);

// gcd via primitive PRS, normalized primitive with positive leading coeff.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
// lcm = a*b / gcd(a,b), normalized primitive-positive.
IntPoly poly_lcm(const IntPoly& a, const IntPoly& b);

HomogPoly homog_gcd(const HomogPoly& a, const HomogPoly& b);
HomogPoly homog_lcm(const HomogPoly& a, const HomogPoly& b);
HomogPoly homog_divexact(const HomogPoly& num, const HomogPoly& den);

// pseudo-remainder helpers exposed for tests
IntPoly poly_pseudo_rem(const IntPoly& a, const IntPoly& b);

}  // namespace edsp
