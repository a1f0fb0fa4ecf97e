// Reconstruction of the irreducible factors of Psi_30(X, Y) over Z.
// Roots of Psi_30(T, 1) are T = x^2 over the exact-order-30 torsion
// x-coordinates of y^2 = x^3 + x; each root is computed from the Weierstrass
// wp-value of its lattice parameter, the roots are grouped by the
// Z[i]-annihilator type of the parameter (Galois-orbit classes, conjugate
// types merged), each group's monic product is rounded to integers, and the
// result is verified by exact multiplication against Psi_30.
#pragma once

#include <optional>
#include <vector>

#include "divpoly/divpoly.hpp"
#include "support/real.hpp"

namespace edsp {

struct ReconstructedFactor {
  HomogPoly poly;            // monic in X of its degree
  int degree = 0;
  Int second_coefficient;    // coefficient of X^(d-1) Y
};

struct Psi30Reconstruction {
  bool verified = false;     // exact product equals Psi_30
  std::vector<ReconstructedFactor> factors;  // sorted by (degree, second coeff)
  std::string failure_reason;
};

// prec is the working mantissa for the lattice evaluation; retried once at
// double the precision if rounding is ambiguous.
Psi30Reconstruction reconstruct_psi30(mpfr_prec_t prec = 1100);

}  // namespace edsp
