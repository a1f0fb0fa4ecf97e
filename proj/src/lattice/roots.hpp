// Aberth-Ehrlich simultaneous root finding with certified per-root error
// radii, and the torsion-separation constants K_n on y^2 = x^3 + x.
#pragma once

#include "divpoly/divpoly.hpp"
#include "support/real.hpp"

namespace edsp {

struct RootFindingFailed : std::runtime_error {
  explicit RootFindingFailed(const char* w) : std::runtime_error(w) {}
};

struct CertifiedRoot {
  Complex value;
  Real radius;  // disk |value - true root| <= radius
};

// All complex roots of p (squarefree expected); Weierstrass-style certified
// radii r_i = deg * |p(x_i) / (lc * prod_{j != i} (x_i - x_j))|.
std::vector<CertifiedRoot> aberth_roots(const IntPoly& p, mpfr_prec_t prec = 256,
                                        int max_iter = 400);

enum class SeparationMethod { NumericRoots, PaperBound };

struct SeparationConstant {
  unsigned n = 0;
  Real value;  // certified lower bound for K_n
  SeparationMethod method = SeparationMethod::NumericRoots;
};

// K_n from the roots of p_n|_{a=1} (all nontrivial n-torsion x-coordinates;
// 2-torsion x in {0, +-i} appended for even n): the minimum over pairs of
// |x_i - x_j| and |1/x_i - 1/x_j|, reduced by the certified root radii.
// Desk scale: 2 <= n <= 17.
SeparationConstant K_numeric(unsigned n, mpfr_prec_t prec = 256);

// Closed-form bound K_n >= 1 / (2.5e36 n^6).
SeparationConstant K_lower_bound(unsigned n, mpfr_prec_t prec = 128);

// Root data used by scaling-law tests: roots of p_n at arbitrary integer a.
std::vector<CertifiedRoot> torsion_x_roots(unsigned n, const Int& a, mpfr_prec_t prec = 256);

}  // namespace edsp
