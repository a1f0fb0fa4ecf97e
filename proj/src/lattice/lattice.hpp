// Numerics on the square lattice L = Z + Zi: truncated sums with certified
// tails, the Weierstrass sigma / wp / zeta quasi-period values, G4, and the
// Eisenstein-series machinery. Truncated sums over |w| <= R are completed by
// exact Eisenstein tail corrections, so the reported tail bounds reach far
// below what bare truncation would give.
#pragma once

#include <vector>

#include "support/intutil.hpp"
#include "support/real.hpp"

namespace edsp {

struct PoleAtLatticePoint : std::domain_error {
  PoleAtLatticePoint() : std::domain_error("z is a lattice point") {}
};

struct TruncatedSum {
  Complex value;
  Real tail_bound;  // |true - value| <= tail_bound
};

struct GaussianRational {
  Rat re, im;
};

// Lambda_1 = the 12 lattice points with |w| <= 2; exact sum of w^(-k).
GaussianRational lambda1_power_sum(unsigned k);

// Truncated sum of |w|^(-k) over Lambda* = {|w| > 2}, with integral tail.
TruncatedSum lambda_star_tail(unsigned k, double radius);

// 15 * G4 by direct truncated lattice sum with proof-style integral tail.
TruncatedSum g4_estimate(double radius);

// G4 to full precision by the q-expansion at tau = i, cross-checked against
// the closed form 2 zeta(4) * 3 Gamma(1/4)^8 / (2 pi)^6.
Real g4_highprec(mpfr_prec_t prec);

// Laurent coefficients c_k of wp(z) = z^-2 + sum_k c_k z^(2k) (c_k = 0 for k
// even); count terms are generated from G4 alone.
std::vector<Real> wp_laurent_coeffs(size_t count, mpfr_prec_t prec);

// sigma(z) = z prod' (1 - z/w) e^{z/w + z^2/(2w^2)}; certified truncation.
TruncatedSum sigma_eval(const Complex& z, double radius, mpfr_prec_t prec = 192);
// wp(z) = 1/z^2 + sum' [ (z-w)^-2 - w^-2 ].
TruncatedSum wp_eval(const Complex& z, double radius, mpfr_prec_t prec = 192);
// Quasi-period eta(w0) = 2 zeta_w(w0 / 2) for w0 in {1, i}.
Complex eta_quasi(bool imaginary_period, double radius = 40.0, mpfr_prec_t prec = 192);

}  // namespace edsp
