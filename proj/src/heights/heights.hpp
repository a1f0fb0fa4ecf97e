// Naive, logarithmic, and canonical heights with certified error, plus the
// lower-bound ladder for the canonical height on y^2 = x^3 + a x.
// Normalization: hhat(P) = lim h(2^N P) / (2 * 4^N), so h ~ 2*hhat.
#pragma once

#include "curve/curve.hpp"
#include "support/real.hpp"

namespace edsp {

struct PrecisionUnreachable : std::runtime_error {
  PrecisionUnreachable() : std::runtime_error("requested height error needs too many doublings") {}
};
struct NotFourthPowerFree : std::invalid_argument {
  NotFourthPowerFree() : std::invalid_argument("a must be fourth-power-free") {}
};

struct HeightEstimate {
  Real value;        // hhat
  Real error_radius; // certified: |value - hhat| <= error_radius
  int iterations = 0;
};

Int naive_height(const Rat& x);      // H(u/v) = max(|u|, |v|)
Real log_height(const Rat& x, mpfr_prec_t prec = 128);

// C = 0.26 + log|a| / 4, the constant with |h(P) - 2 hhat(P)| <= 2C.
Real height_gap_constant(const Int& a, mpfr_prec_t prec = 128);

// hhat by the doubling limit h(2^N P)/(2 4^N) with error C/4^N.
// Requires a short-form curve and non-torsion P.
HeightEstimate canonical_height(const Curve& c, const CurvePoint& p,
                                double target_error = 1e-6, int max_doublings = 14,
                                mpfr_prec_t prec = 128);

enum class HhatRegime { SmallA42, General16, Global10 };

struct HhatLowerBound {
  Real value;
  HhatRegime regime;
};

// max of (log|a| - log4)/16, (log|a| + log16)/42 when |a| <= 100, and 1/10;
// valid for every non-torsion point when a is fourth-power-free, |a| >= 2.
HhatLowerBound hhat_lower_bound(const Int& a, mpfr_prec_t prec = 128);

}  // namespace edsp
