#include "heights/heights.hpp"

namespace edsp {

Int naive_height(const Rat& x) {
  Int u = abs(x.get_num());
  Int v = x.get_den();
  return u > v ? u : v;
}

Real log_height(const Rat& x, mpfr_prec_t prec) {
  return log(Real::of(naive_height(x), prec));
}

Real height_gap_constant(const Int& a, mpfr_prec_t prec) {
  Int aa = abs(a);
  return Real::of_str("0.26", prec) + log(Real::of(aa, prec)) / Real::of(4L, prec);
}

HeightEstimate canonical_height(const Curve& c, const CurvePoint& p,
                                double target_error, int max_doublings,
                                mpfr_prec_t prec) {
  if (!c.short_a()) throw std::invalid_argument("canonical_height: short-form curve required");
  c.require_on_curve(p);
  if (c.is_torsion(p)) throw TorsionPoint();
  Real C = height_gap_constant(*c.short_a(), prec);
  Real err = C;
  Real target = Real::of(target_error, prec);
  int N = 0;
  {
    Real e = C;
    while (e > target) {
      mpfr_div_ui(e.raw(), e.raw(), 4, MPFR_RNDU);
      ++N;
      if (N > max_doublings) throw PrecisionUnreachable();
    }
    err = e;
  }
  CurvePoint q = p;
  for (int i = 0; i < N; ++i) {
    q = c.add(q, q);
    if (q.is_infinity()) throw std::logic_error("canonical_height: doubling hit infinity for non-torsion point");
  }
  HeightEstimate est{Real(prec), Real(prec), N};
  Real h = log(Real::of(naive_height(q.x()), prec));
  Real scale = Real::of(2L, prec);
  mpfr_mul_2exp(scale.raw(), scale.raw(), 2 * N, MPFR_RNDN);  // 2 * 4^N
  est.value = h / scale;
  est.error_radius = err;
  return est;
}

HhatLowerBound hhat_lower_bound(const Int& a, mpfr_prec_t prec) {
  if (!is_fourth_power_free(a)) throw NotFourthPowerFree();
  Int aa = abs(a);
  if (aa < 2) throw std::invalid_argument("hhat_lower_bound: |a| >= 2 required");
  Real la = log(Real::of(aa, prec));
  Real b16 = (la - log(Real::of(4L, prec))) / Real::of(16L, prec);
  Real b10 = Real::of(1L, prec) / Real::of(10L, prec);
  HhatLowerBound out{b10, HhatRegime::Global10};
  if (b16 > out.value) out = {b16, HhatRegime::General16};
  if (aa <= 100) {
    Real b42 = (la + log(Real::of(16L, prec))) / Real::of(42L, prec);
    if (b42 > out.value) out = {b42, HhatRegime::SmallA42};
  }
  return out;
}

}  // namespace edsp
