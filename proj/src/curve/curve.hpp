// Exact rational-arithmetic group law for Weierstrass curves
//   y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6.
// The short family y^2 = x^3 + a x is the main case and carries extra state
// (shortA, fourth-power-free flag) used by the divisibility-sequence modules.
#pragma once

#include <optional>
#include <stdexcept>

#include "support/intutil.hpp"

namespace edsp {

struct PointNotOnCurve : std::runtime_error {
  PointNotOnCurve() : std::runtime_error("point does not satisfy the curve equation") {}
};
struct TorsionPoint : std::runtime_error {
  TorsionPoint() : std::runtime_error("point is torsion") {}
};

class CurvePoint {
 public:
  CurvePoint() : inf_(true) {}                       // point at infinity
  CurvePoint(Rat x, Rat y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {
    x_.canonicalize();
    y_.canonicalize();
  }
  static CurvePoint infinity() { return CurvePoint(); }

  bool is_infinity() const { return inf_; }
  const Rat& x() const { return x_; }
  const Rat& y() const { return y_; }

  // numerator/denominator of x in lowest terms, denominator > 0
  Int x_num() const { return x_.get_num(); }
  Int x_den() const { return x_.get_den(); }

  bool operator==(const CurvePoint& o) const {
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return x_ == o.x_ && y_ == o.y_;
  }

 private:
  bool inf_;
  Rat x_, y_;
};

class Curve {
 public:
  // General Weierstrass coefficients.
  Curve(Int a1, Int a2, Int a3, Int a4, Int a6);
  // Short form y^2 = x^3 + a x.
  static Curve short_form(const Int& a) { return Curve(0, 0, 0, a, 0); }

  const Int& a1() const { return a1_; }
  const Int& a2() const { return a2_; }
  const Int& a3() const { return a3_; }
  const Int& a4() const { return a4_; }
  const Int& a6() const { return a6_; }

  const std::optional<Int>& short_a() const { return short_a_; }
  bool fourth_power_free() const { return fourth_power_free_; }
  const Int& discriminant() const { return disc_; }

  bool contains(const CurvePoint& p) const;
  void require_on_curve(const CurvePoint& p) const {
    if (!contains(p)) throw PointNotOnCurve();
  }

  CurvePoint negate(const CurvePoint& p) const;
  CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
  CurvePoint scalar_mul(unsigned long n, const CurvePoint& p) const;

  // Minimal 1 <= k <= 12 with kP = O, or 0 when P is non-torsion (Mazur's
  // bound caps rational torsion order at 12).
  unsigned torsion_order(const CurvePoint& p) const;
  bool is_torsion(const CurvePoint& p) const { return torsion_order(p) != 0; }

 private:
  Int a1_, a2_, a3_, a4_, a6_;
  Int disc_;
  std::optional<Int> short_a_;
  bool fourth_power_free_ = false;
};

}  // namespace edsp
