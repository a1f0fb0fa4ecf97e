#include "curve/curve.hpp"

namespace edsp {

Curve::Curve(Int a1, Int a2, Int a3, Int a4, Int a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)),
      a4_(std::move(a4)), a6_(std::move(a6)) {
  Int b2 = a1_ * a1_ + 4 * a2_;
  Int b4 = 2 * a4_ + a1_ * a3_;
  Int b6 = a3_ * a3_ + 4 * a6_;
  Int b8 = a1_ * a1_ * a6_ + 4 * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
  disc_ = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  if (disc_ == 0) throw std::invalid_argument("singular curve (discriminant 0)");
  if (a1_ == 0 && a2_ == 0 && a3_ == 0 && a6_ == 0) {
    short_a_ = a4_;
    fourth_power_free_ = is_fourth_power_free(a4_);
  }
}

bool Curve::contains(const CurvePoint& p) const {
  if (p.is_infinity()) return true;
  const Rat& x = p.x();
  const Rat& y = p.y();
  Rat lhs = y * y + Rat(a1_) * x * y + Rat(a3_) * y;
  Rat rhs = x * x * x + Rat(a2_) * x * x + Rat(a4_) * x + Rat(a6_);
  return lhs == rhs;
}

CurvePoint Curve::negate(const CurvePoint& p) const {
  if (p.is_infinity()) return p;
  return {p.x(), -p.y() - Rat(a1_) * p.x() - Rat(a3_)};
}

CurvePoint Curve::add(const CurvePoint& p, const CurvePoint& q) const {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const Rat &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
  if (x1 == x2 && y1 + y2 + Rat(a1_) * x2 + Rat(a3_) == 0) return CurvePoint::infinity();
  Rat lam, nu;
  if (x1 != x2) {
    Rat d = x2 - x1;
    lam = (y2 - y1) / d;
    nu = (y1 * x2 - y2 * x1) / d;
  } else {
    Rat d = 2 * y1 + Rat(a1_) * x1 + Rat(a3_);
    lam = (3 * x1 * x1 + 2 * Rat(a2_) * x1 + Rat(a4_) - Rat(a1_) * y1) / d;
    nu = (-(x1 * x1 * x1) + Rat(a4_) * x1 + 2 * Rat(a6_) - Rat(a3_) * y1) / d;
  }
  Rat x3 = lam * lam + Rat(a1_) * lam - Rat(a2_) - x1 - x2;
  Rat y3 = -(lam + Rat(a1_)) * x3 - nu - Rat(a3_);
  return {std::move(x3), std::move(y3)};
}

CurvePoint Curve::scalar_mul(unsigned long n, const CurvePoint& p) const {
  CurvePoint acc = CurvePoint::infinity();
  CurvePoint base = p;
  while (n) {
    if (n & 1) acc = add(acc, base);
    n >>= 1;
    if (n) base = add(base, base);
  }
  return acc;
}

unsigned Curve::torsion_order(const CurvePoint& p) const {
  require_on_curve(p);
  CurvePoint acc = CurvePoint::infinity();
  for (unsigned k = 1; k <= 12; ++k) {
    acc = add(acc, p);
    if (acc.is_infinity()) return k;
  }
  return 0;
}

}  // namespace edsp
