#include "support/real.hpp"

#include <cassert>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace edsp {

std::string Real::str(int sig_digits) const {
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%dRg", sig_digits);
  char* s = nullptr;
  mpfr_asprintf(&s, fmt, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Interval Interval::exact(const mpq_class& x, mpfr_prec_t prec) {
  Real lo(prec), hi(prec);
  mpfr_set_q(lo.raw(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.raw(), x.get_mpq_t(), MPFR_RNDU);
  return {lo, hi};
}

Interval Interval::exact(long x, mpfr_prec_t prec) {
  Real lo(prec), hi(prec);
  mpfr_set_si(lo.raw(), x, MPFR_RNDD);
  mpfr_set_si(hi.raw(), x, MPFR_RNDU);
  return {lo, hi};
}

Interval Interval::exact(const mpz_class& x, mpfr_prec_t prec) {
  Real lo(prec), hi(prec);
  mpfr_set_z(lo.raw(), x.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.raw(), x.get_mpz_t(), MPFR_RNDU);
  return {lo, hi};
}

Interval Interval::of_double(double x, mpfr_prec_t prec) {
  Real lo(prec), hi(prec);
  mpfr_set_d(lo.raw(), x, MPFR_RNDD);
  mpfr_set_d(hi.raw(), x, MPFR_RNDU);
  return {lo, hi};
}

Interval Interval::ball(const Real& center, const Real& radius) {
  assert(radius.sign() >= 0);
  Real lo(center.prec()), hi(center.prec());
  mpfr_sub(lo.raw(), center.raw(), radius.raw(), MPFR_RNDD);
  mpfr_add(hi.raw(), center.raw(), radius.raw(), MPFR_RNDU);
  return {lo, hi};
}

Interval Interval::hull(const Real& a, const Real& b) {
  return a <= b ? Interval{a, b} : Interval{b, a};
}

Real Interval::width() const {
  Real w(prec());
  mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
  return w;
}

Real Interval::mid() const {
  Real m(prec());
  mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
  mpfr_div_ui(m.raw(), m.raw(), 2, MPFR_RNDN);
  return m;
}

Interval Interval::operator+(const Interval& o) const {
  Real lo(prec()), hi(prec());
  mpfr_add(lo.raw(), lo_.raw(), o.lo_.raw(), MPFR_RNDD);
  mpfr_add(hi.raw(), hi_.raw(), o.hi_.raw(), MPFR_RNDU);
  return {lo, hi};
}

Interval Interval::operator-(const Interval& o) const {
  Real lo(prec()), hi(prec());
  mpfr_sub(lo.raw(), lo_.raw(), o.hi_.raw(), MPFR_RNDD);
  mpfr_sub(hi.raw(), hi_.raw(), o.lo_.raw(), MPFR_RNDU);
  return {lo, hi};
}

Interval Interval::operator-() const { return {-hi_, -lo_}; }

Interval Interval::operator*(const Interval& o) const {
  mpfr_prec_t p = prec();
  Real lo(p), hi(p), t(p);
  bool first = true;
  const Real* xs[2] = {&lo_, &hi_};
  const Real* ys[2] = {&o.lo_, &o.hi_};
  for (auto* x : xs)
    for (auto* y : ys) {
      mpfr_mul(t.raw(), x->raw(), y->raw(), MPFR_RNDD);
      if (first || t < lo) lo = t;
      mpfr_mul(t.raw(), x->raw(), y->raw(), MPFR_RNDU);
      if (first || t > hi) hi = t;
      first = false;
    }
  return {lo, hi};
}

Interval Interval::operator/(const Interval& o) const {
  if (o.contains_zero()) throw std::domain_error("Interval division by interval containing 0");
  mpfr_prec_t p = prec();
  Real lo(p), hi(p), t(p);
  bool first = true;
  const Real* xs[2] = {&lo_, &hi_};
  const Real* ys[2] = {&o.lo_, &o.hi_};
  for (auto* x : xs)
    for (auto* y : ys) {
      mpfr_div(t.raw(), x->raw(), y->raw(), MPFR_RNDD);
      if (first || t < lo) lo = t;
      mpfr_div(t.raw(), x->raw(), y->raw(), MPFR_RNDU);
      if (first || t > hi) hi = t;
      first = false;
    }
  return {lo, hi};
}

Interval log(const Interval& a) {
  if (a.lo().sign() <= 0) throw std::domain_error("Interval log of non-positive value");
  Real lo(a.prec()), hi(a.prec());
  mpfr_log(lo.raw(), a.lo().raw(), MPFR_RNDD);
  mpfr_log(hi.raw(), a.hi().raw(), MPFR_RNDU);
  return Interval::hull(lo, hi);
}

Interval exp(const Interval& a) {
  Real lo(a.prec()), hi(a.prec());
  mpfr_exp(lo.raw(), a.lo().raw(), MPFR_RNDD);
  mpfr_exp(hi.raw(), a.hi().raw(), MPFR_RNDU);
  return Interval::hull(lo, hi);
}

Interval sqrt(const Interval& a) {
  if (a.lo().sign() < 0) throw std::domain_error("Interval sqrt of negative value");
  Real lo(a.prec()), hi(a.prec());
  mpfr_sqrt(lo.raw(), a.lo().raw(), MPFR_RNDD);
  mpfr_sqrt(hi.raw(), a.hi().raw(), MPFR_RNDU);
  return Interval::hull(lo, hi);
}

Interval abs(const Interval& a) {
  if (a.lo().sign() >= 0) return a;
  if (a.hi().sign() <= 0) return -a;
  Real z(a.prec());
  Real m = -a.lo() > a.hi() ? -a.lo() : a.hi();
  return Interval::hull(z, m);
}

Complex cexp(const Complex& z) {
  mpfr_prec_t p = z.re.prec();
  Real er(p), c(p), s(p);
  mpfr_exp(er.raw(), z.re.raw(), MPFR_RNDN);
  mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
  return {er * c, er * s};
}

}  // namespace edsp
