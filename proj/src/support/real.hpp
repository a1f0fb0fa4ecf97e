// Value-semantic wrappers around MPFR: Real (point values, round-to-nearest),
// Interval (outward-rounded enclosures for inequality decisions), and Complex.
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace edsp {

class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  static Real of(double x, mpfr_prec_t prec = 128) { Real r(prec); mpfr_set_d(r.v_, x, MPFR_RNDN); return r; }
  static Real of(long x, mpfr_prec_t prec = 128) { Real r(prec); mpfr_set_si(r.v_, x, MPFR_RNDN); return r; }
  static Real of(const mpz_class& x, mpfr_prec_t prec = 128) { Real r(prec); mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN); return r; }
  static Real of(const mpq_class& x, mpfr_prec_t prec = 128) { Real r(prec); mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN); return r; }
  static Real of_str(const char* s, mpfr_prec_t prec = 128) { Real r(prec); mpfr_set_str(r.v_, s, 10, MPFR_RNDN); return r; }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(int sig_digits = 17) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }

  friend Real operator+(const Real& a, const Real& b) { return bin(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return bin(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return bin(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return bin(a, b, mpfr_div); }
  Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  friend Real abs(const Real& a) { Real r(a.prec()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real sqrt(const Real& a) { Real r(a.prec()); mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real log(const Real& a) { Real r(a.prec()); mpfr_log(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real exp(const Real& a) { Real r(a.prec()); mpfr_exp(r.v_, a.v_, MPFR_RNDN); return r; }

  static Real pi(mpfr_prec_t prec) { Real r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

 private:
  template <typename F>
  static Real bin(const Real& a, const Real& b, F op) {
    Real r(std::max(a.prec(), b.prec()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

// Closed interval [lo, hi] with outward rounding on every operation.
// Division requires a denominator interval of constant sign.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128) : lo_(prec), hi_(prec) {}
  static Interval exact(const mpq_class& x, mpfr_prec_t prec = 128);
  static Interval exact(long x, mpfr_prec_t prec = 128);
  static Interval exact(const mpz_class& x, mpfr_prec_t prec = 128);
  static Interval of_double(double x, mpfr_prec_t prec = 128);
  // [center - radius, center + radius]
  static Interval ball(const Real& center, const Real& radius);
  static Interval hull(const Real& a, const Real& b);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  Real width() const;
  Real mid() const;
  mpfr_prec_t prec() const { return lo_.prec(); }

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;
  Interval operator-() const;

  friend Interval log(const Interval& a);    // requires lo > 0
  friend Interval exp(const Interval& a);
  friend Interval sqrt(const Interval& a);   // requires lo >= 0
  friend Interval abs(const Interval& a);

  bool definitely_less(const Interval& o) const { return hi_ < o.lo_; }
  bool definitely_greater(const Interval& o) const { return lo_ > o.hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

 private:
  Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}
  Real lo_, hi_;
};

struct Complex {
  Real re, im;
  explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator*(const Complex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Complex operator/(const Complex& o) const {
    Real d = o.norm2();
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  Complex operator-() const { return {-re, -im}; }
  Complex conj() const { return {re, -im}; }
  Real norm2() const { return re * re + im * im; }
  Real abs() const { Real r(re.prec()); mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN); return r; }
  static Complex of(double r, double i, mpfr_prec_t prec) { return {Real::of(r, prec), Real::of(i, prec)}; }
};

Complex cexp(const Complex& z);

}  // namespace edsp
