// Division polynomials psi_n, phi_n for y^2 = x^3 + a x, in three views:
//   * univariate IntPoly over Z[x] at a fixed integer a,
//   * graded HomogPoly in (X, Y) = (x^2, a),
//   * exact integer evaluation of the homogenized forms at coprime (u, v).
// Convention: psi_n = p_n for n odd, psi_n = y * p_n for n even, psi_2 = 2y,
// so psi_n^2 has degree n^2 - 1 and leading coefficient n^2.
#pragma once

#include <stdexcept>
#include <vector>

#include "support/intutil.hpp"

namespace edsp {

struct InvalidIndex : std::invalid_argument {
  explicit InvalidIndex(const char* what) : std::invalid_argument(what) {}
};
struct DivisionNotExact : std::logic_error {
  explicit DivisionNotExact(const char* what) : std::logic_error(what) {}
};
struct NotCoprime : std::invalid_argument {
  NotCoprime() : std::invalid_argument("u and v must be coprime with v >= 1") {}
};

// Dense univariate polynomial over Z; coeffs[i] multiplies x^i.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static IntPoly constant(Int v) { return IntPoly({std::move(v)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& operator[](size_t i) const { return c_[i]; }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& leading() const { return c_.back(); }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  IntPoly divexact_scalar(const Int& d) const;  // throws DivisionNotExact
  Rat eval(const Rat& x) const;
  Int eval(const Int& x) const;
  std::string str(const char* var = "x") const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

// Homogeneous bivariate polynomial of fixed degree: coeffs[i] * X^i * Y^(deg-i).
class HomogPoly {
 public:
  HomogPoly() : deg_(0), c_(1, Int(0)) {}
  HomogPoly(int degree, std::vector<Int> coeffs) : deg_(degree), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != deg_ + 1)
      throw std::invalid_argument("HomogPoly: coefficient count != degree+1");
  }
  static HomogPoly zero_of_degree(int d) { return HomogPoly(d, std::vector<Int>(d + 1, Int(0))); }
  static HomogPoly constant(Int v) { return HomogPoly(0, {std::move(v)}); }

  int degree() const { return deg_; }
  const Int& operator[](size_t i) const { return c_[i]; }
  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const;

  HomogPoly operator+(const HomogPoly& o) const;  // degrees must match
  HomogPoly operator-(const HomogPoly& o) const;
  HomogPoly operator*(const HomogPoly& o) const;  // degrees add
  bool operator==(const HomogPoly& o) const { return deg_ == o.deg_ && c_ == o.c_; }

  HomogPoly divexact_scalar(const Int& d) const;
  Int eval(const Int& X, const Int& Y) const;
  // substitute X -> x^2, Y -> a
  IntPoly substitute(const Int& a) const;
  std::string str() const;

 private:
  int deg_;
  std::vector<Int> c_;
};

// p_n at fixed a: psi_n = p_n (n odd) or y*p_n (n even). n >= 1.
IntPoly psi(unsigned n, const Int& a);
// phi_n = x psi_n^2 - psi_{n+1} psi_{n-1}, reduced by y^2 = x^3 + ax. Monic, degree n^2.
IntPoly phi(unsigned n, const Int& a);
// psi_n^2 as a polynomial in Z[x] (carries the (x^3+ax) factor for n even).
IntPoly psi_sq(unsigned n, const Int& a);

// p_n as homogeneous polynomial in (X, Y) = (x^2, a);
// degree (n^2-1)/4 for n odd, (n^2-4)/4 for n even.
HomogPoly graded_p(unsigned n);
int graded_degree(unsigned n);

// Exact integers psi_n^2(u,v) and phi_n(u,v) (homogenizations with v^(n^2-1)
// and v^(n^2)); x(nP) = phi_n(u,v) / (v psi_n^2(u,v)) before cancellation.
// Preconditions: gcd(u,v)=1, v >= 1.
Int homog_eval_psi_sq(unsigned n, const Int& a, const Int& u, const Int& v);
Int homog_eval_phi(unsigned n, const Int& a, const Int& u, const Int& v);

// Batch form: both values for all indices 1..n in one sweep of the recurrence.
struct HomogEval {
  Int psi_sq;  // psi_k^2(u,v)
  Int phi;     // phi_k(u,v)
  Int hp;      // graded p_k evaluated at (u^2, a v^2)
};
std::vector<HomogEval> homog_eval_range(unsigned n, const Int& a, const Int& u, const Int& v);

}  // namespace edsp
