// Elliptic divisibility sequences B_n, the gcd sequence g_n, delta detection,
// radical reduction, and primitive-divisor detection by gcd-stripping.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "curve/curve.hpp"
#include "divpoly/divpoly.hpp"

namespace edsp {

struct InconsistentRoutes : std::logic_error {
  InconsistentRoutes() : std::logic_error("scalar-mul and division-polynomial routes disagree") {}
};
struct InconsistentDelta : std::runtime_error {
  InconsistentDelta() : std::runtime_error("delta instances disagree across indices") {}
};
struct UnsupportedIndex : std::invalid_argument {
  explicit UnsupportedIndex(const char* w) : std::invalid_argument(w) {}
};

struct EdsTerm {
  unsigned n = 0;
  Int A;  // numerator of x(nP)
  Int B;  // denominator, > 0, perfect square for short curves
  Int g;  // g_n = gcd(phi_n(u,v), v psi_n^2(u,v)); 0 when not applicable
};

struct PrimDivReport {
  unsigned n = 0;
  bool has_primitive = false;
  Int stripped_cofactor;          // part of B_n coprime to B_1..B_{n-1}
  std::optional<Int> witness;     // smallest primitive prime below trial bound
};

// Per-(curve, point) sequence context with a synchronized term memo.
class EdsSequence {
 public:
  // P must be a non-torsion point on c. Throws TorsionPoint / PointNotOnCurve.
  EdsSequence(Curve c, CurvePoint p);

  const Curve& curve() const { return curve_; }
  const CurvePoint& point() const { return point_; }

  // A, B from the scalar-multiplication route; g from the homogenized
  // division polynomials when the curve is short-form (routes cross-checked).
  EdsTerm term(unsigned n) const;
  Int B(unsigned n) const { return term(n).B; }

  // delta in {0,1} with |A_n B_2 - A_2 B_n|^2 = 4^delta B_{n+2} B_{n-2} for n
  // odd; determined at n=1 and verified at n=3,5.
  int delta() const;

  // Lemma-gn prediction from g_2, g_4, delta; n odd or n = 2 mod 4.
  Int gn_closed_form(unsigned n) const;

  PrimDivReport primitive_divisor(unsigned n, uint64_t trial_bound = 1'000'000) const;

  // exact rational z = (B30 B5 B3 B2) / (B1 B15 B10 B6)
  struct XRatioReport {
    Rat z;
    bool is_integer = false;
    bool divides_900 = false;
  };
  XRatioReport lemma_x_ratio() const;

 private:
  EdsTerm compute_term(unsigned n) const;

  Curve curve_;
  CurvePoint point_;
  Int u_, v_;  // x(P) = u/v in lowest terms, v >= 1
  mutable std::mutex mu_;
  mutable std::map<unsigned, EdsTerm> memo_;
};

// r = radical(n) and P' = (n/r) P; B_n(E, P) = B_r(E, P').
struct RadicalReduction {
  Int r;
  CurvePoint reduced_point;
};
RadicalReduction radical_reduce(const Curve& c, const CurvePoint& p, unsigned n);

}  // namespace edsp
