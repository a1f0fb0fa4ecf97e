// Arithmetic functions (rho, omega, eta, C) and the inequality decision
// engine: the square-free 5m criterion (odd and even branches), the m*p
// criterion chain with torsion-separation input, and the residual-case
// enumeration. All comparisons are outward-rounded; a verdict of
// RulesOutException means the no-primitive-divisor inequality provably fails
// for every canonical height admitted by the lower-bound ladder.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eds/eds.hpp"
#include "heights/heights.hpp"
#include "lattice/roots.hpp"

namespace edsp {

struct HypothesisNotMet : std::runtime_error {
  explicit HypothesisNotMet(const std::string& w) : std::runtime_error(w) {}
};

enum class Verdict { RulesOutException, Inconclusive };

struct CriterionReport {
  std::string name;
  Real lhs, rhs;   // representative outward-rounded sides (at the tightest point)
  bool holds = false;        // the paper-direction inequality can still hold
  Verdict verdict = Verdict::Inconclusive;
};

// eta(n) = sum over p | n of 2 log p
Real eta_arith(const Int& n, mpfr_prec_t prec = 128);
// C = 0.26 + log|a|/4  (same constant as heights::height_gap_constant)
inline Real bigC(const Int& a, mpfr_prec_t prec = 128) { return height_gap_constant(a, prec); }

// log B_n <= 2 log n + 2 n^2 rho(n) hhat(P) + 2 C omega(n) (holds when B_n
// has no primitive divisor); report-only.
CriterionReport check_yv_upper(const EdsSequence& seq, unsigned n);

// Linear form c0 + c1 * t in t = log|a|, with interval coefficients.
struct LinForm {
  Interval c0, c1;
  Interval at(const Interval& t) const { return c0 + c1 * t; }
};

// Upper bound on hhat implied by the no-primitive-divisor assumption for
// square-free n divisible by 5 (odd branch dis1, even branch pari), as a
// linear form in t = log|a| divided by the exact coefficient D.
struct HhatUpperForm {
  LinForm numerator;
  Rat denominator;  // 2 n^2 (9/25 - rho(n)) or 2 n^2 (1/2 - rho(n))
  Interval at(const Interval& t, mpfr_prec_t prec = 128) const;
};
HhatUpperForm dis_5m_form(unsigned n, mpfr_prec_t prec = 128);

// True iff the height lower-bound ladder exceeds `bound` for every
// fourth-power-free |a| in [a_lo, a_hi] (a_hi = 0 means unbounded).
bool ladder_dominates(const HhatUpperForm& bound, const Int& a_lo, const Int& a_hi,
                      mpfr_prec_t prec = 128);

// Decision for n = 5m square-free: exceptions ruled out for all |a| in range.
CriterionReport decide_5m_range(unsigned n, const Int& a_abs_lo, const Int& a_abs_hi,
                                mpfr_prec_t prec = 128);
// Point mode: specific a with an explicit hhat lower bound.
CriterionReport decide_5m(const Int& a, unsigned n, const Real& hhat_low,
                          mpfr_prec_t prec = 128);

// (m): 1.6 m^2 / p <= 28.7 log(m)/p^2 + 214.4 must hold under the
// no-primitive-divisor assumption; RulesOutException when it fails.
CriterionReport check_m_bound(long p, long m, mpfr_prec_t prec = 128);

// (eq:11) at n = p*q: 2 q^2 ((2p-3)/p^2 - 1/q^2) <= 28.7 log(q)/p^2 + 214.4.
// Survivors are the pairs where the inequality still holds.
CriterionReport check_eq11(long p, long q, mpfr_prec_t prec = 128);

// (eq:10)-derived decision for n = m*p with d = 2p-2 and separation constant
// K_p (numeric for p <= 17, closed-form bound otherwise unless supplied).
// Verifies the hypothesis gates (Lemma mp+2 and the 0.8/p gap) first.
CriterionReport decide_mp(long p, long m, std::optional<Real> Kp_low = std::nullopt,
                          mpfr_prec_t prec = 128);

struct ResidualCase {
  long p, q;
  bool survives_eq11;  // needs the (eq:10) treatment with numeric K_p
};
// All n = p*q with p = 1 mod 4 prime, 13 <= p <= 129, p < q < p+34 prime.
std::vector<ResidualCase> exceptional_residual_list(mpfr_prec_t prec = 128);

// sup over t in [t_lo, t_hi] (t_hi <= 0 means +infinity) of (A + B t)/(t - c);
// the ratio is monotone, so endpoint evaluation is exact up to rounding.
Interval sup_ratio_over_shifted(const Interval& A, const Interval& B, const Interval& c,
                                const Interval& t_lo, std::optional<Interval> t_hi);

}  // namespace edsp
