#include "criteria/criteria.hpp"

#include <algorithm>

namespace edsp {

namespace {

Rat rat_of(const char* s) { Rat r(s); r.canonicalize(); return r; }

const Rat& c_32863() { static const Rat r = rat_of("32863/1000"); return r; }
const Rat& c_052()   { static const Rat r = rat_of("13/25");      return r; }  // 2 * 0.26
const Rat& c_287()   { static const Rat r = rat_of("287/10");     return r; }
const Rat& c_2144()  { static const Rat r = rat_of("1072/5");     return r; }  // 214.4
const Rat& c_16()    { static const Rat r = rat_of("8/5");        return r; }  // 1.6

Interval ln_int(long v, mpfr_prec_t prec) { return log(Interval::exact(v, prec)); }

// ladder components as linear forms in t = log|a|
struct Component {
  LinForm f;
  bool small_a_only;  // valid only for |a| <= 100
};

std::vector<Component> ladder_components(mpfr_prec_t prec) {
  std::vector<Component> comps;
  // 1/10, valid for all fourth-power-free a
  comps.push_back({LinForm{Interval::exact(rat_of("1/10"), prec), Interval::exact(0L, prec)}, false});
  // (t - log 4)/16
  comps.push_back({LinForm{-ln_int(4, prec) / Interval::exact(16L, prec),
                           Interval::exact(rat_of("1/16"), prec)}, false});
  // (t + log 16)/42 for |a| <= 100
  comps.push_back({LinForm{ln_int(16, prec) / Interval::exact(42L, prec),
                           Interval::exact(rat_of("1/42"), prec)}, true});
  return comps;
}

struct MarginPoint {
  Real ladder_lo, bound_hi;
  bool valid = false;
};

// ladder(t) > bound(t) on [t_lo, t_hi] (t_hi nullopt = +inf), both expressed
// as functions of t = log|a|; vertex checking on the piecewise-linear max.
bool dominates_on(const HhatUpperForm& bound, const Interval& t_lo,
                  std::optional<Interval> t_hi, mpfr_prec_t prec, MarginPoint* worst) {
  auto comps = ladder_components(prec);
  Interval t100 = ln_int(100, prec);
  Interval den = Interval::exact(bound.denominator, prec);

  auto bound_at = [&](const Interval& t) { return bound.numerator.at(t) / den; };
  auto check_at = [&](const Interval& t, bool allow_small_a) -> bool {
    Real lad(prec);
    bool first = true;
    for (auto& c : comps) {
      if (c.small_a_only && !allow_small_a) continue;
      Real lo = c.f.at(t).lo();
      if (first || lo > lad) { lad = lo; first = false; }
    }
    Real bh = bound_at(t).hi();
    if (worst && (!worst->valid || lad - bh < worst->ladder_lo - worst->bound_hi)) {
      worst->ladder_lo = lad;
      worst->bound_hi = bh;
      worst->valid = true;
    }
    return lad > bh;
  };

  // segments: [t_lo, min(t_hi, log 100)] with the small-|a| component, and
  // [max(t_lo, log 100), t_hi] without it
  struct Segment {
    Interval lo, hi;
    bool unbounded;
    bool small_a;
  };
  std::vector<Segment> segs;
  bool starts_below_100 = !(t_lo.lo() > t100.hi());
  bool ends_above_100 = !t_hi || t_hi->hi() > t100.lo();
  if (starts_below_100) {
    Interval hi = (!t_hi || t_hi->hi() > t100.lo()) ? t100 : *t_hi;
    segs.push_back({t_lo, hi, false, true});
  }
  if (ends_above_100) {
    Interval lo = starts_below_100 ? t100 : t_lo;
    if (t_hi) segs.push_back({lo, *t_hi, false, false});
    else segs.push_back({lo, lo, true, false});
  }

  for (auto& seg : segs) {
    std::vector<Interval> verts{seg.lo};
    if (!seg.unbounded) verts.push_back(seg.hi);
    // breakpoints of the max: pairwise intersections of active components
    for (size_t i = 0; i < comps.size(); ++i) {
      if (comps[i].small_a_only && !seg.small_a) continue;
      for (size_t j = i + 1; j < comps.size(); ++j) {
        if (comps[j].small_a_only && !seg.small_a) continue;
        Interval dslope = comps[i].f.c1 - comps[j].f.c1;
        if (dslope.contains_zero()) continue;
        Interval ts = (comps[j].f.c0 - comps[i].f.c0) / dslope;
        bool inside_lo = ts.hi() >= seg.lo.lo();
        bool inside_hi = seg.unbounded || ts.lo() <= seg.hi.hi();
        if (inside_lo && inside_hi) verts.push_back(ts);
      }
    }
    for (auto& v : verts)
      if (!check_at(v, seg.small_a)) return false;
    if (seg.unbounded) {
      // eventual ladder slope is the largest component slope (1/16); require
      // it to strictly exceed the bound's slope
      Interval lad_slope = Interval::exact(rat_of("1/16"), prec);
      Interval b_slope = bound.numerator.c1 / den;
      if (!b_slope.definitely_less(lad_slope)) return false;
    }
  }
  return true;
}

Verdict verdict_of(bool rules_out) {
  return rules_out ? Verdict::RulesOutException : Verdict::Inconclusive;
}

}  // namespace

Real eta_arith(const Int& n, mpfr_prec_t prec) {
  auto f = trial_factor(n, 10'000'000);
  if (!f.complete()) throw std::invalid_argument("eta_arith: n not desk-scale");
  Real s(prec);
  for (auto& [p, e] : f.factors) s += Real::of(2L, prec) * log(Real::of(p, prec));
  return s;
}

Interval HhatUpperForm::at(const Interval& t, mpfr_prec_t prec) const {
  return numerator.at(t) / Interval::exact(denominator, prec);
}

HhatUpperForm dis_5m_form(unsigned n, mpfr_prec_t prec) {
  if (n % 5 != 0) throw std::invalid_argument("dis_5m_form: 5 | n required");
  Rat rn = rho(Int(n));
  long om = omega(Int(n));
  HhatUpperForm form;
  if (n % 2 == 1) {
    // 2 n^2 (9/25 - rho) hhat <= 29 t + 32.863 + 2C omega + 2 log n
    form.denominator = Rat(2 * long(n) * long(n)) * (rat_of("9/25") - rn);
    form.numerator.c1 = Interval::exact(29L, prec) +
                        Interval::exact(om, prec) / Interval::exact(4L, prec) * Interval::exact(2L, prec);
    form.numerator.c0 = Interval::exact(c_32863(), prec) +
                        Interval::exact(Rat(c_052()) * om, prec) +
                        Interval::exact(2L, prec) * ln_int(long(n), prec);
  } else {
    // log4 + 2 n^2 (1/2 - rho) hhat <= 2C(omega+2) + log(2^13 |a|^7) + 2 log n
    form.denominator = Rat(2 * long(n) * long(n)) * (rat_of("1/2") - rn);
    form.numerator.c1 = Interval::exact(om + 2L, prec) / Interval::exact(2L, prec) +
                        Interval::exact(7L, prec);
    form.numerator.c0 = Interval::exact(Rat(c_052()) * (om + 2), prec) +
                        Interval::exact(13L, prec) * ln_int(2, prec) +
                        Interval::exact(2L, prec) * ln_int(long(n), prec) -
                        ln_int(4, prec);
  }
  return form;
}

bool ladder_dominates(const HhatUpperForm& bound, const Int& a_lo, const Int& a_hi,
                      mpfr_prec_t prec) {
  Interval tlo = log(Interval::exact(a_lo, prec));
  std::optional<Interval> thi;
  if (a_hi != 0) thi = log(Interval::exact(a_hi, prec));
  return dominates_on(bound, tlo, thi, prec, nullptr);
}

CriterionReport decide_5m_range(unsigned n, const Int& a_abs_lo, const Int& a_abs_hi,
                                mpfr_prec_t prec) {
  HhatUpperForm form = dis_5m_form(n, prec);
  Interval tlo = log(Interval::exact(a_abs_lo, prec));
  std::optional<Interval> thi;
  if (a_abs_hi != 0) thi = log(Interval::exact(a_abs_hi, prec));
  MarginPoint worst;
  bool out = dominates_on(form, tlo, thi, prec, &worst);
  CriterionReport rep;
  rep.name = n % 2 ? "dis1" : "pari";
  rep.lhs = worst.valid ? worst.ladder_lo : Real(prec);
  rep.rhs = worst.valid ? worst.bound_hi : Real(prec);
  rep.holds = !out;
  rep.verdict = verdict_of(out);
  return rep;
}

CriterionReport decide_5m(const Int& a, unsigned n, const Real& hhat_low, mpfr_prec_t prec) {
  HhatUpperForm form = dis_5m_form(n, prec);
  Int aa = abs(a);
  Interval t = log(Interval::exact(aa, prec));
  Interval b = form.at(t, prec);
  CriterionReport rep;
  rep.name = n % 2 ? "dis1" : "pari";
  rep.lhs = hhat_low;
  rep.rhs = b.hi();
  bool out = hhat_low > b.hi();
  rep.holds = !out;
  rep.verdict = verdict_of(out);
  return rep;
}

CriterionReport check_yv_upper(const EdsSequence& seq, unsigned n) {
  const mpfr_prec_t prec = 128;
  if (!seq.curve().short_a()) throw std::invalid_argument("check_yv_upper: short curve");
  const Int& a = *seq.curve().short_a();
  auto h = canonical_height(seq.curve(), seq.point(), 1e-7, 14, prec);
  Interval hh = Interval::ball(h.value, h.error_radius);
  Interval rhs = Interval::exact(2L, prec) * ln_int(long(n), prec) +
                 Interval::exact(Rat(2 * long(n) * long(n)) * rho(Int(n)), prec) * hh +
                 Interval::exact(2L, prec) *
                     Interval::ball(bigC(a, prec), Real(prec)) *
                     Interval::exact(long(omega(Int(n))), prec);
  Real lhs = log(Real::of(seq.B(n), prec));
  CriterionReport rep;
  rep.name = "yv";
  rep.lhs = lhs;
  rep.rhs = rhs.lo();
  rep.holds = !(lhs > rhs.hi());  // true when log B_n may still satisfy the bound
  rep.verdict = rep.holds ? Verdict::Inconclusive : Verdict::RulesOutException;
  return rep;
}

CriterionReport check_m_bound(long p, long m, mpfr_prec_t prec) {
  // fails (rules out) iff 1.6 m^2 / p - 28.7 log(m)/p^2 - 214.4 > 0
  Interval mm = Interval::exact(m, prec);
  Interval pp = Interval::exact(p, prec);
  Interval lhs = Interval::exact(c_16(), prec) * mm * mm / pp;
  Interval rhs = Interval::exact(c_287(), prec) * log(mm) / (pp * pp) +
                 Interval::exact(c_2144(), prec);
  CriterionReport rep;
  rep.name = "m";
  rep.lhs = lhs.lo();
  rep.rhs = rhs.hi();
  bool out = rhs.definitely_less(lhs);
  rep.holds = !out;
  rep.verdict = verdict_of(out);
  return rep;
}

CriterionReport check_eq11(long p, long q, mpfr_prec_t prec) {
  // 2 q^2 ((2p-3)/p^2 - 1/q^2) <= 28.7 log(q)/p^2 + 214.4
  Rat lhs_exact = Rat(2 * q) * Rat(q) * (Rat(2 * p - 3) / Rat(p * p) - Rat(1) / Rat(q * q));
  Interval lhs = Interval::exact(lhs_exact, prec);
  Interval qq = Interval::exact(q, prec);
  Interval pp = Interval::exact(p, prec);
  Interval rhs = Interval::exact(c_287(), prec) * log(qq) / (pp * pp) +
                 Interval::exact(c_2144(), prec);
  CriterionReport rep;
  rep.name = "eq11";
  rep.lhs = lhs.lo();
  rep.rhs = rhs.hi();
  if (rhs.definitely_less(lhs)) {
    rep.holds = false;
    rep.verdict = Verdict::RulesOutException;
  } else if (lhs.definitely_less(rhs) || !(lhs - rhs).contains_zero()) {
    rep.holds = true;
    rep.verdict = Verdict::Inconclusive;
  } else {
    rep.holds = true;
    rep.verdict = Verdict::Inconclusive;
  }
  return rep;
}

CriterionReport decide_mp(long p, long m, std::optional<Real> Kp_low, mpfr_prec_t prec) {
  // hypothesis gates
  if (p < 13 || p % 4 != 1) throw HypothesisNotMet("p must be a prime = 1 mod 4, p >= 13");
  auto fp = trial_factor(Int(p));
  if (fp.factors.size() != 1 || fp.factors[0].second != 1)
    throw HypothesisNotMet("p must be prime");
  Int n = Int(m) * Int(p);
  auto fn = trial_factor(n);
  for (auto& [pr, e] : fn.factors) {
    if (e > 1) throw HypothesisNotMet("n = m p must be square-free");
    if (pr < p) throw HypothesisNotMet("p must be the smallest prime divisor of n");
  }
  if (m <= p) throw HypothesisNotMet("m > p required");
  long d = 2 * p - 2;
  Rat gap = Rat(d) / Rat(p * p) - rho(n);
  if (gap < Rat(4, 5) / Rat(p))
    throw HypothesisNotMet("d/p^2 - rho(n) >= 0.8/p gate failed");

  Real kp(prec);
  if (Kp_low) {
    kp = *Kp_low;
  } else if (p <= 17) {
    kp = K_numeric(static_cast<unsigned>(p), 256).value;
  } else {
    kp = K_lower_bound(static_cast<unsigned>(p), prec).value;
  }
  Interval kpi = Interval::hull(kp, kp);

  // gate (Lemma mp+2): 2 m^2 >= (2C + log 2|a|^{1/2} - log Kp)/hhat for all a;
  // as a bound form: numerator (0.52 + log 2 - log Kp) + t, denominator 2 m^2.
  {
    HhatUpperForm gate;
    gate.denominator = Rat(2) * Rat(m) * Rat(m);
    gate.numerator.c1 = Interval::exact(1L, prec);
    gate.numerator.c0 = Interval::exact(c_052(), prec) + ln_int(2, prec) - log(kpi);
    if (!dominates_on(gate, log(Interval::exact(2L, prec)), std::nullopt, prec, nullptr))
      throw HypothesisNotMet("2 m^2 gate (Lemma mp+2) not established");
  }

  // main (eq:10)-derived bound on hhat:
  //   [ (p^2-1)/4 * 13 log2 + (3/2)(p^2-1) t + d (log2 - log Kp) + d t/2
  //     + 0.52 d + 2 log(mp) + 0.52 w + w t/2 ] / (2 (mp)^2 (d/p^2 - rho))
  long w = static_cast<long>(omega(n));
  HhatUpperForm form;
  form.denominator = Rat(2) * Rat(m * p) * Rat(m * p) * gap;
  form.numerator.c1 = Interval::exact(Rat(3 * (Rat(p) * p - 1)) / 2 + Rat(d) + Rat(w, 2), prec);
  form.numerator.c0 =
      Interval::exact(Rat(Rat(p) * p - 1) / 4, prec) * Interval::exact(13L, prec) * ln_int(2, prec) +
      Interval::exact(d, prec) * (ln_int(2, prec) - log(kpi)) +
      Interval::exact(Rat(c_052()) * d, prec) +
      Interval::exact(2L, prec) * log(Interval::exact(Int(Int(m) * Int(p)), prec)) +
      Interval::exact(Rat(c_052()) * w, prec);

  MarginPoint worst;
  bool out = dominates_on(form, log(Interval::exact(2L, prec)), std::nullopt, prec, &worst);
  CriterionReport rep;
  rep.name = "2mk";
  rep.lhs = worst.valid ? worst.ladder_lo : Real(prec);
  rep.rhs = worst.valid ? worst.bound_hi : Real(prec);
  rep.holds = !out;
  rep.verdict = verdict_of(out);
  return rep;
}

std::vector<ResidualCase> exceptional_residual_list(mpfr_prec_t prec) {
  std::vector<ResidualCase> out;
  for (long p : primes_in(13, 129)) {
    if (p % 4 != 1) continue;
    for (long q : primes_in(p + 1, p + 33)) {
      auto rep = check_eq11(p, q, prec);
      out.push_back({p, q, rep.holds});
    }
  }
  return out;
}

Interval sup_ratio_over_shifted(const Interval& A, const Interval& B, const Interval& c,
                                const Interval& t_lo, std::optional<Interval> t_hi) {
  // (A + B t)/(t - c) is monotone in t where t > c; sup at an endpoint (or
  // the slope limit B as t -> inf)
  Interval v_lo = (A + B * t_lo) / (t_lo - c);
  Interval v_hi = t_hi ? (A + B * *t_hi) / (*t_hi - c) : B;
  Real hi = v_lo.hi() > v_hi.hi() ? v_lo.hi() : v_hi.hi();
  Real lo = v_lo.lo() > v_hi.lo() ? v_lo.lo() : v_hi.lo();
  return Interval::hull(lo, hi);
}

}  // namespace edsp
