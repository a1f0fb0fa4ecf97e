#include "eds/eds.hpp"

namespace edsp {

EdsSequence::EdsSequence(Curve c, CurvePoint p)
    : curve_(std::move(c)), point_(std::move(p)) {
  curve_.require_on_curve(point_);
  if (curve_.is_torsion(point_)) throw TorsionPoint();
  u_ = point_.x_num();
  v_ = point_.x_den();
}

EdsTerm EdsSequence::term(unsigned n) const {
  if (n == 0) throw InvalidIndex("eds term: n must be >= 1");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = memo_.find(n);
  if (it != memo_.end()) return it->second;
  EdsTerm t = compute_term(n);
  memo_.emplace(n, t);
  return t;
}

EdsTerm EdsSequence::compute_term(unsigned n) const {
  EdsTerm t;
  t.n = n;
  CurvePoint q = curve_.scalar_mul(n, point_);
  if (q.is_infinity()) throw TorsionPoint();
  t.A = q.x_num();
  t.B = q.x_den();
  if (curve_.short_a()) {
    const Int& a = *curve_.short_a();
    auto ev = homog_eval_range(n, a, u_, v_);
    Int num = ev[n].phi;
    Int den = v_ * ev[n].psi_sq;
    t.g = gcd(num, den);
    // x(nP) = phi_n(u,v) / (v psi_n^2(u,v)); den > 0 for points off 2-torsion
    if (den <= 0 || t.A * (den / t.g) != t.B * (num / t.g)) throw InconsistentRoutes();
    if (n <= 12 && (t.A != num / t.g || t.B != den / t.g)) throw InconsistentRoutes();
  } else {
    t.g = 0;
  }
  return t;
}

int EdsSequence::delta() const {
  auto inst = [&](unsigned n) -> int {
    // n odd: |A_n B_2 - A_2 B_n|^2 = 4^delta B_{n+2} B_{|n-2|}
    EdsTerm tn = term(n), t2 = term(2);
    Int lhs = tn.A * t2.B - t2.A * tn.B;
    lhs = lhs * lhs;
    Int rhs = B(n + 2) * B(n >= 2 ? n - 2 : 2 - n);
    if (lhs == rhs) return 0;
    if (lhs == 4 * rhs) return 1;
    throw InconsistentDelta();
  };
  int d = inst(1);
  if (inst(3) != d || inst(5) != d) throw InconsistentDelta();
  return d;
}

Int EdsSequence::gn_closed_form(unsigned n) const {
  if (n == 0) throw InvalidIndex("gn_closed_form: n must be >= 1");
  if (n % 4 == 0) throw UnsupportedIndex("gn_closed_form: n = 0 mod 4 not covered");
  Int g2 = term(2).g;
  if (n % 2 == 1) {
    Int base = (Int(1) << delta()) * g2;
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), (n * n - 1) / 4);
    return r;
  }
  Int g4 = term(4).g;
  Int r;
  mpz_pow_ui(r.get_mpz_t(), g4.get_mpz_t(), (n * n - 4) / 16);
  return g2 * r;
}

PrimDivReport EdsSequence::primitive_divisor(unsigned n, uint64_t trial_bound) const {
  if (n == 0) throw InvalidIndex("primitive_divisor: n must be >= 1");
  PrimDivReport rep;
  rep.n = n;
  Int s = B(n);
  for (unsigned k = 1; k < n && s > 1; ++k) {
    Int bk = B(k);
    Int g = gcd(s, bk);
    while (g > 1) {
      s = exact_div(s, g);
      g = gcd(s, bk);
    }
  }
  rep.stripped_cofactor = s;
  rep.has_primitive = s > 1;
  if (rep.has_primitive)
    rep.witness = smallest_prime_factor(s, trial_bound);
  return rep;
}

EdsSequence::XRatioReport EdsSequence::lemma_x_ratio() const {
  XRatioReport r;
  Rat num = Rat(B(30)) * Rat(B(5)) * Rat(B(3)) * Rat(B(2));
  Rat den = Rat(B(1)) * Rat(B(15)) * Rat(B(10)) * Rat(B(6));
  r.z = num / den;
  r.z.canonicalize();
  r.is_integer = r.z.get_den() == 1;
  r.divides_900 = r.is_integer && r.z.get_num() != 0 &&
                  mpz_divisible_p(Int(900).get_mpz_t(), r.z.get_num().get_mpz_t());
  return r;
}

RadicalReduction radical_reduce(const Curve& c, const CurvePoint& p, unsigned n) {
  if (n <= 1) throw InvalidIndex("radical_reduce: n must be > 1");
  RadicalReduction out;
  out.r = radical(Int(n));
  unsigned long cof = mpz_get_ui(Int(Int(n) / out.r).get_mpz_t());
  out.reduced_point = c.scalar_mul(cof, p);
  return out;
}

}  // namespace edsp
