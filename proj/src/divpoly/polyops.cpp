#include "divpoly/polyops.hpp"

namespace edsp {

Int content(const IntPoly& p) {
  Int g(0);
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Int c = content(p);
  if (p.leading() < 0) c = -c;
  return p.divexact_scalar(c);
}

IntPoly divexact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw DivisionNotExact("divexact: zero divisor");
  if (num.is_zero()) return IntPoly();
  if (num.degree() < den.degree()) throw DivisionNotExact("divexact: degree underflow");
  std::vector<Int> rem(num.coeffs());
  int dq = num.degree() - den.degree();
  std::vector<Int> q(dq + 1, Int(0));
  const Int& lead = den.leading();
  for (int k = dq; k >= 0; --k) {
    Int& top = rem[k + den.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw DivisionNotExact("divexact: leading coefficient does not divide");
    Int f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    q[k] = f;
    for (int i = 0; i <= den.degree(); ++i) rem[k + i] -= f * den[i];
  }
  for (const auto& r : rem)
    if (r != 0) throw DivisionNotExact("divexact: nonzero remainder");
  return IntPoly(std::move(q));
}

IntPoly poly_pseudo_rem(const IntPoly& a, const IntPoly& b) {
  // Repeated fraction-free reduction: r <- lc(b)*r - lead(r)*x^shift*b.
  // Result is a scalar multiple of rem(a, b); primitive PRS strips the
  // content afterwards, so the exact lc(b) power does not matter.
  if (b.is_zero()) throw DivisionNotExact("poly_pseudo_rem: zero divisor");
  IntPoly r = a;
  int db = b.degree();
  const Int& lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    Int top = r.leading();
    int shift = r.degree() - db;
    std::vector<Int> nr(r.coeffs());
    for (auto& c : nr) c *= lb;
    for (int i = 0; i <= db; ++i) nr[shift + i] -= top * b[i];
    r = IntPoly(std::move(nr));
  }
  return r;
}

namespace {

// primitive PRS gcd core; a, b nonzero
IntPoly gcd_prs(IntPoly a, IntPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = poly_pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  return gcd_prs(a, b);
}

IntPoly poly_lcm(const IntPoly& a, const IntPoly& b) {
  // Z[x]-lcm: integer lcm of the contents times the primitive lcm of the
  // primitive parts, positive leading coefficient.
  if (a.is_zero() || b.is_zero()) return IntPoly();
  IntPoly g = poly_gcd(a, b);
  IntPoly pl = primitive_part(divexact(a * b, g));
  Int cl = lcm(content(a), content(b));
  std::vector<Int> r(pl.coeffs());
  for (auto& v : r) v *= cl;
  return IntPoly(std::move(r));
}

namespace {

// HomogPoly of degree d = X^ax Y^ay * Q(X,Y) with Q(T,1) having nonzero
// constant term; record (ax, ay, q) with q univariate in T.
struct Dehomog {
  int ax = 0, ay = 0;
  IntPoly q;
};

Dehomog dehomog(const HomogPoly& h) {
  Dehomog d;
  const auto& c = h.coeffs();
  int n = h.degree();
  int lo = 0;
  while (lo <= n && c[lo] == 0) ++lo;  // X-adic valuation
  int hi = n;
  while (hi >= 0 && c[hi] == 0) --hi;  // degree in X
  if (hi < lo) { d.q = IntPoly(); return d; }
  d.ax = lo;
  d.ay = n - hi;
  std::vector<Int> q(c.begin() + lo, c.begin() + hi + 1);
  d.q = IntPoly(std::move(q));
  return d;
}

HomogPoly rehomog(int ax, int ay, const IntPoly& q) {
  int d = ax + ay + q.degree();
  std::vector<Int> c(d + 1, Int(0));
  for (int i = 0; i <= q.degree(); ++i) c[ax + i] = q[i];
  return HomogPoly(d, std::move(c));
}

}  // namespace

HomogPoly homog_gcd(const HomogPoly& a, const HomogPoly& b) {
  Dehomog da = dehomog(a), db = dehomog(b);
  if (da.q.is_zero()) return b;
  if (db.q.is_zero()) return a;
  IntPoly g = poly_gcd(da.q, db.q);
  return rehomog(std::min(da.ax, db.ax), std::min(da.ay, db.ay), g);
}

HomogPoly homog_lcm(const HomogPoly& a, const HomogPoly& b) {
  Dehomog da = dehomog(a), db = dehomog(b);
  if (da.q.is_zero() || db.q.is_zero()) return HomogPoly::constant(Int(0));
  IntPoly l = poly_lcm(da.q, db.q);
  return rehomog(std::max(da.ax, db.ax), std::max(da.ay, db.ay), l);
}

HomogPoly homog_divexact(const HomogPoly& num, const HomogPoly& den) {
  Dehomog dn = dehomog(num), dd = dehomog(den);
  if (dd.q.is_zero()) throw DivisionNotExact("homog_divexact: zero divisor");
  if (dn.q.is_zero()) return HomogPoly::constant(Int(0));
  if (dn.ax < dd.ax || dn.ay < dd.ay)
    throw DivisionNotExact("homog_divexact: monomial factor does not divide");
  IntPoly q = divexact(dn.q, dd.q);
  return rehomog(dn.ax - dd.ax, dn.ay - dd.ay, q);
}

}  // namespace edsp
