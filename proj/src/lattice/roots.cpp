#include "lattice/roots.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace edsp {

namespace {

Complex horner(const std::vector<Complex>& coeffs, const Complex& x) {
  Complex acc = coeffs.back();
  for (size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

double log2_abs(const Int& v) {
  if (v == 0) return -1e9;
  return static_cast<double>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

// Fujiwara bound: every root satisfies |x| <= 2 max_i |c_i / c_d|^(1/(d-i)).
double root_bound(const IntPoly& p) {
  int d = p.degree();
  double ld = log2_abs(p[d]);
  double best = 0.25;
  for (int i = 0; i < d; ++i) {
    if (p[i] == 0) continue;
    double e = (log2_abs(p[i]) - ld) / double(d - i);
    best = std::max(best, e);
  }
  return 2.0 * std::pow(2.0, best);
}

// rigorous upper bound on |p(x)| by interval Horner
Real horner_abs_upper(const IntPoly& p, const Complex& x, mpfr_prec_t prec) {
  Interval re = Interval::exact(p[p.degree()], prec);
  Interval im = Interval::exact(0L, prec);
  Interval xr = Interval::hull(x.re, x.re);
  Interval xi = Interval::hull(x.im, x.im);
  for (int i = p.degree() - 1; i >= 0; --i) {
    Interval nre = re * xr - im * xi + Interval::exact(p[i], prec);
    Interval nim = re * xi + im * xr;
    re = nre;
    im = nim;
  }
  Real mr = abs(re).hi();
  Real mi = abs(im).hi();
  Real h(prec);
  mpfr_hypot(h.raw(), mr.raw(), mi.raw(), MPFR_RNDU);
  return h;
}

}  // namespace

std::vector<CertifiedRoot> aberth_roots(const IntPoly& p, mpfr_prec_t prec, int max_iter) {
  int d = p.degree();
  if (d < 1) return {};
  double rad = root_bound(p);
  double coef_bits = 0;
  for (int i = 0; i <= d; ++i) coef_bits = std::max(coef_bits, log2_abs(p[i]));
  // working precision absorbs Horner cancellation: coefficient size plus
  // deg * log2 of the evaluation range
  mpfr_prec_t wprec = static_cast<mpfr_prec_t>(
      prec + coef_bits + d * std::log2(2.0 + rad) + 64);

  std::vector<Complex> cc, dc;
  cc.reserve(d + 1);
  for (int i = 0; i <= d; ++i) cc.push_back(Complex{Real::of(p[i], wprec), Real(wprec)});
  for (int i = 1; i <= d; ++i) {
    Int ci = p[i] * i;
    dc.push_back(Complex{Real::of(ci, wprec), Real(wprec)});
  }

  std::vector<Complex> x;
  x.reserve(d);
  for (int i = 0; i < d; ++i) {
    double th = 2.0 * M_PI * i / d + 0.39;
    x.push_back(Complex::of(0.6 * rad * std::cos(th), 0.6 * rad * std::sin(th), wprec));
  }

  Real eps(wprec);
  mpfr_set_ui_2exp(eps.raw(), 1, -static_cast<long>(prec), MPFR_RNDN);
  const Complex one{Real::of(1L, wprec), Real(wprec)};
  bool converged = false;
  for (int iter = 0; iter < max_iter && !converged; ++iter) {
    converged = true;
    for (int i = 0; i < d; ++i) {
      Complex pv = horner(cc, x[i]);
      Complex dv = horner(dc, x[i]);
      if (dv.norm2().is_zero()) {
        x[i] = x[i] + Complex::of(1e-3, 1e-3, wprec);
        converged = false;
        continue;
      }
      Complex newton = pv / dv;
      Complex s(wprec);
      for (int j = 0; j < d; ++j)
        if (j != i) s = s + one / (x[i] - x[j]);
      Complex denom = one - newton * s;
      if (denom.norm2().is_zero()) continue;
      Complex corr = newton / denom;
      x[i] = x[i] - corr;
      Real scale = x[i].abs() + Real::of(1L, wprec);
      if (corr.abs() > eps * scale) converged = false;
    }
  }
  if (!converged) throw RootFindingFailed("aberth: no convergence");

  // certified radii: d * |p(x_i)|_hi / (|lc| * prod_{j != i} |x_i - x_j|_lo)
  std::vector<CertifiedRoot> out;
  out.reserve(d);
  Real lc = abs(Real::of(p[d], wprec));
  for (int i = 0; i < d; ++i) {
    Real prodd = Real::of(1L, wprec);
    for (int j = 0; j < d; ++j)
      if (j != i) prodd *= (x[i] - x[j]).abs();
    Real pv = horner_abs_upper(p, x[i], wprec);
    Real r = Real::of(static_cast<long>(d), wprec) * pv / (lc * prodd);
    out.push_back({x[i], r});
  }
  return out;
}

std::vector<CertifiedRoot> torsion_x_roots(unsigned n, const Int& a, mpfr_prec_t prec) {
  if (n < 2) throw InvalidIndex("torsion_x_roots: n >= 2");
  std::vector<CertifiedRoot> roots;
  if (n >= 3) roots = aberth_roots(psi(n, a), prec);
  if (n % 2 == 0) {
    // 2-torsion x-coordinates: roots of x^3 + a x = x (x^2 + a)
    Real z(prec);
    roots.push_back({Complex{z, z}, Real(prec)});
    Real sq = sqrt(abs(Real::of(a, prec)));
    if (a < 0) {
      roots.push_back({Complex{sq, Real(prec)}, Real(prec)});
      roots.push_back({Complex{-sq, Real(prec)}, Real(prec)});
    } else {
      roots.push_back({Complex{Real(prec), sq}, Real(prec)});
      roots.push_back({Complex{Real(prec), -sq}, Real(prec)});
    }
  }
  return roots;
}

SeparationConstant K_numeric(unsigned n, mpfr_prec_t prec) {
  if (n < 2 || n > 17) throw InvalidIndex("K_numeric: 2 <= n <= 17");
  static std::mutex mu;
  static std::map<std::pair<unsigned, mpfr_prec_t>, SeparationConstant> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, prec});
    if (it != cache.end()) return it->second;
  }
  auto roots = torsion_x_roots(n, Int(1), prec);
  Real best(prec);
  bool first = true;
  Real tiny = Real::of(1e-30, prec);
  for (size_t i = 0; i < roots.size(); ++i) {
    for (size_t j = i + 1; j < roots.size(); ++j) {
      Real d = (roots[i].value - roots[j].value).abs() - roots[i].radius - roots[j].radius;
      if (first || d < best) { best = d; first = false; }
      Real mi = roots[i].value.abs(), mj = roots[j].value.abs();
      if (mi > tiny && mj > tiny) {
        Complex inv_i = Complex{Real::of(1L, prec), Real(prec)} / roots[i].value;
        Complex inv_j = Complex{Real::of(1L, prec), Real(prec)} / roots[j].value;
        // |1/x - 1/x'| error <= r / (|x| (|x| - r)) per coordinate
        Real ei = roots[i].radius / (mi * (mi - roots[i].radius));
        Real ej = roots[j].radius / (mj * (mj - roots[j].radius));
        Real d2 = (inv_i - inv_j).abs() - ei - ej;
        if (d2 < best) best = d2;
      }
    }
  }
  SeparationConstant out{n, best, SeparationMethod::NumericRoots};
  {
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(n, prec), out);
  }
  return out;
}

SeparationConstant K_lower_bound(unsigned n, mpfr_prec_t prec) {
  if (n < 2) throw InvalidIndex("K_lower_bound: n >= 2");
  Real den = Real::of_str("2.5e36", prec);
  Real n6 = Real::of(static_cast<long>(n), prec);
  Real p = n6;
  for (int i = 0; i < 5; ++i) p *= n6;
  Real v(prec);
  mpfr_ui_div(v.raw(), 1, (den * p).raw(), MPFR_RNDD);
  return {n, v, SeparationMethod::PaperBound};
}

}  // namespace edsp
