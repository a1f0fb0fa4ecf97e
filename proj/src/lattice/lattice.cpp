#include "lattice/lattice.hpp"

#include <cmath>
#include <mutex>

namespace edsp {

namespace {

// exact complex rational power w^(-k) accumulation
struct QComplex {
  Rat re{0}, im{0};
  QComplex& operator+=(const QComplex& o) { re += o.re; im += o.im; return *this; }
  QComplex mul(const QComplex& o) const {
    return {Rat(re * o.re - im * o.im), Rat(re * o.im + im * o.re)};
  }
};

QComplex qpow_inv(long a, long b, unsigned k) {
  // (a + bi)^-k
  QComplex w{Rat(a), Rat(b)};
  QComplex acc{Rat(1), Rat(0)};
  for (unsigned i = 0; i < k; ++i) acc = acc.mul(w);
  Rat n = acc.re * acc.re + acc.im * acc.im;
  QComplex inv{acc.re / n, -acc.im / n};
  inv.re.canonicalize();
  inv.im.canonicalize();
  return inv;
}

const std::vector<std::pair<long, long>>& lambda1_points() {
  static const std::vector<std::pair<long, long>> pts = {
      {1, 0}, {-1, 0}, {0, 1}, {0, -1},
      {1, 1}, {1, -1}, {-1, 1}, {-1, -1},
      {2, 0}, {-2, 0}, {0, 2}, {0, -2}};
  return pts;
}

}  // namespace

GaussianRational lambda1_power_sum(unsigned k) {
  if (k == 0) throw std::invalid_argument("lambda1_power_sum: k >= 1");
  QComplex s;
  for (auto [a, b] : lambda1_points()) s += qpow_inv(a, b, k);
  s.re.canonicalize();
  s.im.canonicalize();
  return {s.re, s.im};
}

namespace {

// Sum_{|w| > R} |w|^(-k) <= axes part + integral bound over the quadrants.
Real abs_tail_bound(unsigned k, double radius, mpfr_prec_t prec) {
  if (k < 3) throw std::invalid_argument("abs_tail_bound: k >= 3");
  long m = static_cast<long>(std::floor(radius)) + 1;  // axis indices > R
  Real mr = Real::of(m, prec);
  Real axes(prec);
  // sum_{a >= m} a^-k <= m^-k + m^(1-k)/(k-1)
  {
    Real mk(prec);
    mpfr_pow_si(mk.raw(), mr.raw(), -static_cast<long>(k), MPFR_RNDU);
    Real m1k(prec);
    mpfr_pow_si(m1k.raw(), mr.raw(), 1 - static_cast<long>(k), MPFR_RNDU);
    axes = Real::of(4L, prec) * (mk + m1k / Real::of(static_cast<long>(k - 1), prec));
  }
  // quadrant points: each unit square sits at distance >= R - sqrt(2)
  double rs = radius - std::sqrt(2.0);
  if (rs < 1.0) rs = 1.0;
  Real rsr = Real::of(rs, prec);
  Real pw(prec);
  mpfr_pow_si(pw.raw(), rsr.raw(), 2 - static_cast<long>(k), MPFR_RNDU);
  Real quad = Real::of(2L, prec) * Real::pi(prec) * pw / Real::of(static_cast<long>(k - 2), prec);
  return axes + quad;
}

}  // namespace

TruncatedSum lambda_star_tail(unsigned k, double radius) {
  if (k < 3) throw std::invalid_argument("lambda_star_tail: k >= 3");
  const mpfr_prec_t prec = 192;
  long R = static_cast<long>(radius);
  Real s(prec);
  Real term(prec);
  for (long a = -R; a <= R; ++a)
    for (long b = -R; b <= R; ++b) {
      double n2 = double(a) * a + double(b) * b;
      if (n2 <= 4.0 || n2 > radius * radius) continue;  // Lambda*: |w| > 2
      Int n2i = Int(a) * Int(a) + Int(b) * Int(b);
      Real nn = Real::of(n2i, prec);
      mpfr_pow_si(term.raw(), nn.raw(), -static_cast<long>(k), MPFR_RNDN);
      mpfr_sqrt(term.raw(), term.raw(), MPFR_RNDN);
      if (k % 2 == 0) {
        // |w|^-k = (a^2+b^2)^(-k/2), recompute exactly
        mpfr_pow_si(term.raw(), nn.raw(), -static_cast<long>(k / 2), MPFR_RNDN);
      }
      s += term;
    }
  TruncatedSum out{Complex(prec), abs_tail_bound(k, radius, prec)};
  out.value.re = s;
  return out;
}

TruncatedSum g4_estimate(double radius) {
  const mpfr_prec_t prec = 192;
  // 15 * sum over L\0 of w^-4, folded to one quadrant: every w != 0 is
  // uniquely i^t (a + bi) with a >= 1, b >= 0, and w^-4 is i-invariant.
  // Re[(a+bi)^-4] summed; Im cancels pairwise under (a,b) <-> (b,a), but is
  // accumulated anyway and folded into the reported interval.
  long R = static_cast<long>(radius);
  double R2 = radius * radius;
  // Kahan-compensated double accumulation with exact int64 numerators;
  // per-term relative rounding <= 4 ulp, folded into the tail bound.
  double sum_re = 0.0, comp_re = 0.0;
  double sum_im = 0.0, comp_im = 0.0;
  double abs_acc = 0.0;
  for (long a = 1; a <= R; ++a) {
    for (long b = 0; b * b <= R2 - a * a; ++b) {
      // (a+bi)^4 = (a^4 - 6 a^2 b^2 + b^4) + (4 a^3 b - 4 a b^3) i
      long double a2 = static_cast<long double>(a) * a;
      long double b2 = static_cast<long double>(b) * b;
      long double n = a2 + b2;
      long double n4 = n * n * n * n;
      long double num_re = a2 * a2 - 6 * a2 * b2 + b2 * b2;
      long double num_im = 4 * (a2 * a - b2 * b) * -1.0L;  // Im[(a+bi)^-4] = -Im[(a+bi)^4]/n^4 with care
      // Im[(a+bi)^4] = 4a^3 b - 4 a b^3
      num_im = -(4.0L * a * b * (a2 - b2));
      double t_re = static_cast<double>(num_re / n4);
      double t_im = static_cast<double>(num_im / n4);
      double y = t_re - comp_re, t = sum_re + y;
      comp_re = (t - sum_re) - y;
      sum_re = t;
      y = t_im - comp_im;
      t = sum_im + y;
      comp_im = (t - sum_im) - y;
      sum_im = t;
      abs_acc += std::abs(t_re) + std::abs(t_im);
    }
  }
  const mpfr_prec_t p = prec;
  Real v(p);
  mpfr_set_d(v.raw(), 4.0 * sum_re, MPFR_RNDN);
  Real vi(p);
  mpfr_set_d(vi.raw(), 4.0 * sum_im, MPFR_RNDN);
  Real tail = abs_tail_bound(4, radius, p);
  // rounding slack: ~4 ulp per term plus Kahan residue, generously 1e-13 * |terms|
  Real slack = Real::of(abs_acc * 4.0 * 1e-15 + 1e-30, p);
  TruncatedSum out{Complex(p), Real(p)};
  out.value.re = Real::of(15L, p) * v;
  out.value.im = Real::of(15L, p) * vi;
  out.tail_bound = Real::of(15L, p) * (tail + slack);
  return out;
}

Real g4_highprec(mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 64;
  // E4(i) = 1 + 240 sum sigma3(n) q^n at q = e^(-2 pi)
  Real q(wp);
  mpfr_const_pi(q.raw(), MPFR_RNDN);
  mpfr_mul_si(q.raw(), q.raw(), -2, MPFR_RNDN);
  mpfr_exp(q.raw(), q.raw(), MPFR_RNDN);
  size_t N = static_cast<size_t>(wp * 0.6931 / (2 * 3.14159) + 32);
  std::vector<Int> sigma3(N + 1, Int(0));
  for (size_t d = 1; d <= N; ++d) {
    Int d3 = Int(static_cast<long>(d));
    d3 = d3 * d3 * d3;
    for (size_t n = d; n <= N; n += d) sigma3[n] += d3;
  }
  Real qn = q;
  Real s(wp);
  for (size_t n = 1; n <= N; ++n) {
    s += Real::of(sigma3[n], wp) * qn;
    qn *= q;
  }
  Real e4 = Real::of(1L, wp) + Real::of(240L, wp) * s;
  // zeta(4) = pi^4 / 90
  Real pi = Real::pi(wp);
  Real pi4 = pi * pi * pi * pi;
  Real g4 = Real::of(2L, wp) * (pi4 / Real::of(90L, wp)) * e4;
  // cross-check: E4(i) = 3 Gamma(1/4)^8 / (2 pi)^6
  Real g14(wp);
  mpfr_set_d(g14.raw(), 0.25, MPFR_RNDN);
  mpfr_gamma(g14.raw(), g14.raw(), MPFR_RNDN);
  Real g8 = g14;
  for (int i = 0; i < 7; ++i) g8 *= g14;
  Real twopi = Real::of(2L, wp) * pi;
  Real tp6 = twopi;
  for (int i = 0; i < 5; ++i) tp6 *= twopi;
  Real e4_gamma = Real::of(3L, wp) * g8 / tp6;
  Real diff = abs(e4 - e4_gamma);
  Real tol(wp);
  mpfr_set_ui_2exp(tol.raw(), 1, -static_cast<long>(prec) + 8, MPFR_RNDN);
  if (diff > tol)
    throw std::logic_error("g4_highprec: q-series and Gamma(1/4) routes disagree");
  return g4;
}

std::vector<Real> wp_laurent_coeffs(size_t count, mpfr_prec_t prec) {
  static std::mutex mu;
  static std::vector<Real> cache;
  static mpfr_prec_t cache_prec = 0;
  std::lock_guard<std::mutex> lock(mu);
  if (cache_prec >= prec && cache.size() >= count)
    return {cache.begin(), cache.begin() + count};
  std::vector<Real> c;
  c.reserve(count);
  Real g4 = g4_highprec(prec);
  c.push_back(Real(prec));          // c_0 unused
  if (count > 1) c.push_back(Real::of(3L, prec) * g4);  // c_1 = 3 G4
  if (count > 2) c.push_back(Real(prec));               // c_2 = 5 G6 = 0
  for (size_t k = 3; k < count; ++k) {
    Real s(prec);
    for (size_t i = 1; i + 1 < k; ++i) s += c[i] * c[k - 1 - i];
    Real den = Real::of(static_cast<long>((2 * k + 3) * (k - 2)), prec);
    c.push_back(Real::of(3L, prec) * s / den);
  }
  cache = c;
  cache_prec = prec;
  return c;
}

namespace {

bool near_lattice_point(const Complex& z, double eps = 1e-12) {
  double re = z.re.to_double(), im = z.im.to_double();
  return std::abs(re - std::round(re)) < eps && std::abs(im - std::round(im)) < eps;
}

// partial sums S_{4j}(<=R) of w^(-4j) over 0 < |w| <= R for j = 1..J, plus a
// user-supplied per-point accumulation.
template <typename F>
std::vector<Real> lattice_scan(double radius, unsigned J, mpfr_prec_t prec, F&& per_point) {
  long R = static_cast<long>(radius);
  double R2 = radius * radius;
  std::vector<Complex> s4(J + 1, Complex(prec));
  for (long a = 1; a <= R; ++a)
    for (long b = 0; b * b <= R2 - double(a) * a; ++b) {
      // quadruple representative a >= 1, b >= 0
      Complex w = Complex::of(double(a), double(b), prec);
      per_point(w);
      // w^-4 exactly: 1 / (a+bi)^4 with integer (a+bi)^4
      Int are = Int(a), bim = Int(b);
      Int re4 = are * are * are * are - 6 * are * are * bim * bim + bim * bim * bim * bim;
      Int im4 = 4 * are * bim * (are * are - bim * bim);
      Int n2 = are * are + bim * bim;
      Int n8;
      mpz_pow_ui(n8.get_mpz_t(), n2.get_mpz_t(), 4);
      Int nim4 = -im4;
      Complex w4inv{Real::of(re4, prec) / Real::of(n8, prec),
                    Real::of(nim4, prec) / Real::of(n8, prec)};
      Complex acc = w4inv;
      for (unsigned j = 1; j <= J; ++j) {
        s4[j] = s4[j] + acc;
        if (j < J) acc = acc * w4inv;
      }
    }
  // fold rotation classes: sum over full lattice of w^-4j = 4 * quadrant sum
  std::vector<Real> out;
  out.reserve(J + 1);
  out.push_back(Real(prec));
  for (unsigned j = 1; j <= J; ++j) {
    out.push_back(Real::of(4L, prec) * s4[j].re);
    // imaginary parts cancel under (a,b) <-> (b,a); ignore (checked tiny in tests)
  }
  return out;
}

// G_{4j} for j = 1..J from the Laurent coefficients: c_k = (2k+1) G_{2k+2},
// so G_{4j} = c_{2j-1} / (4j - 1).
std::vector<Real> eisenstein_g4j(unsigned J, mpfr_prec_t prec) {
  auto c = wp_laurent_coeffs(2 * J + 1, prec);
  std::vector<Real> g(J + 1, Real(prec));
  for (unsigned j = 1; j <= J; ++j)
    g[j] = c[2 * j - 1] / Real::of(static_cast<long>(4 * j - 1), prec);
  return g;
}

}  // namespace

TruncatedSum sigma_eval(const Complex& z, double radius, mpfr_prec_t prec) {
  if (near_lattice_point(z)) throw PoleAtLatticePoint();
  const unsigned J = 8;
  // prod over quadruples {w, iw, -w, -iw}: factors and exponentials collapse
  // to (1 - z^4 / w^4)
  Complex z2 = z * z;
  Complex z4 = z2 * z2;
  Complex prod{Real::of(1L, prec), Real(prec)};
  auto g = eisenstein_g4j(J, prec);
  auto s4R = lattice_scan(radius, J, prec, [&](const Complex& w) {
    Complex w2 = w * w;
    Complex w4 = w2 * w2;
    prod = prod * (Complex{Real::of(1L, prec), Real(prec)} - z4 / w4);
  });
  // tail correction: log prod_{|w|>R} = -sum_{j>=1} z^{4j}/(4j) S_{4j}(>R)
  Complex T(prec);
  Complex z4j = z4;
  for (unsigned j = 1; j <= J; ++j) {
    Real s_tail = g[j] - s4R[j];
    T = T + Complex{z4j.re * s_tail, z4j.im * s_tail} / Complex{Real::of(static_cast<long>(4 * j), prec), Real(prec)};
    z4j = z4j * z4;
  }
  Complex corr = cexp(Complex{-T.re, -T.im});
  Complex val = z * prod * corr;
  // remainder over j > J: |z|^(4j)/(4j) * S_abs_{4j}(>R), geometric in (|z|/rs)^4
  Real za = z.abs();
  Real rs = Real::of(std::max(radius - 1.5, 1.0), prec);
  Real ratio = za / rs;
  Real r4 = ratio * ratio * ratio * ratio;
  Real zpow(prec);
  mpfr_pow_ui(zpow.raw(), za.raw(), 4 * (J + 1), MPFR_RNDU);
  Real s_abs = abs_tail_bound(4 * (J + 1), radius, prec);
  Real rem = zpow * s_abs / (Real::of(1L, prec) - r4) / Real::of(static_cast<long>(4 * (J + 1)), prec);
  // |sigma| * (e^rem - 1) bounds the multiplicative remainder; linearize with margin
  Real tail = val.abs() * rem * Real::of(3L, prec) + Real::of(1e-200, prec);
  // fold in coarse rounding slack
  Real ulp(prec);
  mpfr_set_ui_2exp(ulp.raw(), 1, -static_cast<long>(prec) + 24, MPFR_RNDN);
  tail += val.abs() * ulp * Real::of(radius * radius, prec);
  return {val, tail};
}

TruncatedSum wp_eval(const Complex& z, double radius, mpfr_prec_t prec) {
  if (near_lattice_point(z)) throw PoleAtLatticePoint();
  const unsigned J = 8;
  Complex one{Real::of(1L, prec), Real(prec)};
  Complex acc = one / (z * z);
  auto g = eisenstein_g4j(J, prec);
  auto s4R = lattice_scan(radius, J, prec, [&](const Complex& w) {
    // full quadruple u*w for u in {1, i, -1, -i}
    const Complex iu{Real(prec), Real::of(1L, prec)};
    Complex wu = w;
    for (int t = 0; t < 4; ++t) {
      Complex d = z - wu;
      acc = acc + one / (d * d) - one / (wu * wu);
      wu = wu * iu;
    }
  });
  // tail: sum_{|w|>R} [(z-w)^-2 - w^-2] = sum_{j>=1} (4j-1) z^{4j-2} S_{4j}(>R)
  Complex z2 = z * z;
  Complex z4 = z2 * z2;
  Complex zp = z2;  // z^{4j-2} starting j=1
  for (unsigned j = 1; j <= J; ++j) {
    Real s_tail = g[j] - s4R[j];
    Real f = Real::of(static_cast<long>(4 * j - 1), prec) * s_tail;
    acc = acc + Complex{zp.re * f, zp.im * f};
    zp = zp * z4;
  }
  Real za = z.abs();
  Real rs = Real::of(std::max(radius - 1.5, 1.0), prec);
  Real ratio = za / rs;
  Real r4 = ratio * ratio * ratio * ratio;
  Real zpow(prec);
  mpfr_pow_ui(zpow.raw(), za.raw(), 4 * (J + 1) - 2, MPFR_RNDU);
  Real s_abs = abs_tail_bound(4 * (J + 1), radius, prec);
  Real rem = Real::of(static_cast<long>(4 * (J + 1) - 1), prec) * zpow * s_abs /
             (Real::of(1L, prec) - r4);
  Real ulp(prec);
  mpfr_set_ui_2exp(ulp.raw(), 1, -static_cast<long>(prec) + 24, MPFR_RNDN);
  Real tail = rem + (acc.abs() + Real::of(1L, prec)) * ulp * Real::of(radius * radius, prec);
  return {acc, tail};
}

Complex eta_quasi(bool imaginary_period, double radius, mpfr_prec_t prec) {
  // zeta_w(z) = 1/z + sum' [1/(z-w) + 1/w + z/w^2]; eta = 2 zeta_w(w0/2)
  Complex z = imaginary_period ? Complex{Real(prec), Real::of_str("0.5", prec)}
                               : Complex{Real::of_str("0.5", prec), Real(prec)};
  const unsigned J = 8;
  Complex one{Real::of(1L, prec), Real(prec)};
  Complex acc = one / z;
  auto g = eisenstein_g4j(J, prec);
  auto s4R = lattice_scan(radius, J, prec, [&](const Complex& w) {
    const Complex iu{Real(prec), Real::of(1L, prec)};
    Complex wu = w;
    for (int t = 0; t < 4; ++t) {
      acc = acc + one / (z - wu) + one / wu + z / (wu * wu);
      wu = wu * iu;
    }
  });
  // tail: sum_{|w|>R} = - sum_{j>=1} z^{4j-1} S_{4j}(>R)
  Complex z2 = z * z;
  Complex z4 = z2 * z2;
  Complex zp = z * z2;  // z^{4j-1} at j=1
  for (unsigned j = 1; j <= J; ++j) {
    Real s_tail = g[j] - s4R[j];
    acc = acc - Complex{zp.re * s_tail, zp.im * s_tail};
    zp = zp * z4;
  }
  return acc * Complex{Real::of(2L, prec), Real(prec)};
}

}  // namespace edsp
