#include "psiq/factor_reconstruct.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>

#include "lattice/lattice.hpp"
#include "psiq/psi_quotient.hpp"

namespace edsp {

namespace {

struct GInt {
  long re, im;
};

// exact Gaussian division; nullopt when den does not divide num
std::optional<GInt> gdiv(GInt num, GInt den) {
  long n = den.re * den.re + den.im * den.im;
  long re = num.re * den.re + num.im * den.im;
  long im = num.im * den.re - num.re * den.im;
  if (re % n || im % n) return std::nullopt;
  return GInt{re / n, im / n};
}

// annihilator type of z = (c + d i)/30: exponents removed from (30) by
// gcd(c + d i, 30) at (1+i), 3, (2+i), (2-i); the split-prime pair is sorted
// so complex-conjugate orbits share a type.
struct AnnType {
  int e2, e3, ea, eb;
  bool operator<(const AnnType& o) const {
    return std::tie(e2, e3, ea, eb) < std::tie(o.e2, o.e3, o.ea, o.eb);
  }
};

AnnType ann_type(long c, long d) {
  GInt z{c, d};
  const std::array<std::pair<GInt, int>, 4> primes{{{{1, 1}, 2}, {{3, 0}, 1}, {{2, 1}, 1}, {{2, -1}, 1}}};
  int ords[4] = {0, 0, 0, 0};
  for (int k = 0; k < 4; ++k) {
    GInt cur = z;
    while (ords[k] < primes[k].second) {
      auto q = gdiv(cur, primes[k].first);
      if (!q) break;
      cur = *q;
      ++ords[k];
    }
    if (ords[k] == primes[k].second) z = cur;  // keep stripping from the reduced value
    else {
      // partial strip still applies
      for (int t = 0; t < ords[k]; ++t) z = *gdiv(z, primes[k].first);
    }
  }
  int sa = 1 - ords[2], sb = 1 - ords[3];
  if (sa > sb) std::swap(sa, sb);
  return {2 - ords[0], 1 - ords[1], sa, sb};
}

long gcd3(long a, long b, long c) {
  return std::gcd(std::gcd(std::abs(a), std::abs(b)), c);
}

std::pair<long, long> canonical_class(long c, long d) {
  // representative of {(c,d), (-c,-d), (-d,c), (d,-c)} mod 30
  auto norm = [](long v) { return ((v % 30) + 30) % 30; };
  std::pair<long, long> best{100, 100};
  std::array<std::pair<long, long>, 4> cands{{{norm(c), norm(d)},
                                              {norm(-c), norm(-d)},
                                              {norm(-d), norm(c)},
                                              {norm(d), norm(-c)}}};
  for (auto& t : cands) best = std::min(best, t);
  return best;
}

Psi30Reconstruction attempt(mpfr_prec_t prec) {
  Psi30Reconstruction out;
  // Laurent-series wp needs enough terms that |z|^(2M) underflows the target:
  // |z|^2 <= 0.4678 for exact-order-30 parameters
  size_t M = static_cast<size_t>(prec / 1.09) + 64;
  auto c = wp_laurent_coeffs(M, prec);
  Real g4 = g4_highprec(prec);
  Real fifteen_g4 = Real::of(15L, prec) * g4;

  auto wp_series = [&](const Complex& z) {
    Complex zz = z * z;
    Complex acc = Complex{Real::of(1L, prec), Real(prec)} / zz;
    Complex zp = zz;
    for (size_t k = 1; k < c.size(); ++k) {
      if (k % 2 == 1 && !c[k].is_zero())
        acc = acc + Complex{zp.re * c[k], zp.im * c[k]};
      zp = zp * zz;
    }
    return acc;
  };

  // group the 144 quadruple classes by annihilator type
  std::map<AnnType, std::vector<Complex>> groups;
  std::map<std::pair<long, long>, bool> seen;
  for (long cc = 0; cc < 30; ++cc)
    for (long dd = 0; dd < 30; ++dd) {
      if (cc == 0 && dd == 0) continue;
      if (gcd3(cc, dd, 30) != 1) continue;  // exact additive order 30
      auto key = canonical_class(cc, dd);
      if (seen[key]) continue;
      seen[key] = true;
      // shift the parameter into the fundamental square around the origin
      double re = key.first / 30.0, im = key.second / 30.0;
      long cshift = key.first - 30 * std::lround(re);
      long dshift = key.second - 30 * std::lround(im);
      Complex zz{Real::of(Rat(Int(cshift), Int(30)), prec),
                 Real::of(Rat(Int(dshift), Int(30)), prec)};
      Complex w = wp_series(zz);
      // T = -wp^2 / (15 G4)
      Complex T = w * w;
      T = Complex{-T.re / fifteen_g4, -T.im / fifteen_g4};
      groups[ann_type(key.first, key.second)].push_back(T);
    }

  // per-group monic product, coefficient rounding, exact verification
  std::vector<ReconstructedFactor> factors;
  for (auto& [type, roots] : groups) {
    std::vector<Complex> poly{Complex{Real::of(1L, prec), Real(prec)}};
    for (auto& r : roots) {
      std::vector<Complex> next(poly.size() + 1, Complex(prec));
      for (size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = next[i + 1] + poly[i];
        next[i] = next[i] - r * poly[i];
      }
      poly = std::move(next);
    }
    int deg = static_cast<int>(roots.size());
    std::vector<Int> coeffs(deg + 1);
    for (int i = 0; i <= deg; ++i) {
      Real re = poly[i].re;
      Real rounded(prec);
      mpfr_round(rounded.raw(), re.raw());
      Real err = abs(re - rounded);
      Real imag = abs(poly[i].im);
      if (err > Real::of_str("0.25", prec) || imag > Real::of_str("0.25", prec)) {
        out.failure_reason = "coefficient rounding ambiguous";
        return out;
      }
      Int v;
      mpfr_get_z(v.get_mpz_t(), rounded.raw(), MPFR_RNDN);
      coeffs[i] = v;
    }
    ReconstructedFactor f;
    f.degree = deg;
    f.poly = HomogPoly(deg, coeffs);
    f.second_coefficient = deg >= 1 ? coeffs[deg - 1] : Int(0);
    factors.push_back(std::move(f));
  }

  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.second_coefficient < b.second_coefficient;
  });

  // exact verification
  HomogPoly prod = HomogPoly::constant(Int(1));
  for (auto& f : factors) prod = prod * f.poly;
  if (!(prod == psi_quotient(30).poly)) {
    out.failure_reason = "exact product mismatch";
    return out;
  }
  out.verified = true;
  out.factors = std::move(factors);
  return out;
}

}  // namespace

Psi30Reconstruction reconstruct_psi30(mpfr_prec_t prec) {
  Psi30Reconstruction r = attempt(prec);
  if (!r.verified) r = attempt(prec * 2);
  return r;
}

}  // namespace edsp
