#include "psiq/psi_quotient.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>

namespace edsp {

namespace {
std::mutex g_psiq_mutex;
std::map<unsigned, HomogPoly> g_psiq_cache;
}  // namespace

PsiQuotient psi_quotient(unsigned n) {
  if (n < 3) throw InvalidIndex("psi_quotient: n must be >= 3");
  {
    std::lock_guard<std::mutex> lock(g_psiq_mutex);
    auto it = g_psiq_cache.find(n);
    if (it != g_psiq_cache.end()) return {n, it->second};
  }
  HomogPoly num = graded_p(n);
  HomogPoly l = HomogPoly::constant(Int(1));
  for (unsigned q = 2; q <= n; ++q) {
    if (n % q) continue;
    bool prime = q >= 2;
    for (unsigned d = 2; d * d <= q; ++d)
      if (q % d == 0) { prime = false; break; }
    if (!prime) continue;
    l = homog_lcm(l, graded_p(n / q));
  }
  HomogPoly quo;
  try {
    quo = homog_divexact(num, l);
  } catch (const DivisionNotExact&) {
    throw NonExactDivision("psi_quotient: p_n not divisible by lcm of lower p_{n/l}");
  }
  {
    std::lock_guard<std::mutex> lock(g_psiq_mutex);
    g_psiq_cache.emplace(n, quo);
  }
  return {n, quo};
}

XYPair xy_reduce(const Int& u, const Int& v, const Int& a) {
  if (v < 1 || gcd(u, v) != 1) throw NotCoprime();
  if (a == 0) throw std::invalid_argument("xy_reduce: a must be nonzero");
  Int u2 = u * u;
  Int av2 = a * v * v;
  Int g = gcd(u2, av2);
  return {exact_div(u2, g), exact_div(av2, g)};
}

SpecialValueReport special_value_check(unsigned n, uint64_t trial_bound) {
  SpecialValueReport rep;
  rep.n = n;
  HomogPoly q = psi_quotient(n).poly;
  rep.at_1_m1 = q.eval(Int(1), Int(-1));
  rep.at_0_1 = q.eval(Int(0), Int(1));
  Int two_n = Int(2) * Int(n);
  for (const Int& val : {rep.at_1_m1, rep.at_0_1}) {
    if (val == 0) continue;
    auto f = trial_factor(val, trial_bound);
    for (auto& [p, e] : f.factors)
      if (!mpz_divisible_p(two_n.get_mpz_t(), p.get_mpz_t()))
        rep.offending_primes.push_back(p);
    if (!f.complete()) rep.unfactored_cofactor = f.cofactor;
  }
  if (!rep.offending_primes.empty())
    throw LemmaViolated("special_value_check: prime factor not dividing 2n at n=" +
                        std::to_string(n));
  return rep;
}

DivisorBoundReport divisor_bound_check(const EdsSequence& seq, unsigned n) {
  if (n < 3) throw InvalidIndex("divisor_bound_check: n must be >= 3");
  DivisorBoundReport rep;
  rep.n = n;
  const Curve& c = seq.curve();
  if (!c.short_a()) throw std::invalid_argument("divisor_bound_check: short curve required");
  const Int& a = *c.short_a();
  Int u = seq.point().x_num(), v = seq.point().x_den();
  XYPair xy = xy_reduce(u, v, a);
  rep.psi_value = psi_quotient(n).poly.eval(xy.X, xy.Y);
  auto prim = seq.primitive_divisor(n);
  rep.applicable = !prim.has_primitive;
  if (!rep.applicable) return rep;

  // |Psi_n(X,Y)| divides n * g_n^(1/2)
  Int gn = seq.term(n).g;
  Int gn_sqrt = exact_sqrt(gn);
  Int bound = Int(n) * gn_sqrt;
  rep.divides_n_sqrt_gn =
      rep.psi_value != 0 && mpz_divisible_p(bound.get_mpz_t(), Int(abs(rep.psi_value)).get_mpz_t());

  // support in primes dividing 2n, exponents within the improve-5 caps
  Int val = abs(rep.psi_value);
  rep.prime_support_ok = true;
  rep.exponents_ok = true;
  auto f = trial_factor(val, 1'000'000);
  Int two_n = Int(2) * Int(n);
  long n2 = static_cast<long>(n) * n;
  for (auto& [p, e] : f.factors) {
    if (!mpz_divisible_p(two_n.get_mpz_t(), p.get_mpz_t())) {
      rep.prime_support_ok = false;
      continue;
    }
    double cap = (p == 2) ? (75.0 / 4 * n2 - 59) : (45.0 / 4 * n2 - 35);
    if (e > cap) rep.exponents_ok = false;
  }
  if (!f.complete()) rep.prime_support_ok = false;
  return rep;
}

std::vector<ThueHit> thue_box_search(unsigned n, long box, unsigned exponent_cap,
                                     int threads) {
  HomogPoly q = psi_quotient(n).poly;
  
  auto scan_x = [&](long X0, long X1) {
    std::vector<ThueHit> local;
    Int val, xpow;
    for (long X = X0; X < X1; ++X) {
      for (long Y = -box; Y <= box; ++Y) {
        if (X == 0 && Y == 0) continue;
        // quotient by (X,Y) ~ (-X,-Y): keep X > 0, or X == 0 with Y > 0
        if (X == 0 && Y < 0) continue;
        if (gcd(Int(X), Int(Y)) != 1) continue;
        val = q.eval(Int(X), Int(Y));
        if (val == 0) continue;
        Int av = abs(val);
        // power of two iff a single set bit
        if (mpz_popcount(av.get_mpz_t()) != 1) continue;
        unsigned k = static_cast<unsigned>(mpz_sizeinbase(av.get_mpz_t(), 2)) - 1;
        if (k > exponent_cap) continue;
        ThueHit h;
        h.X = X;
        h.Y = Y;
        h.k = k;
        h.trivial = (X == 0) || (Y == 0) || (X == Y) || (X == -Y);
        local.push_back(std::move(h));
      }
    }
    return local;
  };
  std::vector<ThueHit> hits;
  if (threads <= 1) {
    hits = scan_x(0, box + 1);
  } else {
    long span = box + 1;
    long chunk = (span + threads - 1) / threads;
    std::vector<std::future<std::vector<ThueHit>>> futs;
    for (long x0 = 0; x0 < span; x0 += chunk)
      futs.push_back(std::async(std::launch::async, scan_x, x0, std::min(x0 + chunk, span)));
    for (auto& f : futs) {
      auto part = f.get();
      hits.insert(hits.end(), part.begin(), part.end());
    }
    std::sort(hits.begin(), hits.end(), [](const ThueHit& a, const ThueHit& b) {
      if (a.X != b.X) return a.X < b.X;
      return a.Y < b.Y;
    });
  }
  return hits;
}

}  // namespace edsp
