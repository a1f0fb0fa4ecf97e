// Quotient polynomials Psi_n = p_n / lcm_{l|n prime} p_{n/l} in the (X, Y) =
// (x^2, a) grading, the coprime (X, Y) reduction of a point, special-value
// divisibility checks, and the bounded Thue-style box search.
#pragma once

#include <optional>
#include <vector>

#include "divpoly/polyops.hpp"
#include "eds/eds.hpp"

namespace edsp {

struct NonExactDivision : std::logic_error {
  explicit NonExactDivision(const char* w) : std::logic_error(w) {}
};
struct LemmaViolated : std::runtime_error {
  explicit LemmaViolated(const std::string& w) : std::runtime_error(w) {}
};

struct PsiQuotient {
  unsigned n = 0;
  HomogPoly poly;  // homogeneous in (X, Y)
};

// n >= 3; cached internally.
PsiQuotient psi_quotient(unsigned n);

struct XYPair {
  Int X, Y;  // coprime; X = u^2/(u^2, a v^2), Y = a v^2 / (u^2, a v^2)
};
XYPair xy_reduce(const Int& u, const Int& v, const Int& a);

struct SpecialValueReport {
  unsigned n = 0;
  Int at_1_m1;  // Psi_n(1, -1)
  Int at_0_1;   // Psi_n(0, 1)
  std::vector<Int> offending_primes;  // primes found that do not divide 2n
  std::optional<Int> unfactored_cofactor;  // beyond the trial bound, if any
  bool ok() const { return offending_primes.empty(); }
};
// Factors Psi_n(1,-1) and Psi_n(0,1) by trial division; every prime factor
// must divide 2n. Throws LemmaViolated when a counterexample is found.
SpecialValueReport special_value_check(unsigned n, uint64_t trial_bound = 1'000'000);

struct DivisorBoundReport {
  unsigned n = 0;
  bool applicable = false;     // B_n has no primitive divisor (lemma hypothesis)
  Int psi_value;               // Psi_n(X, Y) at the reduced point
  bool divides_n_sqrt_gn = false;
  bool prime_support_ok = false;   // support within primes dividing 2n
  bool exponents_ok = false;       // within alpha_2 <= 75/4 n^2 - 59, alpha_l <= 45/4 n^2 - 35
};
// Report-only for points whose B_n has a primitive divisor.
DivisorBoundReport divisor_bound_check(const EdsSequence& seq, unsigned n);

struct ThueHit {
  Int X, Y;
  unsigned k = 0;   // |Psi_n(X,Y)| = 2^k
  bool trivial = false;  // X = 0, Y = 0, or X = +-Y
};
// Enumerates coprime |X|, |Y| <= box (up to overall sign) and collects pairs
// with Psi_n(X, Y) = +-2^k, k <= exponent_cap. Deterministic order (X, Y)
// regardless of thread count.
std::vector<ThueHit> thue_box_search(unsigned n, long box, unsigned exponent_cap,
                                     int threads = 1);

}  // namespace edsp
