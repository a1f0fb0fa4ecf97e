// Small integer-arithmetic helpers shared across modules.
#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <vector>

namespace edsp {

using Int = mpz_class;
using Rat = mpq_class;

// Product of the distinct primes dividing n (n >= 1).
Int radical(const Int& n);

// Distinct prime factors found by trial division up to `bound`; if a cofactor
// > 1 remains it is appended as the last element with `complete` set to false.
struct SmallFactorization {
  std::vector<std::pair<Int, unsigned>> factors;
  Int cofactor;  // 1 when the factorization is complete
  bool complete() const { return cofactor == 1; }
};
SmallFactorization trial_factor(Int n, uint64_t bound = 1'000'000);

// True iff no prime fourth power divides a (a != 0).
bool is_fourth_power_free(const Int& a);

// Smallest prime factor of `n` that is <= bound, or nullopt.
std::optional<Int> smallest_prime_factor(const Int& n, uint64_t bound);

// n must be a perfect square; asserts and returns the root.
Int exact_sqrt(const Int& n);

// Exact division; asserts divisibility.
Int exact_div(const Int& num, const Int& den);

// Number of distinct prime divisors / sum of 1/p^2 over p|n via trial division.
// n is expected to be desk-scale (complete factorization required).
unsigned omega(const Int& n);
Rat rho(const Int& n);

// Primes in [lo, hi] by simple sieve/trial division (desk scale).
std::vector<long> primes_in(long lo, long hi);

}  // namespace edsp
