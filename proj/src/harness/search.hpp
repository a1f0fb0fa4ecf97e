// Finite searches: the exceptional-point enumeration for the n = 35 case.
#pragma once

#include <vector>

#include "eds/eds.hpp"
#include "heights/heights.hpp"

namespace edsp {

struct SearchHit {
  Int a;
  Rat x, y;        // y > 0 canonical representative
  double hhat;     // certified within hhat_err
  double hhat_err;
  double threshold;  // (30 log|a| + 41.1)/734
};

struct SearchResult {
  long a_bound = 732;        // |a| < a_bound, a = 4 mod 16
  std::vector<SearchHit> hits;  // sorted by (a, x)
  double elapsed_seconds = 0;
  long candidates_checked = 0;
};

// Enumerates a = 4 mod 16, |a| < 732 fourth-power-free, and x = u/w^2 with
// max(|u|, w^2) <= exp(0.59 log|a| + 0.64), keeps non-torsion points on E_a
// with x^3 + a x a rational square and canonical height below the
// n = 35 exception threshold. Deterministic hit order for any thread count.
SearchResult search_exceptional_35(int threads = 1);

}  // namespace edsp
