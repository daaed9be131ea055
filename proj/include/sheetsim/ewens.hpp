#pragma once

#include "sheetsim/random_stream.hpp"

#include <cstdint>
#include <vector>

namespace sheetsim {

/// Number of cycles k of one Ewens(n, t1) permutation.
struct CycleCountSample {
  std::int64_t n = 1;
  double t1 = 1.0;
  std::int64_t k = 1;
};

/// Chinese restaurant construction: element j+1 opens a new cycle with
/// probability t1/(t1+j). Only the count is tracked.
CycleCountSample sample_crp_cycles(std::int64_t n, double t1, Stream& stream);

/// Feller coupling: K = 1 + sum_{k=2}^{n} B_k, B_k ~ Bernoulli(t1/(t1+k-1)).
CycleCountSample sample_feller_cycles(std::int64_t n, double t1, Stream& stream);

/// Exact pmf of K(n) over k = 1..n (index k-1), by convolving the Feller
/// Bernoullis. n <= 30.
std::vector<double> exact_cycle_pmf(std::int64_t n, double t1);

/// Exact pmf of K(n) by enumerating all n! permutations, each weighted by
/// t1^cycles / (t1)_n. n <= 8.
std::vector<double> enumerate_cycle_pmf(int n, double t1);

}  // namespace sheetsim
