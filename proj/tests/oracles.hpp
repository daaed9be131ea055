#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library under test.

#include <cstdint>
#include <vector>

namespace oracle {

/// Stirling numbers of the second kind counted by enumerating every set
/// partition of [n] (n <= 10).
std::uint64_t stirling2_by_enumeration(int n, int k);

/// Number of permutations of [n] with exactly c cycles, counted over all n!
/// permutations generated by Heap's algorithm (n <= 9). Index c-1.
std::vector<std::uint64_t> permutations_by_cycles(int n);

/// sum_{l >= 1} l^m u^l by plain partial sums until terms fall below 1e-18 of the sum.
double polylog_partial_sums(int m, double u);

/// Cumulants of order 1..r of a geometric law on N_0 with the given success
/// probability, from raw moments obtained by summing the pmf series.
std::vector<double> geometric_cumulants(double success, int r);

/// Raw moments -> cumulants by the partition-lattice (Bell polynomial) sum.
std::vector<double> cumulants_from_raw_moments(const std::vector<double>& m);

/// floor(n^t) by exact integer search.
std::int64_t floor_power(std::int64_t n, double t);

// Moments of the coupled field obtained by conditioning each strip on its
// length w = k tau_k ~ Exp((k-1)/2) and integrating numerically over w.

/// Cov(M_k(a), M_k(b)).
double strip_cov_MM(std::int64_t k, double a, double b);
/// Cov(1{M_k(a) >= 1}, M_k(b)).
double strip_cov_BM(std::int64_t k, double a, double b);
/// Cov(1{M_k(a) >= 1}, 1{M_k(b) >= 1}).
double strip_cov_BB(std::int64_t k, double a, double b);
/// P(M_k(a) = j).
double strip_pmf(std::int64_t k, double a, int j);

/// Cov(S(n,s), S(n,t)), Cov(K(n,s), S(n,t)), Cov(K(n,s), K(n,t)) by summing
/// strip covariances over the shared strips.
double field_cov_SS(std::int64_t n, double s1, double s2, double t1, double t2);
double field_cov_KS(std::int64_t n, double s1, double s2, double t1, double t2);
double field_cov_KK(std::int64_t n, double s1, double s2, double t1, double t2);

}  // namespace oracle
