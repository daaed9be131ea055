#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace sheetsim {

using BigInt = boost::multiprecision::cpp_int;

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Exact Stirling numbers of the second kind {n brace k}, 0 <= k <= n <= max_n.
///
/// The table is immutable after construction and may be shared across threads.
/// Alongside the exact integers it keeps the double coefficients
/// k! {m+1 brace k+1} used by the negative-order polylogarithm.
class StirlingCache {
 public:
  static constexpr int kDefaultMaxN = 64;

  explicit StirlingCache(int max_n = kDefaultMaxN);

  int max_n() const noexcept { return max_n_; }

  /// {n brace k}; throws std::out_of_range outside [0, max_n].
  const BigInt& get(int n, int k) const;
  double get_double(int n, int k) const;

  /// k! {order+1 brace k+1} for k = 0..order. Requires order + 1 <= max_n.
  const std::vector<double>& polylog_coefficients(int order) const;

 private:
  int max_n_;
  std::vector<std::vector<BigInt>> table_;
  std::vector<std::vector<double>> table_double_;
  std::vector<std::vector<double>> polylog_coeffs_;
};

/// Process-wide cache with max_n = 64.
const StirlingCache& default_stirling_cache();

/// {n brace k} from the default cache.
BigInt stirling2(int n, int k);

/// Trimmed generalized harmonic number H_{m,n}^{(b)} = sum_{k=m}^{n} k^{-b}.
struct HarmonicSpec {
  std::int64_t m = 1;
  std::int64_t n = 1;
  int b = 1;
};

/// Ascending compensated summation. Throws std::invalid_argument unless
/// 1 <= m <= n and b >= 1.
double harmonic(const HarmonicSpec& spec);

/// H_{m,n}^{(b)} for b = 1..max_order in one pass (index b-1). Returns zeros
/// for the empty range n < m.
std::vector<double> harmonic_orders(std::int64_t m, std::int64_t n, int max_order);

/// Li_{-order}(u) = sum_{k=0}^{order} k! {order+1 brace k+1} (u/(1-u))^{k+1}.
/// Throws std::domain_error unless 0 <= u < 1.
double polylog_neg(int order, double u);

/// Same function by partial sums of sum_{l>=1} l^order u^l, stopped once a
/// geometric bound on the tail drops below `tol`. Test oracle for polylog_neg.
double polylog_neg_series(int order, double u, double tol);

/// x (x+1) ... (x+n-1); the empty product is 1.
double rising_factorial(double x, std::int64_t n);

/// zeta(j) for j >= 2. Partial sums bracketed by the integral tail bounds;
/// returns the bracket midpoint once its half-width is below `tol`.
double zeta_partial(int j, double tol);

}  // namespace sheetsim
