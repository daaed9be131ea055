#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sheetsim {

inline constexpr int kBootstrapResamples = 200;
inline constexpr std::uint64_t kDefaultBootstrapSeed = 0x6b6f6f7473747261ULL;

/// Plug-in moments and cumulants of a sample. Vectors hold orders
/// 1..max_order at index order-1. se[0] is sd/sqrt(count); higher orders are
/// bootstrap standard errors.
struct SampleSummary {
  std::int64_t count = 0;
  std::vector<double> raw_moments;
  std::vector<double> central_moments;
  std::vector<double> cumulants;
  std::vector<double> se;

  double mean() const { return cumulants.at(0); }
  double variance() const { return cumulants.at(1); }
};

/// max_order in [2, 8]. Throws std::invalid_argument on empty input.
SampleSummary summarize(std::span<const double> samples, int max_order = 4,
                        std::uint64_t bootstrap_seed = kDefaultBootstrapSeed);

/// kappa_r = m_r - sum_{j=1}^{r-1} C(r-1, j-1) kappa_j m_{r-j}.
std::vector<double> moments_to_cumulants(std::span<const double> raw_moments);
/// Inverse of moments_to_cumulants.
std::vector<double> cumulants_to_moments(std::span<const double> cumulants);

/// Count and power sums of (x - shift) up to a fixed order. Accumulators
/// with the same shift merge exactly, so parallel partial sums combine
/// independently of the split.
class PowerSums {
 public:
  explicit PowerSums(int max_order, double shift = 0.0);

  void add(double x);
  void merge(const PowerSums& other);

  std::int64_t count() const noexcept { return count_; }
  double shift() const noexcept { return shift_; }
  int max_order() const noexcept { return static_cast<int>(sums_.size()); }

  /// Raw moments of x (not of x - shift), orders 1..max_order.
  std::vector<double> raw_moments() const;
  /// Central moments, orders 1..max_order (first entry 0).
  std::vector<double> central_moments() const;

 private:
  double shift_;
  std::int64_t count_ = 0;
  std::vector<double> sums_;
};

struct Estimate {
  double estimate = 0.0;
  double se = 0.0;
};

/// Plug-in covariance with a bootstrap standard error.
Estimate cross_covariance(std::span<const double> a, std::span<const double> b,
                          std::uint64_t bootstrap_seed = kDefaultBootstrapSeed);

/// Plug-in covariance matrix of several equally long columns; the bootstrap
/// resamples rows jointly. Row-major p x p.
struct CovarianceMatrix {
  std::size_t dim = 0;
  std::vector<double> estimate;
  std::vector<double> se;

  double at(std::size_t i, std::size_t j) const { return estimate.at(i * dim + j); }
  double se_at(std::size_t i, std::size_t j) const { return se.at(i * dim + j); }
};

CovarianceMatrix covariance_matrix(const std::vector<std::vector<double>>& columns,
                                   std::uint64_t bootstrap_seed = kDefaultBootstrapSeed);

/// Plug-in covariance, no standard error.
double covariance(std::span<const double> a, std::span<const double> b);

/// Pearson correlation (plug-in).
double correlation(std::span<const double> a, std::span<const double> b);

/// Standard normal cdf.
double normal_cdf(double x);

/// sup |F_m - Phi| evaluated at the order statistics.
double ks_statistic(std::span<const double> samples);

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
};

/// Two-sample chi-square on a common bin layout. Adjacent bins are pooled
/// until both expected counts reach 5. Throws on mismatched layouts or an
/// empty histogram.
ChiSquareResult chi_square_two_sample(std::span<const std::int64_t> hist_a,
                                      std::span<const std::int64_t> hist_b);

/// Goodness of fit of observed counts against cell probabilities, with the
/// same pooling rule on expected counts.
ChiSquareResult chi_square_goodness_of_fit(std::span<const std::int64_t> counts,
                                           std::span<const double> probs);

/// Upper alpha quantile of chi-square with dof degrees of freedom.
double chi_square_critical(int dof, double alpha = 0.001);

}  // namespace sheetsim
