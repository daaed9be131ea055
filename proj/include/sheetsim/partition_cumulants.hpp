#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace sheetsim {

/// A partition of {1, ..., d}, d <= 12, stored as its restricted growth
/// string: labels[i] is the block index of element i+1, and block indices
/// appear in first-occurrence order.
class SetPartition {
 public:
  static constexpr int kMaxGroundSize = 12;

  SetPartition(int ground_size, std::span<const std::uint8_t> labels);

  int ground_size() const noexcept { return ground_size_; }
  int block_count() const noexcept { return block_count_; }
  std::uint8_t label(int element) const { return labels_.at(static_cast<std::size_t>(element - 1)); }

  /// Blocks as sorted element lists, ordered by smallest element.
  std::vector<std::vector<int>> blocks() const;

 private:
  int ground_size_;
  int block_count_;
  std::array<std::uint8_t, kMaxGroundSize> labels_{};
};

/// Calls visit(labels, block_count) once for every partition of [d].
void for_each_set_partition(int d,
                            const std::function<void(std::span<const std::uint8_t>, int)>& visit);

/// Every partition of [d], d in [1, 12]; the count is the d-th Bell number.
std::vector<SetPartition> enumerate_set_partitions(int d);

struct NegBinomialParams {
  double a = 1.0;  // shape, > 0
  double p = 0.0;  // in [0, 1)
};

/// i-th cumulant a * Li_{1-i}(p).
double neg_binomial_cumulant(int i, const NegBinomialParams& params);

/// Same cumulant through the law of total cumulance applied to the
/// Gamma-Poisson mixture: sum over partitions pi of [i] of kappa_{|pi|}(tau),
/// tau ~ Gamma(shape a, scale p/(1-p)). Enumerates partitions; i <= 12.
double neg_binomial_cumulant_via_total_cumulance(int i, const NegBinomialParams& params);

/// i-th cumulant of the number of segregating sites S(n) at mutation
/// parameter t1: sum_b {i brace b} (b-1)! t1^b H_{n-1}^{(b)}. Zero for n = 1.
double sites_cumulant(int i, std::int64_t n, double t1);

/// Same cumulant as sum_{k=1}^{n-1} Li_{1-i}(t1 / (k + t1)).
double sites_cumulant_polylog(int i, std::int64_t n, double t1);

/// Cumulant of the total tree length L_n: (j-1)! 2^j sum_{k=2}^{n} (k-1)^{-j}.
double tree_length_cumulant(int j, std::int64_t n);

/// lim_n tree_length_cumulant(j, n) = (j-1)! 2^j zeta(j), j >= 2.
double tree_length_cumulant_limit(int j, double tol = 1e-12);

/// Cumulant of S(n) / (t1/2), i.e. (2/t1)^j sites_cumulant(j, n, t1).
/// Tends to tree_length_cumulant(j, n) as t1 grows.
double scaled_sites_cumulant(int j, std::int64_t n, double t1);

enum class CumulantSubject { neg_binomial, sites, tree_length };

std::string_view to_string(CumulantSubject subject);

/// kappa_1..kappa_max of one law. Construction rejects a negative kappa_2.
struct CumulantTable {
  CumulantSubject subject;
  std::vector<double> params;  // (a, p) | (n, t1) | (n)
  std::vector<double> values;  // values[j-1] = kappa_j

  CumulantTable(CumulantSubject subject, std::vector<double> params, std::vector<double> values);
  double at(int order) const { return values.at(static_cast<std::size_t>(order - 1)); }
};

CumulantTable neg_binomial_cumulant_table(const NegBinomialParams& params, int max_order);
CumulantTable sites_cumulant_table(std::int64_t n, double t1, int max_order);
CumulantTable tree_length_cumulant_table(std::int64_t n, int max_order);

}  // namespace sheetsim
