#include "sheetsim/partition_cumulants.hpp"

#include "sheetsim/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sheetsim {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_order(int i, const char* what) {
  if (i < 1 || i > StirlingCache::kDefaultMaxN - 1)
    throw std::out_of_range(std::string(what) + ": cumulant order " + std::to_string(i) +
                            " outside [1, 63]");
}

void enumerate_rgs(int d, int position, int blocks_so_far, std::array<std::uint8_t, 12>& labels,
                   const std::function<void(std::span<const std::uint8_t>, int)>& visit) {
  if (position == d) {
    visit(std::span<const std::uint8_t>(labels.data(), static_cast<std::size_t>(d)), blocks_so_far);
    return;
  }
  for (int b = 0; b <= blocks_so_far; ++b) {
    labels[static_cast<std::size_t>(position)] = static_cast<std::uint8_t>(b);
    enumerate_rgs(d, position + 1, b == blocks_so_far ? blocks_so_far + 1 : blocks_so_far, labels,
                  visit);
  }
}

}  // namespace

SetPartition::SetPartition(int ground_size, std::span<const std::uint8_t> labels)
    : ground_size_{ground_size}, block_count_{0} {
  if (ground_size < 1 || ground_size > kMaxGroundSize)
    throw std::out_of_range("SetPartition: ground size must lie in [1, 12]");
  if (labels.size() != static_cast<std::size_t>(ground_size))
    throw std::invalid_argument("SetPartition: one label per element required");
  int next_new = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] > next_new)
      throw std::invalid_argument("SetPartition: labels must form a restricted growth string");
    if (labels[i] == next_new) ++next_new;
    labels_[i] = labels[i];
  }
  block_count_ = next_new;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count_));
  for (int e = 1; e <= ground_size_; ++e) out[labels_[static_cast<std::size_t>(e - 1)]].push_back(e);
  return out;
}

void for_each_set_partition(int d,
                            const std::function<void(std::span<const std::uint8_t>, int)>& visit) {
  if (d < 1 || d > SetPartition::kMaxGroundSize)
    throw std::out_of_range("for_each_set_partition: d must lie in [1, 12]");
  std::array<std::uint8_t, 12> labels{};
  enumerate_rgs(d, 0, 0, labels, visit);
}

std::vector<SetPartition> enumerate_set_partitions(int d) {
  std::vector<SetPartition> out;
  for_each_set_partition(d, [&](std::span<const std::uint8_t> labels, int) {
    out.emplace_back(d, labels);
  });
  return out;
}

double neg_binomial_cumulant(int i, const NegBinomialParams& params) {
  require_order(i, "neg_binomial_cumulant");
  if (!(params.a > 0.0) || !(params.p >= 0.0 && params.p < 1.0))
    throw std::domain_error("neg_binomial_cumulant: require a > 0 and 0 <= p < 1");
  return params.a * polylog_neg(i - 1, params.p);
}

double neg_binomial_cumulant_via_total_cumulance(int i, const NegBinomialParams& params) {
  if (i < 1 || i > SetPartition::kMaxGroundSize)
    throw std::out_of_range("neg_binomial_cumulant_via_total_cumulance: order must lie in [1, 12]");
  if (!(params.a > 0.0) || !(params.p >= 0.0 && params.p < 1.0))
    throw std::domain_error("neg_binomial_cumulant_via_total_cumulance: require a > 0, 0 <= p < 1");
  // Conditional Poisson cumulants all equal tau, so each partition pi
  // contributes the joint cumulant of |pi| copies of tau, i.e. kappa_{|pi|}(tau).
  std::vector<std::int64_t> partitions_by_blocks(static_cast<std::size_t>(i) + 1, 0);
  for_each_set_partition(i, [&](std::span<const std::uint8_t>, int blocks) {
    ++partitions_by_blocks[static_cast<std::size_t>(blocks)];
  });
  const double scale = params.p / (1.0 - params.p);
  double total = 0.0;
  for (int b = 1; b <= i; ++b) {
    const double gamma_cumulant = params.a * factorial(b - 1) * std::pow(scale, b);
    total += static_cast<double>(partitions_by_blocks[static_cast<std::size_t>(b)]) * gamma_cumulant;
  }
  return total;
}

double sites_cumulant(int i, std::int64_t n, double t1) {
  require_order(i, "sites_cumulant");
  if (n < 1) throw std::invalid_argument("sites_cumulant: n must be >= 1");
  if (!(t1 >= 0.0)) throw std::invalid_argument("sites_cumulant: t1 must be >= 0");
  if (n == 1) return 0.0;
  const auto h = harmonic_orders(1, n - 1, i);
  const auto& stirling = default_stirling_cache();
  double total = 0.0;
  for (int b = 1; b <= i; ++b)
    total += stirling.get_double(i, b) * factorial(b - 1) * std::pow(t1, b) *
             h[static_cast<std::size_t>(b - 1)];
  return total;
}

double sites_cumulant_polylog(int i, std::int64_t n, double t1) {
  require_order(i, "sites_cumulant_polylog");
  if (n < 1) throw std::invalid_argument("sites_cumulant_polylog: n must be >= 1");
  if (!(t1 >= 0.0)) throw std::invalid_argument("sites_cumulant_polylog: t1 must be >= 0");
  CompensatedSum sum;
  for (std::int64_t k = 1; k <= n - 1; ++k)
    sum.add(polylog_neg(i - 1, t1 / (static_cast<double>(k) + t1)));
  return sum.value();
}

double tree_length_cumulant(int j, std::int64_t n) {
  if (j < 1) throw std::invalid_argument("tree_length_cumulant: order must be >= 1");
  if (n < 2) throw std::invalid_argument("tree_length_cumulant: n must be >= 2");
  return factorial(j - 1) * std::pow(2.0, j) * harmonic({1, n - 1, j});
}

double tree_length_cumulant_limit(int j, double tol) {
  if (j < 2) throw std::domain_error("tree_length_cumulant_limit: order must be >= 2");
  return factorial(j - 1) * std::pow(2.0, j) * zeta_partial(j, tol);
}

double scaled_sites_cumulant(int j, std::int64_t n, double t1) {
  if (!(t1 > 0.0)) throw std::domain_error("scaled_sites_cumulant: t1 must be positive");
  return std::pow(2.0 / t1, j) * sites_cumulant(j, n, t1);
}

std::string_view to_string(CumulantSubject subject) {
  switch (subject) {
    case CumulantSubject::neg_binomial: return "neg_binomial";
    case CumulantSubject::sites: return "sites";
    case CumulantSubject::tree_length: return "tree_length";
  }
  return "unknown";
}

CumulantTable::CumulantTable(CumulantSubject subject_, std::vector<double> params_,
                             std::vector<double> values_)
    : subject{subject_}, params{std::move(params_)}, values{std::move(values_)} {
  if (values.size() >= 2 && values[1] < 0.0)
    throw std::logic_error("CumulantTable: negative second cumulant");
}

CumulantTable neg_binomial_cumulant_table(const NegBinomialParams& params, int max_order) {
  std::vector<double> values;
  for (int i = 1; i <= max_order; ++i) values.push_back(neg_binomial_cumulant(i, params));
  return {CumulantSubject::neg_binomial, {params.a, params.p}, std::move(values)};
}

CumulantTable sites_cumulant_table(std::int64_t n, double t1, int max_order) {
  std::vector<double> values;
  for (int i = 1; i <= max_order; ++i) values.push_back(sites_cumulant(i, n, t1));
  return {CumulantSubject::sites, {static_cast<double>(n), t1}, std::move(values)};
}

CumulantTable tree_length_cumulant_table(std::int64_t n, int max_order) {
  std::vector<double> values;
  for (int j = 1; j <= max_order; ++j) values.push_back(tree_length_cumulant(j, n));
  return {CumulantSubject::tree_length, {static_cast<double>(n)}, std::move(values)};
}

}  // namespace sheetsim
