#include "sheetsim/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sheetsim {

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x))
    compensation_ += (sum_ - t) + x;
  else
    compensation_ += (x - t) + sum_;
  sum_ = t;
}

StirlingCache::StirlingCache(int max_n) : max_n_{max_n} {
  if (max_n < 0 || max_n > kDefaultMaxN)
    throw std::out_of_range("StirlingCache: max_n must lie in [0, 64], got " +
                            std::to_string(max_n));
  table_.resize(static_cast<std::size_t>(max_n) + 1);
  table_[0] = {BigInt{1}};
  for (int n = 1; n <= max_n; ++n) {
    auto& row = table_[static_cast<std::size_t>(n)];
    const auto& prev = table_[static_cast<std::size_t>(n) - 1];
    row.assign(static_cast<std::size_t>(n) + 1, BigInt{0});
    for (int k = 1; k <= n; ++k) {
      BigInt value = prev[static_cast<std::size_t>(k) - 1];
      if (k < n) value += BigInt{k} * prev[static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(k)] = std::move(value);
    }
  }

  table_double_.resize(table_.size());
  for (std::size_t n = 0; n < table_.size(); ++n)
    for (const auto& v : table_[n]) table_double_[n].push_back(v.convert_to<double>());

  // k! {m+1 brace k+1}, exact before rounding.
  polylog_coeffs_.resize(static_cast<std::size_t>(max_n));
  for (int m = 0; m + 1 <= max_n; ++m) {
    auto& coeffs = polylog_coeffs_[static_cast<std::size_t>(m)];
    BigInt factorial{1};
    for (int k = 0; k <= m; ++k) {
      if (k > 0) factorial *= k;
      const BigInt c = factorial * table_[static_cast<std::size_t>(m) + 1][static_cast<std::size_t>(k) + 1];
      coeffs.push_back(c.convert_to<double>());
    }
  }
}

const BigInt& StirlingCache::get(int n, int k) const {
  static const BigInt zero{0};
  if (n < 0 || k < 0 || n > max_n_ || k > max_n_)
    throw std::out_of_range("stirling2: arguments (" + std::to_string(n) + ", " +
                            std::to_string(k) + ") outside cache range [0, " +
                            std::to_string(max_n_) + "]");
  if (k > n) return zero;
  return table_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

double StirlingCache::get_double(int n, int k) const {
  get(n, k);  // range check
  if (k > n) return 0.0;
  return table_double_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const std::vector<double>& StirlingCache::polylog_coefficients(int order) const {
  if (order < 0 || order + 1 > max_n_)
    throw std::out_of_range("polylog order " + std::to_string(order) +
                            " outside Stirling cache range");
  return polylog_coeffs_[static_cast<std::size_t>(order)];
}

const StirlingCache& default_stirling_cache() {
  static const StirlingCache cache{StirlingCache::kDefaultMaxN};
  return cache;
}

BigInt stirling2(int n, int k) { return default_stirling_cache().get(n, k); }

double harmonic(const HarmonicSpec& spec) {
  if (spec.m < 1 || spec.n < spec.m || spec.b < 1)
    throw std::invalid_argument("harmonic: require 1 <= m <= n and b >= 1");
  CompensatedSum sum;
  for (std::int64_t k = spec.m; k <= spec.n; ++k) {
    const double inv = 1.0 / static_cast<double>(k);
    double term = inv;
    if (spec.b <= 16) {
      for (int e = 1; e < spec.b; ++e) term *= inv;
    } else {
      term = std::pow(static_cast<double>(k), -spec.b);
    }
    sum.add(term);
  }
  return sum.value();
}

std::vector<double> harmonic_orders(std::int64_t m, std::int64_t n, int max_order) {
  if (m < 1 || max_order < 1)
    throw std::invalid_argument("harmonic_orders: require m >= 1 and max_order >= 1");
  std::vector<CompensatedSum> sums(static_cast<std::size_t>(max_order));
  for (std::int64_t k = m; k <= n; ++k) {
    const double inv = 1.0 / static_cast<double>(k);
    double term = inv;
    for (auto& s : sums) {
      s.add(term);
      term *= inv;
    }
  }
  std::vector<double> out;
  out.reserve(sums.size());
  for (const auto& s : sums) out.push_back(s.value());
  return out;
}

double polylog_neg(int order, double u) {
  if (!(u >= 0.0 && u < 1.0))
    throw std::domain_error("polylog_neg: argument must lie in [0, 1)");
  const auto& coeffs = default_stirling_cache().polylog_coefficients(order);
  const double r = u / (1.0 - u);
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + *it;
  return acc * r;
}

double polylog_neg_series(int order, double u, double tol) {
  if (!(u >= 0.0 && u < 1.0))
    throw std::domain_error("polylog_neg_series: argument must lie in [0, 1)");
  if (order < 0) throw std::invalid_argument("polylog_neg_series: order must be >= 0");
  if (u == 0.0) return 0.0;
  constexpr std::int64_t kMaxTerms = 50'000'000;
  CompensatedSum sum;
  for (std::int64_t l = 1; l <= kMaxTerms; ++l) {
    const double dl = static_cast<double>(l);
    sum.add(std::pow(dl, order) * std::pow(u, dl));
    // Term ratios ((j+1)/j)^order * u decrease in j, so once the ratio at the
    // next term is below one the remaining tail is dominated by a geometric series.
    const double next = std::pow(dl + 1.0, order) * std::pow(u, dl + 1.0);
    const double ratio = std::pow((dl + 2.0) / (dl + 1.0), order) * u;
    if (ratio < 1.0 && next / (1.0 - ratio) < tol) return sum.value();
  }
  throw std::runtime_error("polylog_neg_series: no convergence within iteration cap");
}

double rising_factorial(double x, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("rising_factorial: n must be >= 0");
  double product = 1.0;
  for (std::int64_t i = 0; i < n; ++i) product *= x + static_cast<double>(i);
  return product;
}

double zeta_partial(int j, double tol) {
  if (j < 2) throw std::domain_error("zeta_partial: order must be >= 2");
  if (!(tol > 0.0)) throw std::invalid_argument("zeta_partial: tol must be positive");
  const double jm1 = static_cast<double>(j - 1);
  auto tail_upper = [&](double n) { return std::pow(n, 1.0 - j) / jm1; };
  // Smallest N with half-width (upper(N) - upper(N+1)) / 2 < tol; N^{-j}/2 is
  // an upper bound on that half-width, so start from it and step down if possible.
  auto n_terms = static_cast<std::int64_t>(std::ceil(std::pow(2.0 * tol, -1.0 / j)));
  if (n_terms < 1) n_terms = 1;
  while (n_terms > 1) {
    const double nd = static_cast<double>(n_terms - 1);
    if ((tail_upper(nd) - tail_upper(nd + 1.0)) / 2.0 >= tol) break;
    --n_terms;
  }
  CompensatedSum sum;
  for (std::int64_t k = n_terms; k >= 1; --k) sum.add(std::pow(static_cast<double>(k), -j));
  const double nd = static_cast<double>(n_terms);
  return sum.value() + (tail_upper(nd) + tail_upper(nd + 1.0)) / 2.0;
}

}  // namespace sheetsim
