#include "sheetsim/stats.hpp"

#include "sheetsim/random_stream.hpp"
#include "sheetsim/special_functions.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sheetsim {

namespace {

constexpr int kMaxSummaryOrder = 8;

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  return out;
}

double mean_of(std::span<const double> xs) {
  CompensatedSum s;
  for (double x : xs) s.add(x);
  return s.value() / static_cast<double>(xs.size());
}

// Central moments of orders 1..order (first entry 0) about the sample mean.
std::vector<double> central_about(std::span<const double> xs, double mean, int order) {
  std::vector<double> sums(static_cast<std::size_t>(order), 0.0);
  for (double x : xs) {
    const double d = x - mean;
    double p = 1.0;
    for (int r = 0; r < order; ++r) {
      p *= d;
      sums[static_cast<std::size_t>(r)] += p;
    }
  }
  for (double& s : sums) s /= static_cast<double>(xs.size());
  sums[0] = 0.0;
  return sums;
}

std::vector<double> cumulants_from_central(const std::vector<double>& central, double mean) {
  auto k = moments_to_cumulants(central);
  k[0] = mean;
  return k;
}

double sd_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean_of(xs);
  CompensatedSum s;
  for (double x : xs) s.add((x - m) * (x - m));
  return std::sqrt(s.value() / static_cast<double>(xs.size() - 1));
}

Stream bootstrap_stream(std::uint64_t seed) { return Stream{derive_stream_seed(seed, 0xb007)}; }

void draw_indices(Stream& stream, std::vector<std::size_t>& idx, std::size_t count) {
  idx.resize(count);
  for (auto& i : idx) i = static_cast<std::size_t>(stream.below(count));
}

// Merges adjacent bins until every merged bin satisfies `ok`; a short tail
// is folded into the last bin.
template <class Ok>
std::vector<std::pair<std::size_t, std::size_t>> pool_bins(std::size_t bins, Ok ok) {
  std::vector<std::pair<std::size_t, std::size_t>> ranges;  // [begin, end)
  std::size_t begin = 0;
  for (std::size_t end = 1; end <= bins; ++end) {
    if (ok(begin, end)) {
      ranges.emplace_back(begin, end);
      begin = end;
    }
  }
  if (begin < bins) {
    if (ranges.empty())
      ranges.emplace_back(0, bins);
    else
      ranges.back().second = bins;
  }
  return ranges;
}

}  // namespace

std::vector<double> moments_to_cumulants(std::span<const double> m) {
  std::vector<double> k(m.size(), 0.0);
  for (std::size_t r = 1; r <= m.size(); ++r) {
    double v = m[r - 1];
    for (std::size_t j = 1; j < r; ++j)
      v -= binomial(static_cast<int>(r - 1), static_cast<int>(j - 1)) * k[j - 1] * m[r - j - 1];
    k[r - 1] = v;
  }
  return k;
}

std::vector<double> cumulants_to_moments(std::span<const double> k) {
  std::vector<double> m(k.size(), 0.0);
  for (std::size_t r = 1; r <= k.size(); ++r) {
    double v = k[r - 1];
    for (std::size_t j = 1; j < r; ++j)
      v += binomial(static_cast<int>(r - 1), static_cast<int>(j - 1)) * k[j - 1] * m[r - j - 1];
    m[r - 1] = v;
  }
  return m;
}

SampleSummary summarize(std::span<const double> samples, int max_order,
                        std::uint64_t bootstrap_seed) {
  if (samples.empty()) throw std::invalid_argument("summarize: empty sample");
  if (max_order < 2 || max_order > kMaxSummaryOrder)
    throw std::invalid_argument("summarize: max_order must lie in [2, 8]");
  const std::size_t count = samples.size();
  const double mean = mean_of(samples);

  SampleSummary out;
  out.count = static_cast<std::int64_t>(count);
  out.central_moments = central_about(samples, mean, max_order);
  out.cumulants = cumulants_from_central(out.central_moments, mean);
  out.raw_moments.resize(static_cast<std::size_t>(max_order));
  for (int r = 1; r <= max_order; ++r) {
    double v = std::pow(mean, r);
    for (int j = 2; j <= r; ++j)
      v += binomial(r, j) * out.central_moments[static_cast<std::size_t>(j - 1)] * std::pow(mean, r - j);
    out.raw_moments[static_cast<std::size_t>(r - 1)] = v;
  }

  out.se.assign(static_cast<std::size_t>(max_order), 0.0);
  if (count < 2) return out;
  out.se[0] = std::sqrt(out.central_moments[1] * static_cast<double>(count) /
                        static_cast<double>(count - 1) / static_cast<double>(count));

  Stream stream = bootstrap_stream(bootstrap_seed);
  std::vector<std::vector<double>> boot(static_cast<std::size_t>(max_order));
  std::vector<std::size_t> idx;
  std::vector<double> resample(count);
  for (int b = 0; b < kBootstrapResamples; ++b) {
    draw_indices(stream, idx, count);
    for (std::size_t i = 0; i < count; ++i) resample[i] = samples[idx[i]];
    const double m = mean_of(resample);
    const auto k = cumulants_from_central(central_about(resample, m, max_order), m);
    for (int r = 1; r < max_order; ++r) boot[static_cast<std::size_t>(r)].push_back(k[static_cast<std::size_t>(r)]);
  }
  for (int r = 1; r < max_order; ++r) out.se[static_cast<std::size_t>(r)] = sd_of(boot[static_cast<std::size_t>(r)]);
  return out;
}

PowerSums::PowerSums(int max_order, double shift) : shift_(shift) {
  if (max_order < 1) throw std::invalid_argument("PowerSums: max_order must be >= 1");
  sums_.assign(static_cast<std::size_t>(max_order), 0.0);
}

void PowerSums::add(double x) {
  const double d = x - shift_;
  double p = 1.0;
  for (double& s : sums_) {
    p *= d;
    s += p;
  }
  ++count_;
}

void PowerSums::merge(const PowerSums& other) {
  if (other.shift_ != shift_ || other.sums_.size() != sums_.size())
    throw std::invalid_argument("PowerSums::merge: incompatible accumulators");
  for (std::size_t r = 0; r < sums_.size(); ++r) sums_[r] += other.sums_[r];
  count_ += other.count_;
}

std::vector<double> PowerSums::raw_moments() const {
  if (count_ == 0) throw std::logic_error("PowerSums: no observations");
  const int order = max_order();
  const double n = static_cast<double>(count_);
  std::vector<double> out(static_cast<std::size_t>(order));
  for (int r = 1; r <= order; ++r) {
    double v = std::pow(shift_, r);
    for (int j = 1; j <= r; ++j)
      v += binomial(r, j) * sums_[static_cast<std::size_t>(j - 1)] / n * std::pow(shift_, r - j);
    out[static_cast<std::size_t>(r - 1)] = v;
  }
  return out;
}

std::vector<double> PowerSums::central_moments() const {
  if (count_ == 0) throw std::logic_error("PowerSums: no observations");
  const int order = max_order();
  const double n = static_cast<double>(count_);
  const double delta = -sums_[0] / n;  // shift - mean
  std::vector<double> out(static_cast<std::size_t>(order));
  for (int r = 1; r <= order; ++r) {
    double v = std::pow(delta, r);
    for (int j = 1; j <= r; ++j)
      v += binomial(r, j) * sums_[static_cast<std::size_t>(j - 1)] / n * std::pow(delta, r - j);
    out[static_cast<std::size_t>(r - 1)] = v;
  }
  out[0] = 0.0;
  return out;
}

Estimate cross_covariance(std::span<const double> a, std::span<const double> b,
                          std::uint64_t bootstrap_seed) {
  if (a.size() != b.size()) throw std::invalid_argument("cross_covariance: length mismatch");
  if (a.size() < 2) throw std::invalid_argument("cross_covariance: need at least 2 samples");
  const auto m = covariance_matrix({std::vector<double>(a.begin(), a.end()),
                                    std::vector<double>(b.begin(), b.end())},
                                   bootstrap_seed);
  return {m.at(0, 1), m.se_at(0, 1)};
}

CovarianceMatrix covariance_matrix(const std::vector<std::vector<double>>& columns,
                                   std::uint64_t bootstrap_seed) {
  if (columns.empty()) throw std::invalid_argument("covariance_matrix: no columns");
  const std::size_t count = columns.front().size();
  for (const auto& c : columns)
    if (c.size() != count) throw std::invalid_argument("covariance_matrix: length mismatch");
  if (count < 2) throw std::invalid_argument("covariance_matrix: need at least 2 samples");
  const std::size_t p = columns.size();

  auto plug_in = [&](const std::vector<std::size_t>* idx) {
    std::vector<double> means(p, 0.0);
    for (std::size_t c = 0; c < p; ++c) {
      CompensatedSum s;
      for (std::size_t i = 0; i < count; ++i) s.add(columns[c][idx ? (*idx)[i] : i]);
      means[c] = s.value() / static_cast<double>(count);
    }
    std::vector<double> cov(p * p, 0.0);
    std::vector<double> d(p);
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t row = idx ? (*idx)[i] : i;
      for (std::size_t c = 0; c < p; ++c) d[c] = columns[c][row] - means[c];
      for (std::size_t x = 0; x < p; ++x)
        for (std::size_t y = x; y < p; ++y) cov[x * p + y] += d[x] * d[y];
    }
    for (std::size_t x = 0; x < p; ++x)
      for (std::size_t y = x; y < p; ++y) {
        cov[x * p + y] /= static_cast<double>(count);
        cov[y * p + x] = cov[x * p + y];
      }
    return cov;
  };

  CovarianceMatrix out;
  out.dim = p;
  out.estimate = plug_in(nullptr);

  Stream stream = bootstrap_stream(bootstrap_seed);
  std::vector<double> sum(p * p, 0.0);
  std::vector<double> sum_sq(p * p, 0.0);
  std::vector<std::size_t> idx;
  for (int b = 0; b < kBootstrapResamples; ++b) {
    draw_indices(stream, idx, count);
    const auto cov = plug_in(&idx);
    for (std::size_t e = 0; e < cov.size(); ++e) {
      const double d = cov[e] - out.estimate[e];
      sum[e] += d;
      sum_sq[e] += d * d;
    }
  }
  const double B = kBootstrapResamples;
  out.se.resize(p * p);
  for (std::size_t e = 0; e < p * p; ++e)
    out.se[e] = std::sqrt(std::max(0.0, (sum_sq[e] - sum[e] * sum[e] / B) / (B - 1.0)));
  return out;
}

double covariance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("covariance: need equal nonempty lengths");
  const double ma = mean_of(a);
  const double mb = mean_of(b);
  CompensatedSum s;
  for (std::size_t i = 0; i < a.size(); ++i) s.add((a[i] - ma) * (b[i] - mb));
  return s.value() / static_cast<double>(a.size());
}

double correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2)
    throw std::invalid_argument("correlation: need equal lengths >= 2");
  const double ma = mean_of(a);
  const double mb = mean_of(b);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  return sab / std::sqrt(saa * sbb);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double ks_statistic(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::vector<double> xs(samples.begin(), samples.end());
  std::sort(xs.begin(), xs.end());
  const double m = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = normal_cdf(xs[i]);
    d = std::max({d, static_cast<double>(i + 1) / m - f, f - static_cast<double>(i) / m});
  }
  return d;
}

ChiSquareResult chi_square_two_sample(std::span<const std::int64_t> hist_a,
                                      std::span<const std::int64_t> hist_b) {
  if (hist_a.size() != hist_b.size())
    throw std::invalid_argument("chi_square_two_sample: bin layouts differ");
  double A = 0.0, B = 0.0;
  for (std::size_t i = 0; i < hist_a.size(); ++i) {
    if (hist_a[i] < 0 || hist_b[i] < 0)
      throw std::invalid_argument("chi_square_two_sample: negative count");
    A += static_cast<double>(hist_a[i]);
    B += static_cast<double>(hist_b[i]);
  }
  if (A == 0.0 || B == 0.0) throw std::invalid_argument("chi_square_two_sample: empty histogram");

  std::vector<double> a(hist_a.size()), b(hist_b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = static_cast<double>(hist_a[i]);
    b[i] = static_cast<double>(hist_b[i]);
  }
  const double smaller = std::min(A, B) / (A + B);
  const auto ranges = pool_bins(a.size(), [&](std::size_t lo, std::size_t hi) {
    double total = 0.0;
    for (std::size_t i = lo; i < hi; ++i) total += a[i] + b[i];
    return smaller * total >= 5.0;
  });

  const double ka = std::sqrt(B / A);
  const double kb = std::sqrt(A / B);
  ChiSquareResult out;
  for (const auto& [lo, hi] : ranges) {
    double x = 0.0, y = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      x += a[i];
      y += b[i];
    }
    if (x + y > 0.0) out.statistic += (ka * x - kb * y) * (ka * x - kb * y) / (x + y);
  }
  out.dof = static_cast<int>(ranges.size()) - 1;
  return out;
}

ChiSquareResult chi_square_goodness_of_fit(std::span<const std::int64_t> counts,
                                           std::span<const double> probs) {
  if (counts.size() != probs.size())
    throw std::invalid_argument("chi_square_goodness_of_fit: size mismatch");
  double total = 0.0;
  for (auto c : counts) {
    if (c < 0) throw std::invalid_argument("chi_square_goodness_of_fit: negative count");
    total += static_cast<double>(c);
  }
  if (total == 0.0) throw std::invalid_argument("chi_square_goodness_of_fit: empty histogram");
  const auto ranges = pool_bins(counts.size(), [&](std::size_t lo, std::size_t hi) {
    double p = 0.0;
    for (std::size_t i = lo; i < hi; ++i) p += probs[i];
    return total * p >= 5.0;
  });
  ChiSquareResult out;
  for (const auto& [lo, hi] : ranges) {
    double o = 0.0, p = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      o += static_cast<double>(counts[i]);
      p += probs[i];
    }
    const double e = total * p;
    if (e > 0.0)
      out.statistic += (o - e) * (o - e) / e;
    else if (o > 0.0)
      out.statistic = std::numeric_limits<double>::infinity();
  }
  out.dof = static_cast<int>(ranges.size()) - 1;
  return out;
}

double chi_square_critical(int dof, double alpha) {
  if (dof < 1) throw std::invalid_argument("chi_square_critical: dof must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("chi_square_critical: alpha in (0,1)");
  return boost::math::quantile(boost::math::complement(boost::math::chi_squared(dof), alpha));
}

}  // namespace sheetsim
