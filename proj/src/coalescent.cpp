#include "sheetsim/coalescent.hpp"

#include "sheetsim/special_functions.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sheetsim {

std::int64_t floor_power(std::int64_t n, double t) {
  if (n < 1) throw std::invalid_argument("floor_power: n must be >= 1");
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("floor_power: t must lie in [0, 1]");
  if (t == 0.0 || n == 1) return 1;
  if (t == 1.0) return n;
  const double target = t * std::log(static_cast<double>(n));
  const double eps = 1e-12 * std::max(1.0, target);
  auto m = static_cast<std::int64_t>(std::floor(std::exp(target)));
  m = std::clamp<std::int64_t>(m, 1, n);
  while (m < n && std::log(static_cast<double>(m + 1)) <= target + eps) ++m;
  while (m > 1 && std::log(static_cast<double>(m)) > target + eps) --m;
  return m;
}

std::int64_t CoalescentPath::strip_of(double x) const {
  if (!(x >= 0.0 && x < total_length()))
    throw std::out_of_range("CoalescentPath::strip_of: x outside [0, L_n)");
  const auto it = std::upper_bound(length.begin(), length.end(), x);
  return static_cast<std::int64_t>(it - length.begin()) + 1;
}

CoalescentPath sample_coalescent_times(std::int64_t n, Stream& stream) {
  if (n < 1) throw std::invalid_argument("sample_coalescent_times: n must be >= 1");
  CoalescentPath path;
  path.n = n;
  path.holding.reserve(static_cast<std::size_t>(n - 1));
  path.length.reserve(static_cast<std::size_t>(n));
  path.length.push_back(0.0);
  for (std::int64_t k = 2; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const double tau = stream.exponential(kd * (kd - 1.0) / 2.0);
    path.holding.push_back(tau);
    path.length.push_back(path.length.back() + kd * tau);
  }
  return path;
}

std::int64_t MutationCounts::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

MutationCounts sample_mutations_geometric(std::int64_t n, double t1, Stream& stream) {
  if (n < 1) throw std::invalid_argument("sample_mutations_geometric: n must be >= 1");
  if (!(t1 >= 0.0)) throw std::invalid_argument("sample_mutations_geometric: t1 must be >= 0");
  MutationCounts out;
  out.n = n;
  out.counts.reserve(static_cast<std::size_t>(std::max<std::int64_t>(n - 1, 0)));
  for (std::int64_t k = 2; k <= n; ++k) {
    const double km1 = static_cast<double>(k - 1);
    out.counts.push_back(stream.geometric(km1 / (t1 + km1)));
  }
  return out;
}

MutationCounts sample_mutations_conditional(const CoalescentPath& path, double t1, Stream& stream) {
  if (!(t1 >= 0.0)) throw std::invalid_argument("sample_mutations_conditional: t1 must be >= 0");
  MutationCounts out;
  out.n = path.n;
  out.counts.reserve(path.holding.size());
  for (std::int64_t k = 2; k <= path.n; ++k)
    out.counts.push_back(stream.poisson(t1 * static_cast<double>(k) * path.tau(k) / 2.0));
  return out;
}

double compute_F_n(std::int64_t n, double t) {
  if (n < 2) throw std::invalid_argument("compute_F_n: n must be >= 2");
  const std::int64_t m = floor_power(n, t) - 1;
  const double h_star = m >= 2 ? harmonic({2, m, 1}) : 0.0;
  return h_star / std::log(static_cast<double>(n));
}

namespace {

// log(Gamma(j) / Gamma(j + y))
double log_gamma_ratio(std::int64_t j, double y) {
  const double r = boost::math::tgamma_delta_ratio(static_cast<double>(j), y);
  if (r > 0.0) return std::log(r);
  return std::lgamma(static_cast<double>(j)) - std::lgamma(static_cast<double>(j) + y);
}

}  // namespace

std::int64_t next_occupied_strip(std::int64_t k, std::int64_t n, double y, double log_u) {
  if (k >= n || !(y > 0.0)) return n + 1;
  const double base = log_gamma_ratio(k, y);
  // cond(m): the first occupied strip after k is at most m.
  auto cond = [&](std::int64_t m) { return log_gamma_ratio(m, y) - base < log_u; };
  if (!cond(n)) return n + 1;

  // Initial guess from G(j)/G(j+y) ~ (j + (y-1)/2)^{-y}.
  const double c = (y - 1.0) / 2.0;
  const double guess_real = (static_cast<double>(k) + c) * std::exp(-log_u / y) - c;
  std::int64_t guess = k + 1;
  if (std::isfinite(guess_real) && guess_real > static_cast<double>(k + 1))
    guess = guess_real >= static_cast<double>(n) ? n : static_cast<std::int64_t>(std::ceil(guess_real));

  // Bracket lo < answer <= hi with cond(lo) false and cond(hi) true.
  std::int64_t lo = k;
  std::int64_t hi = n;
  std::int64_t step = 1;
  if (cond(guess)) {
    hi = guess;
    for (;;) {
      const std::int64_t probe = hi - step;
      if (probe <= k) break;
      if (!cond(probe)) {
        lo = probe;
        break;
      }
      hi = probe;
      step *= 2;
    }
  } else {
    lo = guess;
    for (;;) {
      const std::int64_t probe = lo + step;
      if (probe >= n) break;
      if (cond(probe)) {
        hi = probe;
        break;
      }
      lo = probe;
      step *= 2;
    }
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (cond(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

std::int64_t sample_sites_sparse(std::int64_t n, double t1, Stream& stream) {
  if (n < 1) throw std::invalid_argument("sample_sites_sparse: n must be >= 1");
  if (!(t1 >= 0.0)) throw std::invalid_argument("sample_sites_sparse: t1 must be >= 0");
  std::int64_t total = 0;
  for_each_occupied_strip(n, t1, stream, [&](std::int64_t, std::int64_t count) { total += count; });
  return total;
}

}  // namespace sheetsim
