#include "sheetsim/ewens.hpp"

#include "sheetsim/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sheetsim {

namespace {

void check_t1(double t1, const char* who) {
  if (!(t1 > 0.0) || !std::isfinite(t1))
    throw std::invalid_argument(std::string(who) + ": t1 must be positive");
}

int count_cycles(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = 1;
  }
  return cycles;
}

}  // namespace

CycleCountSample sample_crp_cycles(std::int64_t n, double t1, Stream& stream) {
  if (n < 1) throw std::invalid_argument("sample_crp_cycles: n must be >= 1");
  check_t1(t1, "sample_crp_cycles");
  std::int64_t k = 0;
  for (std::int64_t j = 0; j < n; ++j)
    if (stream.uniform() * (t1 + static_cast<double>(j)) < t1) ++k;
  return {n, t1, k};
}

CycleCountSample sample_feller_cycles(std::int64_t n, double t1, Stream& stream) {
  if (n < 2) throw std::invalid_argument("sample_feller_cycles: n must be >= 2");
  check_t1(t1, "sample_feller_cycles");
  std::int64_t k = 1;
  for (std::int64_t i = 2; i <= n; ++i)
    if (stream.bernoulli(t1 / (t1 + static_cast<double>(i - 1)))) ++k;
  return {n, t1, k};
}

std::vector<double> exact_cycle_pmf(std::int64_t n, double t1) {
  if (n < 1 || n > 30) throw std::invalid_argument("exact_cycle_pmf: n must lie in [1, 30]");
  check_t1(t1, "exact_cycle_pmf");
  // dist[c] = P(sum_{i=2}^{k} B_i = c)
  std::vector<double> dist{1.0};
  for (std::int64_t i = 2; i <= n; ++i) {
    const double p = t1 / (t1 + static_cast<double>(i - 1));
    std::vector<double> next(dist.size() + 1, 0.0);
    for (std::size_t c = 0; c < dist.size(); ++c) {
      next[c] += dist[c] * (1.0 - p);
      next[c + 1] += dist[c] * p;
    }
    dist = std::move(next);
  }
  return dist;
}

std::vector<double> enumerate_cycle_pmf(int n, double t1) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumerate_cycle_pmf: n must lie in [1, 8]");
  check_t1(t1, "enumerate_cycle_pmf");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> counts(static_cast<std::size_t>(n), 0.0);
  do {
    counts[static_cast<std::size_t>(count_cycles(perm) - 1)] += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  const double norm = rising_factorial(t1, n);
  std::vector<double> pmf(counts.size());
  for (std::size_t c = 0; c < counts.size(); ++c)
    pmf[c] = counts[c] * std::pow(t1, static_cast<double>(c + 1)) / norm;
  return pmf;
}

}  // namespace sheetsim
