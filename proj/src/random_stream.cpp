#include "sheetsim/random_stream.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sheetsim {

std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed ^ mix64(index));
}

std::uint64_t Stream::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Stream::below: bound must be positive");
  // Lemire's multiply-shift with rejection of the biased low range.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    const unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    if (static_cast<std::uint64_t>(m) >= threshold) return static_cast<std::uint64_t>(m >> 64);
  }
}

double Stream::exponential(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("Stream::exponential: rate must be positive");
  return -std::log(uniform_open()) / rate;
}

std::int64_t Stream::geometric(double success) {
  if (!(success > 0.0) || success > 1.0)
    throw std::invalid_argument("Stream::geometric: success probability must lie in (0, 1]");
  if (success == 1.0) return 0;
  const double draws = std::floor(std::log(uniform_open()) / std::log1p(-success));
  if (draws >= static_cast<double>(std::numeric_limits<std::int64_t>::max()))
    return std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(draws);
}

std::int64_t Stream::poisson(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean))
    throw std::invalid_argument("Stream::poisson: mean must be finite and nonnegative");
  if (mean == 0.0) return 0;
  if (mean >= 30.0) return std::poisson_distribution<std::int64_t>{mean}(engine_);
  const double u = uniform();
  double p = std::exp(-mean);
  double cdf = p;
  std::int64_t k = 0;
  while (u >= cdf) {
    ++k;
    p *= mean / static_cast<double>(k);
    cdf += p;
    if (p < 1e-300 && static_cast<double>(k) > mean) break;  // u beyond representable mass
  }
  return k;
}

}  // namespace sheetsim
