#pragma once

#include <cstdint>
#include <random>

namespace sheetsim {

/// SplitMix64 finalizer. Bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// Seed of the stream owned by replicate `index` under the run seed `seed`:
/// mix64(seed ^ mix64(index)). Streams never depend on scheduling order.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// A single random stream. Every sampler in the library takes one of these
/// explicitly; there is no global generator state.
class Stream {
 public:
  using engine_type = std::mt19937_64;

  explicit Stream(std::uint64_t seed) : seed_{seed}, engine_{seed} {}

  /// Stream for replicate `index` of a run seeded with `seed`.
  static Stream for_replicate(std::uint64_t seed, std::uint64_t index) {
    return Stream{derive_stream_seed(seed, index)};
  }

  /// Independent child stream labelled by `tag`.
  Stream substream(std::uint64_t tag) const {
    return Stream{derive_stream_seed(seed_, tag ^ 0xa5a5a5a5a5a5a5a5ULL)};
  }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on the open interval (0, 1).
  double uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform integer on [0, bound).
  std::uint64_t below(std::uint64_t bound);

  bool bernoulli(double p) { return uniform() < p; }

  /// Exponential with the given rate, by inversion.
  double exponential(double rate);

  /// Number of failures before the first success (support N_0), by
  /// inversion: floor(log U / log(1 - success)).
  std::int64_t geometric(double success);

  /// Poisson count. Inversion by sequential search below mean 30.
  std::int64_t poisson(double mean);

  double normal() { return normal_(engine_); }

  engine_type& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  engine_type engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace sheetsim
