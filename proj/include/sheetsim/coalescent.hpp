#pragma once

#include "sheetsim/random_stream.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace sheetsim {

/// floor(n^t) for n >= 1, t in [0, 1], robust at exact integer powers
/// (e.g. floor(10000^0.5) is 100, never 99).
std::int64_t floor_power(std::int64_t n, double t);

/// Temporal skeleton of one Kingman n-coalescent: holding times tau_k with k
/// lineages (k = 2..n) and cumulative branch lengths L_1 = 0,
/// L_k = L_{k-1} + k tau_k.
struct CoalescentPath {
  std::int64_t n = 1;
  std::vector<double> holding;  // holding[k-2] = tau_k
  std::vector<double> length;   // length[k-1] = L_k

  double tau(std::int64_t k) const { return holding.at(static_cast<std::size_t>(k - 2)); }
  double cumulative_length(std::int64_t k) const {
    return length.at(static_cast<std::size_t>(k - 1));
  }
  double total_length() const { return length.back(); }

  /// The k with L_{k-1} <= x < L_k; requires 0 <= x < L_n.
  std::int64_t strip_of(double x) const;
};

/// tau_k ~ Exponential(k(k-1)/2), independent, k = 2..n.
CoalescentPath sample_coalescent_times(std::int64_t n, Stream& stream);

/// Mutation counts M_2..M_n; S(n) = sum M_k.
struct MutationCounts {
  std::int64_t n = 1;
  std::vector<std::int64_t> counts;  // counts[k-2] = M_k

  std::int64_t at(std::int64_t k) const { return counts.at(static_cast<std::size_t>(k - 2)); }
  std::int64_t total() const;
};

/// Independent M_k ~ Geometric on N_0 with success (k-1)/(t1+k-1).
MutationCounts sample_mutations_geometric(std::int64_t n, double t1, Stream& stream);

/// Conditionally on the path, independent M_k ~ Poisson(t1 k tau_k / 2).
MutationCounts sample_mutations_conditional(const CoalescentPath& path, double t1, Stream& stream);

/// F_n(t) = H*_{floor(n^t)-1} / log n with H*_m = sum_{k=2}^{m} 1/k (zero for m <= 1).
double compute_F_n(std::int64_t n, double t);

/// Smallest m in (k, n] with M_m(y) >= 1 given the uniform log_u drawn for
/// this skip, or n + 1 if none. Occupancy events are independent with
/// probabilities y/(y+m-1); the skip inverts their joint survival function
/// prod_{j=k+1}^{m} (j-1)/(y+j-1) = [G(m)/G(y+m)] / [G(k)/G(y+k)].
std::int64_t next_occupied_strip(std::int64_t k, std::int64_t n, double y, double log_u);

/// Visits (k, M_k(y)) for every k in [2, n] with M_k(y) >= 1, in increasing k.
/// Same joint law as drawing every M_k(y) from sample_mutations_geometric,
/// at cost proportional to the number of occupied strips.
template <class Visit>
void for_each_occupied_strip(std::int64_t n, double y, Stream& stream, Visit&& visit) {
  if (!(y > 0.0) || n < 2) return;
  std::int64_t k = 1;
  for (;;) {
    k = next_occupied_strip(k, n, y, std::log(stream.uniform_open()));
    if (k > n) return;
    const double success = static_cast<double>(k - 1) / (y + static_cast<double>(k - 1));
    visit(k, 1 + stream.geometric(success));
  }
}

/// S(n) at mutation parameter t1 via for_each_occupied_strip.
std::int64_t sample_sites_sparse(std::int64_t n, double t1, Stream& stream);

}  // namespace sheetsim
