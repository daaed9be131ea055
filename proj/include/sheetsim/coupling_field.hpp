#pragma once

#include "sheetsim/coalescent.hpp"
#include "sheetsim/random_stream.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sheetsim {

/// An index t = (t1, t2) of the two-parameter processes: t1 is the mutation
/// (Ewens) parameter, t2 the exponent of the sample size floor(n^t2).
struct GridPoint {
  double t1 = 0.0;
  double t2 = 0.0;
};

/// Evaluation grid. Both axes are strictly ascending subsets of [0, 1]
/// containing 0 and 1.
class GridSpec {
 public:
  GridSpec(std::vector<double> t1_values, std::vector<double> t2_values);

  /// {0, 1/cells, ..., 1} on both axes.
  static GridSpec uniform(int cells);
  /// {0, 0.25, 0.5, 0.75, 1}^2.
  static GridSpec default_grid() { return uniform(4); }

  const std::vector<double>& t1_values() const noexcept { return t1_; }
  const std::vector<double>& t2_values() const noexcept { return t2_; }
  std::size_t size1() const noexcept { return t1_.size(); }
  std::size_t size2() const noexcept { return t2_.size(); }
  std::size_t size() const noexcept { return t1_.size() * t2_.size(); }
  std::size_t flat(std::size_t i1, std::size_t i2) const noexcept { return i1 * t2_.size() + i2; }
  GridPoint point(std::size_t i1, std::size_t i2) const { return {t1_.at(i1), t2_.at(i2)}; }

  /// Index of an on-grid coordinate (within 1e-12); throws std::out_of_range otherwise.
  std::size_t index1(double t1) const;
  std::size_t index2(double t2) const;

 private:
  std::vector<double> t1_;
  std::vector<double> t2_;
};

struct FieldPoint {
  double x = 0.0;  // branch-length coordinate
  double y = 0.0;  // mutation-rate coordinate
};

/// One realization of the planar Poisson process with intensity 1/2 on
/// [0, x_max) x [0, y_max).
struct PointField {
  double x_max = 0.0;
  double y_max = 0.0;
  std::vector<FieldPoint> points;
};

PointField sample_point_field(double x_max, double y_max, Stream& stream);

/// M_k(t1): points of the field in [L_{k-1}, L_k) x [0, t1).
std::int64_t marginal_M(const PointField& field, const CoalescentPath& path, std::int64_t k,
                        double t1);

/// K(n, t) and S(n, t) of one coupled realization on every grid point,
/// stored row-major by (t1 index, t2 index).
struct TwoParamField {
  std::int64_t n = 0;
  GridSpec grid = GridSpec::default_grid();
  std::vector<std::int64_t> K;
  std::vector<std::int64_t> S;

  std::int64_t K_at(std::size_t i1, std::size_t i2) const { return K.at(grid.flat(i1, i2)); }
  std::int64_t S_at(std::size_t i1, std::size_t i2) const { return S.at(grid.flat(i1, i2)); }
};

/// Evaluates K and S on the grid for a given path and point field; the
/// field height must be at least the largest t1 of the grid.
TwoParamField coupled_field_from(const CoalescentPath& path, const PointField& field,
                                 const GridSpec& grid);

/// Reference construction: one coalescent path of size n and one point field
/// on [0, L_n) x [0, max t1) drive every grid point. For t on the grid,
/// S(n,t) = sum_{k=2}^{floor(n^t2)} M_k(t1) and
/// K(n,t) = 1 + sum_{k=2}^{floor(n^t2)} 1{M_k(t1) >= 1}.
TwoParamField build_coupled_field(std::int64_t n, const GridSpec& grid, Stream& stream);

/// Same law as build_coupled_field with the holding times integrated out:
/// only strips with at least one point are visited (for_each_occupied_strip),
/// their points placed uniformly in [0, max t1). O(log n) work per realization.
TwoParamField build_coupled_field_sparse(std::int64_t n, const GridSpec& grid, Stream& stream);

enum class FieldKernel { dense, sparse };

TwoParamField build_coupled_field(std::int64_t n, const GridSpec& grid, Stream& stream,
                                  FieldKernel kernel);

struct FieldViolations {
  std::int64_t cycles_exceed_sites = 0;  // K > 1 + S
  std::int64_t non_monotone_t1 = 0;
  std::int64_t non_monotone_t2 = 0;
  std::int64_t lower_boundary = 0;  // t2 = 0 but (K, S) != (1, 0)

  std::int64_t total() const {
    return cycles_exceed_sites + non_monotone_t1 + non_monotone_t2 + lower_boundary;
  }
};

FieldViolations check_field_invariants(const TwoParamField& field);

enum class FieldComponent { cycles, sites };

struct NormalizedField {
  std::int64_t n = 0;
  GridSpec grid = GridSpec::default_grid();
  std::vector<double> values;

  double at(std::size_t i1, std::size_t i2) const { return values.at(grid.flat(i1, i2)); }
};

/// ((X - unit) - t1 t2 log n) / sqrt(log n), with unit = 1 only for the cycle
/// field with subtract_unit set (that version vanishes on the lower boundary).
NormalizedField normalize_field(const TwoParamField& field, FieldComponent which,
                                bool subtract_unit = false);

/// Block (lo, hi] of the unit square.
struct Block {
  GridPoint lo;
  GridPoint hi;

  double area() const { return (hi.t1 - lo.t1) * (hi.t2 - lo.t2); }
};

/// X(hi1,hi2) - X(lo1,hi2) - X(hi1,lo2) + X(lo1,lo2) for a grid-valued field.
double block_increment(const GridSpec& grid, std::span<const double> values, const Block& block);
double block_increment(const NormalizedField& field, const Block& block);

/// Whether p lies in [0,1] x ({0} u [log 2 / log n, 1]).
bool in_corner_set(std::int64_t n, GridPoint p);

struct MomentBoundEstimate {
  double lhs_estimate = 0.0;
  double lhs_se = 0.0;
  double rhs = 0.0;
};

/// Monte Carlo estimate of E[|S(n,B)|^2 |S(n,C)|^2] for the normalized site
/// field over `replicates` coupled realizations (reference kernel), with the
/// bound (25/4) area(B) area(C). Every corner must satisfy in_corner_set.
MomentBoundEstimate moment_bound_estimate(std::int64_t n, const Block& b, const Block& c,
                                          std::int64_t replicates, std::uint64_t seed,
                                          int threads = 1);

// Exact finite-n moments of the coupled processes (unnormalized).

double expected_sites(std::int64_t n, GridPoint t);
double expected_cycles(std::int64_t n, GridPoint t);
/// Cov(S(n,s), S(n,t)) = min(s1,t1) H_{m-1} + s1 t1 H^{(2)}_{m-1}, m = floor(n^{min(s2,t2)}).
double sites_covariance(std::int64_t n, GridPoint s, GridPoint t);
/// Cov(K(n,s), S(n,t)).
double cycles_sites_covariance(std::int64_t n, GridPoint s, GridPoint t);
/// Cov(K(n,s), K(n,t)).
double cycles_covariance(std::int64_t n, GridPoint s, GridPoint t);

}  // namespace sheetsim
