#include "sheetsim/coupling_field.hpp"

#include "sheetsim/replicates.hpp"
#include "sheetsim/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace sheetsim {

namespace {

constexpr double kGridTol = 1e-12;

void validate_axis(const std::vector<double>& axis, const char* name) {
  const std::string label(name);
  if (axis.size() < 2) throw std::invalid_argument("GridSpec: " + label + " needs at least 0 and 1");
  if (axis.front() != 0.0 || axis.back() != 1.0)
    throw std::invalid_argument("GridSpec: " + label + " must start at 0 and end at 1");
  for (std::size_t i = 1; i < axis.size(); ++i)
    if (!(axis[i] > axis[i - 1]))
      throw std::invalid_argument("GridSpec: " + label + " must be strictly ascending");
}

std::size_t find_index(const std::vector<double>& axis, double v, const char* name) {
  for (std::size_t i = 0; i < axis.size(); ++i)
    if (std::abs(axis[i] - v) <= kGridTol) return i;
  throw std::out_of_range(std::string("GridSpec: ") + name + " value " + std::to_string(v) +
                          " is not on the grid");
}

void validate_n(std::int64_t n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
}

void validate_point(GridPoint t, const char* who) {
  if (!(t.t1 >= 0.0 && t.t1 <= 1.0 && t.t2 >= 0.0 && t.t2 <= 1.0))
    throw std::invalid_argument(std::string(who) + ": index outside [0,1]^2");
}

// Adds the contribution of strip k, whose points have mutation coordinates ys,
// to every grid point with floor(n^t2) >= k.
class FieldAccumulator {
 public:
  FieldAccumulator(std::int64_t n, const GridSpec& grid) : grid_(grid) {
    caps_.reserve(grid.size2());
    for (double t2 : grid.t2_values()) caps_.push_back(floor_power(n, t2));
    field_.n = n;
    field_.grid = grid;
    field_.K.assign(grid.size(), 1);
    field_.S.assign(grid.size(), 0);
    below_.resize(grid.size1());
  }

  void add_strip(std::int64_t k, std::span<const double> ys) {
    const auto first = static_cast<std::size_t>(
        std::lower_bound(caps_.begin(), caps_.end(), k) - caps_.begin());
    if (first == caps_.size()) return;
    const auto& t1 = grid_.t1_values();
    for (std::size_t a = 0; a < t1.size(); ++a) {
      std::int64_t c = 0;
      for (double y : ys) c += y < t1[a] ? 1 : 0;
      below_[a] = c;
    }
    for (std::size_t a = 0; a < t1.size(); ++a) {
      if (below_[a] == 0) continue;
      for (std::size_t b = first; b < caps_.size(); ++b) {
        const std::size_t idx = grid_.flat(a, b);
        field_.S[idx] += below_[a];
        field_.K[idx] += 1;
      }
    }
  }

  TwoParamField take() { return std::move(field_); }

 private:
  const GridSpec& grid_;
  std::vector<std::int64_t> caps_;
  std::vector<std::int64_t> below_;
  TwoParamField field_{0, GridSpec::default_grid(), {}, {}};
};

}  // namespace

GridSpec::GridSpec(std::vector<double> t1_values, std::vector<double> t2_values)
    : t1_(std::move(t1_values)), t2_(std::move(t2_values)) {
  validate_axis(t1_, "t1 axis");
  validate_axis(t2_, "t2 axis");
}

GridSpec GridSpec::uniform(int cells) {
  if (cells < 1) throw std::invalid_argument("GridSpec::uniform: cells must be >= 1");
  std::vector<double> axis(static_cast<std::size_t>(cells) + 1);
  for (int i = 0; i <= cells; ++i) axis[static_cast<std::size_t>(i)] = static_cast<double>(i) / cells;
  axis.back() = 1.0;
  return GridSpec(axis, axis);
}

std::size_t GridSpec::index1(double t1) const { return find_index(t1_, t1, "t1"); }
std::size_t GridSpec::index2(double t2) const { return find_index(t2_, t2, "t2"); }

PointField sample_point_field(double x_max, double y_max, Stream& stream) {
  if (!(x_max >= 0.0 && y_max >= 0.0))
    throw std::invalid_argument("sample_point_field: extents must be non-negative");
  PointField field;
  field.x_max = x_max;
  field.y_max = y_max;
  const std::int64_t count = stream.poisson(x_max * y_max / 2.0);
  field.points.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    // Rounding can push the product onto the open upper edge.
    const double x = std::min(x_max * stream.uniform(), std::nextafter(x_max, 0.0));
    const double y = std::min(y_max * stream.uniform(), std::nextafter(y_max, 0.0));
    field.points.push_back({x, y});
  }
  return field;
}

std::int64_t marginal_M(const PointField& field, const CoalescentPath& path, std::int64_t k,
                        double t1) {
  if (k < 2 || k > path.n) throw std::out_of_range("marginal_M: k outside [2, n]");
  if (t1 > field.y_max) throw std::invalid_argument("marginal_M: t1 exceeds the field height");
  const double lo = path.cumulative_length(k - 1);
  const double hi = path.cumulative_length(k);
  std::int64_t count = 0;
  for (const auto& p : field.points)
    if (p.x >= lo && p.x < hi && p.y < t1) ++count;
  return count;
}

TwoParamField coupled_field_from(const CoalescentPath& path, const PointField& field,
                                 const GridSpec& grid) {
  if (field.y_max < grid.t1_values().back())
    throw std::invalid_argument("coupled_field_from: field lower than the t1 grid");
  if (field.x_max != path.total_length())
    throw std::invalid_argument("coupled_field_from: field width differs from L_n");
  std::vector<std::pair<std::int64_t, double>> tagged;
  tagged.reserve(field.points.size());
  for (const auto& p : field.points) tagged.emplace_back(path.strip_of(p.x), p.y);
  std::sort(tagged.begin(), tagged.end());

  FieldAccumulator acc(path.n, grid);
  std::vector<double> ys;
  for (std::size_t i = 0; i < tagged.size();) {
    const std::int64_t k = tagged[i].first;
    ys.clear();
    for (; i < tagged.size() && tagged[i].first == k; ++i) ys.push_back(tagged[i].second);
    acc.add_strip(k, ys);
  }
  return acc.take();
}

TwoParamField build_coupled_field(std::int64_t n, const GridSpec& grid, Stream& stream) {
  validate_n(n, "build_coupled_field");
  const CoalescentPath path = sample_coalescent_times(n, stream);
  const PointField field = sample_point_field(path.total_length(), grid.t1_values().back(), stream);
  return coupled_field_from(path, field, grid);
}

TwoParamField build_coupled_field_sparse(std::int64_t n, const GridSpec& grid, Stream& stream) {
  validate_n(n, "build_coupled_field_sparse");
  const double y_max = grid.t1_values().back();
  FieldAccumulator acc(n, grid);
  std::vector<double> ys;
  for_each_occupied_strip(n, y_max, stream, [&](std::int64_t k, std::int64_t count) {
    ys.resize(static_cast<std::size_t>(count));
    for (auto& y : ys) y = std::min(y_max * stream.uniform(), std::nextafter(y_max, 0.0));
    acc.add_strip(k, ys);
  });
  return acc.take();
}

TwoParamField build_coupled_field(std::int64_t n, const GridSpec& grid, Stream& stream,
                                  FieldKernel kernel) {
  return kernel == FieldKernel::dense ? build_coupled_field(n, grid, stream)
                                      : build_coupled_field_sparse(n, grid, stream);
}

FieldViolations check_field_invariants(const TwoParamField& field) {
  FieldViolations v;
  const auto& g = field.grid;
  for (std::size_t a = 0; a < g.size1(); ++a) {
    for (std::size_t b = 0; b < g.size2(); ++b) {
      const auto K = field.K_at(a, b);
      const auto S = field.S_at(a, b);
      if (K > 1 + S) ++v.cycles_exceed_sites;
      if ((a == 0 || b == 0) && (K != 1 || S != 0)) ++v.lower_boundary;
      if (a > 0 && (K < field.K_at(a - 1, b) || S < field.S_at(a - 1, b))) ++v.non_monotone_t1;
      if (b > 0 && (K < field.K_at(a, b - 1) || S < field.S_at(a, b - 1))) ++v.non_monotone_t2;
    }
  }
  return v;
}

NormalizedField normalize_field(const TwoParamField& field, FieldComponent which,
                                bool subtract_unit) {
  if (field.n < 2) throw std::invalid_argument("normalize_field: n must be >= 2");
  const double log_n = std::log(static_cast<double>(field.n));
  const double scale = std::sqrt(log_n);
  const bool cycles = which == FieldComponent::cycles;
  const double unit = cycles && subtract_unit ? 1.0 : 0.0;
  NormalizedField out;
  out.n = field.n;
  out.grid = field.grid;
  out.values.resize(field.grid.size());
  for (std::size_t a = 0; a < field.grid.size1(); ++a) {
    for (std::size_t b = 0; b < field.grid.size2(); ++b) {
      const GridPoint t = field.grid.point(a, b);
      const std::size_t idx = field.grid.flat(a, b);
      const double x = static_cast<double>(cycles ? field.K[idx] : field.S[idx]);
      out.values[idx] = (x - unit - t.t1 * t.t2 * log_n) / scale;
    }
  }
  return out;
}

double block_increment(const GridSpec& grid, std::span<const double> values, const Block& block) {
  if (values.size() != grid.size())
    throw std::invalid_argument("block_increment: value count does not match the grid");
  if (block.lo.t1 > block.hi.t1 || block.lo.t2 > block.hi.t2)
    throw std::invalid_argument("block_increment: block corners out of order");
  const std::size_t a0 = grid.index1(block.lo.t1);
  const std::size_t a1 = grid.index1(block.hi.t1);
  const std::size_t b0 = grid.index2(block.lo.t2);
  const std::size_t b1 = grid.index2(block.hi.t2);
  return values[grid.flat(a1, b1)] - values[grid.flat(a0, b1)] - values[grid.flat(a1, b0)] +
         values[grid.flat(a0, b0)];
}

double block_increment(const NormalizedField& field, const Block& block) {
  return block_increment(field.grid, field.values, block);
}

bool in_corner_set(std::int64_t n, GridPoint p) {
  if (n < 2) return false;
  if (!(p.t1 >= 0.0 && p.t1 <= 1.0 && p.t2 >= 0.0 && p.t2 <= 1.0)) return false;
  const double floor2 = std::log(2.0) / std::log(static_cast<double>(n));
  return p.t2 == 0.0 || p.t2 >= floor2 - kGridTol;
}

MomentBoundEstimate moment_bound_estimate(std::int64_t n, const Block& b, const Block& c,
                                          std::int64_t replicates, std::uint64_t seed,
                                          int threads) {
  if (n < 2) throw std::invalid_argument("moment_bound_estimate: n must be >= 2");
  if (replicates < 2) throw std::invalid_argument("moment_bound_estimate: need >= 2 replicates");
  for (const Block* blk : {&b, &c}) {
    if (blk->lo.t1 > blk->hi.t1 || blk->lo.t2 > blk->hi.t2)
      throw std::invalid_argument("moment_bound_estimate: block corners out of order");
    for (GridPoint p : {blk->lo, blk->hi, GridPoint{blk->lo.t1, blk->hi.t2},
                        GridPoint{blk->hi.t1, blk->lo.t2}})
      if (!in_corner_set(n, p))
        throw std::invalid_argument("moment_bound_estimate: block corner outside the admissible set");
  }

  auto axis = [](std::vector<double> v) {
    v.push_back(0.0);
    v.push_back(1.0);
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v)
      if (out.empty() || x - out.back() > kGridTol) out.push_back(x);
    out.back() = 1.0;
    return out;
  };
  const GridSpec grid(axis({b.lo.t1, b.hi.t1, c.lo.t1, c.hi.t1}),
                      axis({b.lo.t2, b.hi.t2, c.lo.t2, c.hi.t2}));

  const auto products = run_replicates(seed, replicates, threads, [&](std::int64_t, Stream& s) {
    const auto norm = normalize_field(build_coupled_field(n, grid, s), FieldComponent::sites);
    const double xb = block_increment(norm, b);
    const double xc = block_increment(norm, c);
    return xb * xb * xc * xc;
  });

  CompensatedSum sum;
  for (double v : products) sum.add(v);
  const double r = static_cast<double>(replicates);
  const double mean = sum.value() / r;
  CompensatedSum dev;
  for (double v : products) dev.add((v - mean) * (v - mean));
  MomentBoundEstimate out;
  out.lhs_estimate = mean;
  out.lhs_se = std::sqrt(dev.value() / (r - 1.0) / r);
  out.rhs = 25.0 / 4.0 * b.area() * c.area();
  return out;
}

double expected_sites(std::int64_t n, GridPoint t) {
  validate_n(n, "expected_sites");
  validate_point(t, "expected_sites");
  const std::int64_t m = floor_power(n, t.t2);
  return m >= 2 ? t.t1 * harmonic({1, m - 1, 1}) : 0.0;
}

double expected_cycles(std::int64_t n, GridPoint t) {
  validate_n(n, "expected_cycles");
  validate_point(t, "expected_cycles");
  const std::int64_t m = floor_power(n, t.t2);
  CompensatedSum sum;
  for (std::int64_t k = m; k >= 2; --k) sum.add(t.t1 / (t.t1 + static_cast<double>(k - 1)));
  return 1.0 + sum.value();
}

double sites_covariance(std::int64_t n, GridPoint s, GridPoint t) {
  validate_n(n, "sites_covariance");
  validate_point(s, "sites_covariance");
  validate_point(t, "sites_covariance");
  const std::int64_t m = floor_power(n, std::min(s.t2, t.t2));
  if (m < 2) return 0.0;
  const auto h = harmonic_orders(1, m - 1, 2);
  return std::min(s.t1, t.t1) * h[0] + s.t1 * t.t1 * h[1];
}

double cycles_sites_covariance(std::int64_t n, GridPoint s, GridPoint t) {
  validate_n(n, "cycles_sites_covariance");
  validate_point(s, "cycles_sites_covariance");
  validate_point(t, "cycles_sites_covariance");
  const std::int64_t m = floor_power(n, std::min(s.t2, t.t2));
  const double a = s.t1;
  const double b = t.t1;
  CompensatedSum sum;
  for (std::int64_t k = m; k >= 2; --k) {
    const double lam = static_cast<double>(k - 1);
    const double den = lam + a;
    sum.add(a <= b ? a / den + (b - a) * a / (den * den) : b / den);
  }
  return sum.value();
}

double cycles_covariance(std::int64_t n, GridPoint s, GridPoint t) {
  validate_n(n, "cycles_covariance");
  validate_point(s, "cycles_covariance");
  validate_point(t, "cycles_covariance");
  const std::int64_t m = floor_power(n, std::min(s.t2, t.t2));
  const double a = std::min(s.t1, t.t1);
  const double b = std::max(s.t1, t.t1);
  CompensatedSum sum;
  for (std::int64_t k = m; k >= 2; --k) {
    const double lam = static_cast<double>(k - 1);
    sum.add(a / (lam + a) * lam / (lam + b));
  }
  return sum.value();
}

}  // namespace sheetsim
