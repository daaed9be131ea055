#include "sheetsim/verification.hpp"

#include "sheetsim/coalescent.hpp"
#include "sheetsim/commands.hpp"
#include "sheetsim/coupling_field.hpp"
#include "sheetsim/ewens.hpp"
#include "sheetsim/gaussian_sheet.hpp"
#include "sheetsim/partition_cumulants.hpp"
#include "sheetsim/replicates.hpp"
#include "sheetsim/special_functions.hpp"
#include "sheetsim/stats.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace sheetsim {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

double rel_error(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

std::string fmt(double x) { return format_number(x); }

std::string point_label(GridPoint p) { return "(" + fmt(p.t1) + ";" + fmt(p.t2) + ")"; }

// Seed of suite `criterion`; suites never share random streams except where
// noted.
std::uint64_t suite_seed(const SuiteOptions& o, std::uint64_t tag) {
  return derive_stream_seed(o.seed, 0x5317e000ULL + tag);
}

// 1 -------------------------------------------------------------------------

std::vector<ReportRecord> suite_exact_identities(const SuiteOptions&) {
  const auto start = Clock::now();
  double err_polylog = 0.0;
  double err_negbin = 0.0;
  for (double t1 : {0.5, 1.0, 2.0}) {
    for (std::int64_t n : {2LL, 10LL, 1000LL, 1000000LL}) {
      for (int i = 1; i <= 8; ++i) {
        const double a = sites_cumulant(i, n, t1);
        const double b = sites_cumulant_polylog(i, n, t1);
        CompensatedSum c;
        for (std::int64_t k = n - 1; k >= 1; --k)
          c.add(neg_binomial_cumulant(i, {1.0, t1 / (static_cast<double>(k) + t1)}));
        err_polylog = std::max(err_polylog, rel_error(a, b));
        err_negbin = std::max(err_negbin, rel_error(a, c.value()));
      }
    }
  }
  double err_total = 0.0;
  for (double a : {0.5, 1.0, 2.5})
    for (double p : {0.1, 0.25, 0.5, 0.9})
      for (int i = 1; i <= 8; ++i)
        err_total = std::max(err_total, rel_error(neg_binomial_cumulant(i, {a, p}),
                                                  neg_binomial_cumulant_via_total_cumulance(i, {a, p})));
  const auto ms = elapsed_ms(start);
  return {
      ReportRecord::make("sites_harmonic_vs_polylog", 0.0, err_polylog, 0.0, 1e-10, Relation::le, ms),
      ReportRecord::make("sites_harmonic_vs_negbin_sum", 0.0, err_negbin, 0.0, 1e-10, Relation::le, ms),
      ReportRecord::make("negbin_closed_vs_total_cumulance", 0.0, err_total, 0.0, 1e-10, Relation::le, ms),
      ReportRecord::make("runtime_s", 10.0, static_cast<double>(ms) / 1000.0, 0.0, 0.0, Relation::le, ms),
  };
}

// 2 -------------------------------------------------------------------------

std::vector<ReportRecord> suite_sites_moments(const SuiteOptions& o) {
  const auto start = Clock::now();
  const std::int64_t n = o.n.value_or(1000);
  const std::int64_t R = o.replicates.value_or(100000);
  const auto xs = run_replicates(suite_seed(o, 2), R, o.threads, [&](std::int64_t, Stream& s) {
    return static_cast<double>(sample_mutations_geometric(n, 1.0, s).total());
  });
  const auto sum = summarize(xs, 2);
  const auto h = harmonic_orders(1, n - 1, 2);
  const auto ms = elapsed_ms(start);
  return {
      ReportRecord::make("mean", h[0], sum.mean(), sum.se[0], 4.0 * sum.se[0], Relation::abs, ms),
      ReportRecord::make("variance", h[0] + h[1], sum.variance(), sum.se[1], 5.0 * sum.se[1],
                         Relation::abs, ms),
  };
}

// 3 -------------------------------------------------------------------------

std::vector<ReportRecord> suite_coupling_pathwise(const SuiteOptions& o) {
  const auto start = Clock::now();
  const std::int64_t n = o.n.value_or(10000);
  const std::int64_t R = o.replicates.value_or(10000);
  const GridSpec grid = GridSpec::default_grid();
  const auto v = run_replicates(suite_seed(o, 3), R, o.threads, [&](std::int64_t, Stream& s) {
    return check_field_invariants(build_coupled_field(n, grid, s));
  });
  FieldViolations total;
  for (const auto& x : v) {
    total.cycles_exceed_sites += x.cycles_exceed_sites;
    total.non_monotone_t1 += x.non_monotone_t1;
    total.non_monotone_t2 += x.non_monotone_t2;
    total.lower_boundary += x.lower_boundary;
  }
  const auto ms = elapsed_ms(start);
  auto rec = [&](const char* id, std::int64_t count) {
    return ReportRecord::make(id, 0.0, static_cast<double>(count), 0.0, 0.0, Relation::abs, ms);
  };
  return {rec("violations_K_le_1_plus_S", total.cycles_exceed_sites),
          rec("violations_monotone_t1", total.non_monotone_t1),
          rec("violations_monotone_t2", total.non_monotone_t2),
          rec("violations_lower_boundary", total.lower_boundary)};
}

// 4 -------------------------------------------------------------------------

std::vector<ReportRecord> suite_field_marginals(const SuiteOptions& o) {
  const auto start = Clock::now();
  const std::int64_t n = o.n.value_or(30);
  const std::int64_t R = o.replicates.value_or(100000);
  const GridSpec corners({0.0, 1.0}, {0.0, 1.0});
  struct Draw {
    std::int64_t m2 = 0;
    std::int64_t k = 0;
  };
  const auto draws = run_replicates(suite_seed(o, 4), R, o.threads, [&](std::int64_t, Stream& s) {
    const auto path = sample_coalescent_times(n, s);
    const auto field = sample_point_field(path.total_length(), 1.0, s);
    const auto two = coupled_field_from(path, field, corners);
    return Draw{marginal_M(field, path, 2, 1.0), two.K_at(1, 1)};
  });

  std::vector<std::int64_t> m2_hist(13, 0);
  std::vector<std::int64_t> k_hist(static_cast<std::size_t>(n), 0);
  for (const auto& d : draws) {
    if (d.m2 <= 12) ++m2_hist[static_cast<std::size_t>(d.m2)];
    ++k_hist[static_cast<std::size_t>(d.k - 1)];
  }
  const auto ms = elapsed_ms(start);
  std::vector<ReportRecord> out;
  const double r = static_cast<double>(R);
  for (int j = 0; j <= 12; ++j) {
    const double p = std::ldexp(1.0, -(j + 1));
    const double se = std::sqrt(p * (1.0 - p) / r);
    out.push_back(ReportRecord::make("M2_pmf[" + std::to_string(j) + "]", p,
                                     static_cast<double>(m2_hist[static_cast<std::size_t>(j)]) / r, se,
                                     4.0 * se, Relation::abs, ms));
  }
  const auto gof = chi_square_goodness_of_fit(k_hist, exact_cycle_pmf(n, 1.0));
  out.push_back(ReportRecord::make("K_field_vs_exact_pmf_chi2[dof=" + std::to_string(gof.dof) + "]",
                                   chi_square_critical(gof.dof), gof.statistic, 0.0, 0.0, Relation::le,
                                   ms));
  return out;
}

// 5 -------------------------------------------------------------------------

std::vector<std::int64_t> cycle_histogram(const std::vector<std::int64_t>& ks, std::int64_t n) {
  std::vector<std::int64_t> h(static_cast<std::size_t>(n), 0);
  for (auto k : ks) ++h.at(static_cast<std::size_t>(k - 1));
  return h;
}

std::vector<ReportRecord> suite_ewens_consistency(const SuiteOptions& o) {
  std::vector<ReportRecord> out;
  auto start = Clock::now();
  for (double t1 : {0.5, 1.0, 2.0}) {
    const auto dp = exact_cycle_pmf(8, t1);
    const auto brute = enumerate_cycle_pmf(8, t1);
    double diff = 0.0;
    for (std::size_t k = 0; k < dp.size(); ++k) diff = std::max(diff, std::abs(dp[k] - brute[k]));
    out.push_back(ReportRecord::make("pmf_dp_vs_enumeration[n=8;t1=" + fmt(t1) + "]", 0.0, diff, 0.0,
                                     1e-10, Relation::le, elapsed_ms(start)));
  }

  start = Clock::now();
  const std::int64_t n = o.n.value_or(50);
  const std::int64_t R = o.replicates.value_or(100000);
  const auto crp = run_replicates(suite_seed(o, 51), R, o.threads, [&](std::int64_t, Stream& s) {
    return sample_crp_cycles(n, 1.0, s).k;
  });
  const auto feller = run_replicates(suite_seed(o, 52), R, o.threads, [&](std::int64_t, Stream& s) {
    return sample_feller_cycles(n, 1.0, s).k;
  });
  const GridSpec corners({0.0, 1.0}, {0.0, 1.0});
  const auto field = run_replicates(suite_seed(o, 53), R, o.threads, [&](std::int64_t, Stream& s) {
    return build_coupled_field(n, corners, s).K_at(1, 1);
  });
  const auto h_crp = cycle_histogram(crp, n);
  const auto h_feller = cycle_histogram(feller, n);
  const auto h_field = cycle_histogram(field, n);
  const auto ms = elapsed_ms(start);
  auto pair = [&](const std::string& id, const auto& a, const auto& b) {
    const auto c = chi_square_two_sample(a, b);
    out.push_back(ReportRecord::make(id + "[dof=" + std::to_string(c.dof) + "]",
                                     chi_square_critical(c.dof), c.statistic, 0.0, 0.0, Relation::le, ms));
  };
  pair("crp_vs_feller_chi2", h_crp, h_feller);
  pair("crp_vs_field_chi2", h_crp, h_field);
  pair("feller_vs_field_chi2", h_feller, h_field);
  return out;
}

// 6, 7 ----------------------------------------------------------------------

// Normalized K and S columns (one per grid point of the default grid) from a
// sparse-kernel run; shared between the covariance suites.
struct JointColumns {
  GridSpec grid = GridSpec::default_grid();
  std::vector<std::vector<double>> K;
  std::vector<std::vector<double>> S;
};

const JointColumns& joint_run(std::int64_t n, std::int64_t R, std::uint64_t seed, int threads) {
  static std::map<std::tuple<std::int64_t, std::int64_t, std::uint64_t>, JointColumns> cache;
  const auto key = std::make_tuple(n, R, seed);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  JointColumns cols;
  const GridSpec& grid = cols.grid;
  const auto fields = run_replicates(seed, R, threads, [&](std::int64_t, Stream& s) {
    const auto f = build_coupled_field_sparse(n, grid, s);
    return std::make_pair(normalize_field(f, FieldComponent::cycles).values,
                          normalize_field(f, FieldComponent::sites).values);
  });
  cols.K.assign(grid.size(), std::vector<double>(static_cast<std::size_t>(R)));
  cols.S.assign(grid.size(), std::vector<double>(static_cast<std::size_t>(R)));
  for (std::size_t r = 0; r < fields.size(); ++r)
    for (std::size_t g = 0; g < grid.size(); ++g) {
      cols.K[g][r] = fields[r].first[g];
      cols.S[g][r] = fields[r].second[g];
    }
  return cache.emplace(key, std::move(cols)).first->second;
}

// Interior grid points (both coordinates > 0) in flat order.
std::vector<std::size_t> interior_points(const GridSpec& grid) {
  std::vector<std::size_t> idx;
  for (std::size_t a = 1; a < grid.size1(); ++a)
    for (std::size_t b = 1; b < grid.size2(); ++b) idx.push_back(grid.flat(a, b));
  return idx;
}

GridPoint point_of(const GridSpec& grid, std::size_t flat) {
  return grid.point(flat / grid.size2(), flat % grid.size2());
}

constexpr std::int64_t kTrendSizes[] = {100, 10000, 1000000};

std::uint64_t joint_seed(const SuiteOptions& o, std::int64_t n) {
  return derive_stream_seed(suite_seed(o, 6), static_cast<std::uint64_t>(n));
}

std::vector<ReportRecord> suite_sheet_covariance(const SuiteOptions& o) {
  auto start = Clock::now();
  const std::int64_t n = o.n.value_or(100000);
  const std::int64_t R = o.replicates.value_or(20000);
  std::vector<ReportRecord> out;

  const auto& run = joint_run(n, R, joint_seed(o, n), o.threads);
  const auto idx = interior_points(run.grid);
  std::vector<std::vector<double>> cols;
  for (auto i : idx) cols.push_back(run.S[i]);
  const auto cov = covariance_matrix(cols);
  const double log_n = std::log(static_cast<double>(n));
  auto ms = elapsed_ms(start);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i; j < idx.size(); ++j) {
      const GridPoint s = point_of(run.grid, idx[i]);
      const GridPoint t = point_of(run.grid, idx[j]);
      const double target = sites_covariance(n, s, t) / log_n;
      out.push_back(ReportRecord::make("cov_S" + point_label(s) + point_label(t), target, cov.at(i, j),
                                       cov.se_at(i, j), 5.0 * cov.se_at(i, j), Relation::abs, ms));
    }
  }

  start = Clock::now();
  std::vector<double> dist;
  for (std::int64_t m : kTrendSizes) {
    const auto& tr = joint_run(m, R, joint_seed(o, m), o.threads);
    std::vector<double> d;
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i; j < idx.size(); ++j) {
        const double emp = covariance(tr.S[idx[i]], tr.S[idx[j]]);
        d.push_back(std::abs(emp - sheet_covariance(point_of(tr.grid, idx[i]), point_of(tr.grid, idx[j]))));
      }
    dist.push_back(*std::max_element(d.begin(), d.end()));
  }
  ms = elapsed_ms(start);
  for (std::size_t i = 1; i < dist.size(); ++i)
    out.push_back(ReportRecord::make("sheet_distance_decreases[n=" + std::to_string(kTrendSizes[i - 1]) +
                                         "->" + std::to_string(kTrendSizes[i]) + "]",
                                     dist[i - 1], dist[i], 0.0, 0.0, Relation::le, ms));
  return out;
}

std::vector<ReportRecord> suite_joint_covariance(const SuiteOptions& o) {
  auto start = Clock::now();
  const std::int64_t n = o.n.value_or(100000);
  const std::int64_t R = o.replicates.value_or(20000);
  std::vector<ReportRecord> out;

  const auto& run = joint_run(n, R, joint_seed(o, n), o.threads);
  const GridPoint s{0.5, 1.0};
  const GridPoint t{1.0, 0.5};
  const auto& k_col = run.K[run.grid.flat(run.grid.index1(s.t1), run.grid.index2(s.t2))];
  const auto& s_col = run.S[run.grid.flat(run.grid.index1(t.t1), run.grid.index2(t.t2))];
  const auto est = cross_covariance(k_col, s_col);
  const double exact = cycles_sites_covariance(n, s, t) / std::log(static_cast<double>(n));
  auto ms = elapsed_ms(start);
  out.push_back(ReportRecord::make("cov_KS_limit" + point_label(s) + point_label(t),
                                   sheet_covariance(s, t), est.estimate, est.se, 5.0 * est.se + 0.1,
                                   Relation::abs, ms));
  out.push_back(ReportRecord::make("cov_KS_exact" + point_label(s) + point_label(t), exact, est.estimate,
                                   est.se, 5.0 * est.se, Relation::abs, ms));

  start = Clock::now();
  std::vector<double> corr;
  for (std::int64_t m : kTrendSizes) {
    const auto& tr = joint_run(m, R, joint_seed(o, m), o.threads);
    const std::size_t top = tr.grid.flat(tr.grid.size1() - 1, tr.grid.size2() - 1);
    corr.push_back(correlation(tr.K[top], tr.S[top]));
  }
  ms = elapsed_ms(start);
  for (std::size_t i = 1; i < corr.size(); ++i)
    out.push_back(ReportRecord::make("corr_KS_increases[n=" + std::to_string(kTrendSizes[i - 1]) + "->" +
                                         std::to_string(kTrendSizes[i]) + "]",
                                     corr[i - 1], corr[i], 0.0, 0.0, Relation::ge, ms));
  return out;
}

// 8 -------------------------------------------------------------------------

std::vector<ReportRecord> suite_marginal_clt(const SuiteOptions& o) {
  const auto start = Clock::now();
  const std::int64_t n = o.n.value_or(1000000);
  const std::int64_t R = o.replicates.value_or(100000);
  const auto h = harmonic_orders(1, n - 1, 2);
  const double mean = h[0];
  const double sd = std::sqrt(h[0] + h[1]);
  const auto z = run_replicates(suite_seed(o, 8), R, o.threads, [&](std::int64_t, Stream& s) {
    return (static_cast<double>(sample_sites_sparse(n, 1.0, s)) - mean) / sd;
  });
  const double ks = ks_statistic(z);
  return {ReportRecord::make("ks_standardized_S", 0.0, ks, 0.0, 0.02, Relation::le, elapsed_ms(start))};
}

// 9 -------------------------------------------------------------------------

std::vector<ReportRecord> suite_tree_length_limit(const SuiteOptions&) {
  const auto start = Clock::now();
  std::vector<ReportRecord> out;
  for (std::int64_t n : {3LL, 10LL, 50LL}) {
    for (int j = 1; j <= 5; ++j) {
      const double tree = tree_length_cumulant(j, n);
      auto gap = [&](double t1) { return std::abs(scaled_sites_cumulant(j, n, t1) - tree); };
      const std::string tag = "[j=" + std::to_string(j) + ";n=" + std::to_string(n) + "]";
      if (j == 1) {
        out.push_back(ReportRecord::make("scaled_mean_equals_tree_mean" + tag, 0.0, gap(100.0) / tree, 0.0,
                                         1e-12, Relation::le));
        continue;
      }
      out.push_back(ReportRecord::make("gap_ratio_t1_100_over_1000" + tag, 10.0, gap(100.0) / gap(1000.0),
                                       0.0, 2.0, Relation::abs));
      out.push_back(ReportRecord::make("relative_gap_t1_10000" + tag, 0.0, gap(10000.0) / tree, 0.0, 1e-3,
                                       Relation::le));
    }
  }
  const auto ms = elapsed_ms(start);
  for (auto& r : out) r.runtime_ms = ms;
  out.push_back(ReportRecord::make("runtime_s", 1.0, static_cast<double>(ms) / 1000.0, 0.0, 0.0,
                                   Relation::le, ms));
  return out;
}

// 10 ------------------------------------------------------------------------

std::vector<ReportRecord> suite_fn_bound(const SuiteOptions&) {
  std::vector<ReportRecord> out;
  for (std::int64_t n : {2LL, 3LL, 10LL, 1000LL, 1000000LL}) {
    const auto start = Clock::now();
    double worst = -1.0;
    std::int64_t decreases = 0;
    double prev = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double t = static_cast<double>(i) / 999.0;
      const double f = compute_F_n(n, t);
      worst = std::max(worst, f - t);
      if (i > 0 && f < prev) ++decreases;
      prev = f;
    }
    const auto ms = elapsed_ms(start);
    const std::string tag = "[n=" + std::to_string(n) + "]";
    out.push_back(ReportRecord::make("max_F_n_minus_t" + tag, 0.0, worst, 0.0, 0.0, Relation::le, ms));
    out.push_back(ReportRecord::make("F_n_decreases" + tag, 0.0, static_cast<double>(decreases), 0.0, 0.0,
                                     Relation::abs, ms));
  }
  return out;
}

// 11 ------------------------------------------------------------------------

std::vector<ReportRecord> suite_moment_bound(const SuiteOptions& o) {
  const std::int64_t n = o.n.value_or(10000);
  const std::int64_t R = o.replicates.value_or(10000);
  const double c = std::log(2.0) / std::log(static_cast<double>(n));
  const std::pair<Block, Block> pairs[] = {
      {{{0.0, c}, {0.5, 0.5}}, {{0.5, c}, {1.0, 0.5}}},
      {{{0.25, 0.5}, {0.75, 0.75}}, {{0.25, 0.75}, {0.75, 1.0}}},
      {{{0.0, 0.0}, {0.5, 0.5}}, {{0.0, 0.5}, {0.5, 1.0}}},
  };
  std::vector<ReportRecord> out;
  for (std::size_t i = 0; i < std::size(pairs); ++i) {
    const auto start = Clock::now();
    const auto& [b, blk] = pairs[i];
    const auto est = moment_bound_estimate(n, b, blk, R, derive_stream_seed(suite_seed(o, 11), i), o.threads);
    out.push_back(ReportRecord::make("moment_bound[pair=" + std::to_string(i + 1) + "]", est.rhs,
                                     est.lhs_estimate, est.lhs_se, 4.0 * est.lhs_se, Relation::le,
                                     elapsed_ms(start)));
  }
  return out;
}

// 12 ------------------------------------------------------------------------

std::vector<ReportRecord> suite_brownian_sheet(const SuiteOptions& o) {
  const auto start = Clock::now();
  const std::int64_t R = o.replicates.value_or(100000);
  const GridSpec grid = GridSpec::default_grid();
  const auto sheets = run_replicates(suite_seed(o, 12), R, o.threads, [&](std::int64_t, Stream& s) {
    return sample_sheet(grid, s).values;
  });
  auto column = [&](GridPoint p) {
    const std::size_t idx = grid.flat(grid.index1(p.t1), grid.index2(p.t2));
    std::vector<double> col(sheets.size());
    for (std::size_t r = 0; r < sheets.size(); ++r) col[r] = sheets[r][idx];
    return col;
  };
  const std::pair<GridPoint, GridPoint> pairs[] = {
      {{1.0, 1.0}, {1.0, 1.0}},     {{0.5, 1.0}, {1.0, 0.5}},   {{0.25, 0.75}, {0.5, 0.5}},
      {{0.5, 0.5}, {1.0, 1.0}},     {{0.75, 0.25}, {0.25, 0.75}}, {{1.0, 0.5}, {0.75, 1.0}},
  };
  std::vector<ReportRecord> out;
  for (const auto& [s, t] : pairs) {
    const auto est = cross_covariance(column(s), column(t));
    out.push_back(ReportRecord::make("cov_B" + point_label(s) + point_label(t), sheet_covariance(s, t),
                                     est.estimate, est.se, 4.0 * est.se, Relation::abs, elapsed_ms(start)));
  }
  const auto sum = summarize(column({1.0, 1.0}), 4);
  const auto ms = elapsed_ms(start);
  out.push_back(ReportRecord::make("kappa3_B(1;1)", 0.0, sum.cumulants[2], sum.se[2], 5.0 * sum.se[2],
                                   Relation::abs, ms));
  out.push_back(ReportRecord::make("kappa4_B(1;1)", 0.0, sum.cumulants[3], sum.se[3], 5.0 * sum.se[3],
                                   Relation::abs, ms));
  return out;
}

// 13 ------------------------------------------------------------------------

std::vector<ReportRecord> suite_determinism(const SuiteOptions& o) {
  std::vector<ReportRecord> out;
  for (FieldKernel kernel : {FieldKernel::dense, FieldKernel::sparse}) {
    const auto start = Clock::now();
    RunConfig config;
    config.seed = suite_seed(o, 13);
    config.n = o.n.value_or(1000);
    config.replicates = o.replicates.value_or(200);
    config.kernel = kernel;
    std::ostringstream serial, parallel;
    config.threads = 1;
    cmd_simulate(config, serial);
    config.threads = 8;
    cmd_simulate(config, parallel);
    const bool same = serial.str() == parallel.str() && !serial.str().empty();
    out.push_back(ReportRecord::make(std::string("simulate_threads_1_vs_8[") +
                                         (kernel == FieldKernel::dense ? "dense" : "sparse") + "]",
                                     0.0, same ? 0.0 : 1.0, 0.0, 0.0, Relation::abs, elapsed_ms(start)));
  }
  return out;
}

}  // namespace

const std::vector<SuiteInfo>& verification_suites() {
  static const std::vector<SuiteInfo> suites = {
      {"exact-identities", 1, "closed-form cumulant identities", suite_exact_identities},
      {"sites-moments", 2, "mean and variance of S(n), geometric route", suite_sites_moments},
      {"coupling-pathwise", 3, "pathwise order and monotonicity of the coupled field", suite_coupling_pathwise},
      {"field-marginals", 4, "M_2 and K marginals read off the field", suite_field_marginals},
      {"ewens-consistency", 5, "CRP, Feller and field cycle counts", suite_ewens_consistency},
      {"sheet-covariance", 6, "finite-n covariance of the normalized site field", suite_sheet_covariance},
      {"joint-covariance", 7, "K-S cross covariance and correlation trend", suite_joint_covariance},
      {"marginal-clt", 8, "KS distance of standardized S(n) to the normal", suite_marginal_clt},
      {"tree-length-limit", 9, "scaled site cumulants against tree length", suite_tree_length_limit},
      {"fn-bound", 10, "F_n(t) <= t", suite_fn_bound},
      {"moment-bound", 11, "fourth-moment bound on block increments", suite_moment_bound},
      {"brownian-sheet", 12, "Brownian sheet reference sampler", suite_brownian_sheet},
      {"determinism", 13, "thread-count independence of simulate", suite_determinism},
  };
  return suites;
}

const SuiteInfo* find_suite(std::string_view name) {
  for (const auto& s : verification_suites())
    if (s.name == name || std::to_string(s.criterion) == name) return &s;
  return nullptr;
}

std::vector<ReportRecord> run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "all") {
    std::vector<ReportRecord> all;
    for (const auto& s : verification_suites()) {
      for (auto& r : s.run(options)) {
        r.check_id = s.name + "/" + r.check_id;
        all.push_back(std::move(r));
      }
    }
    return all;
  }
  const SuiteInfo* suite = find_suite(name);
  if (!suite) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  return suite->run(options);
}

}  // namespace sheetsim
