#include "oracles.hpp"

#include "sheetsim/coupling_field.hpp"
#include "sheetsim/partition_cumulants.hpp"
#include "sheetsim/replicates.hpp"
#include "sheetsim/special_functions.hpp"
#include "sheetsim/stats.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace sheetsim;

namespace {

std::vector<double> column(const std::vector<TwoParamField>& fields, std::size_t a, std::size_t b, bool sites) {
  std::vector<double> out;
  for (const auto& f : fields) out.push_back(static_cast<double>(sites ? f.S_at(a, b) : f.K_at(a, b)));
  return out;
}

}  // namespace

TEST_SUITE("coupling_field") {
  TEST_CASE("grid validation and lookup") {
    CHECK_THROWS(GridSpec({0.0, 0.5}, {0.0, 1.0}));
    CHECK_THROWS(GridSpec({0.1, 1.0}, {0.0, 1.0}));
    CHECK_THROWS(GridSpec({0.0, 0.5, 0.5, 1.0}, {0.0, 1.0}));
    const auto g = GridSpec::default_grid();
    CHECK(g.size() == 25);
    CHECK(g.index1(0.75) == 3);
    CHECK_THROWS(g.index2(0.3));
  }

  TEST_CASE("point field counts") {
    Stream s(1);
    CHECK(sample_point_field(0.0, 1.0, s).points.empty());
    const std::int64_t R = 100000;
    const auto counts = run_replicates(2, R, 1, [](std::int64_t, Stream& st) {
      return static_cast<double>(sample_point_field(4.0, 1.0, st).points.size());
    });
    const auto c = summarize(counts, 2);
    CHECK(std::abs(c.mean() - 2.0) <= 4.0 * c.se[0]);
    CHECK(std::abs(c.variance() - c.mean()) <= 5.0 * c.se[1]);
  }

  TEST_CASE("field invariants hold on every realization for both kernels") {
    const auto g = GridSpec::default_grid();
    for (FieldKernel kernel : {FieldKernel::dense, FieldKernel::sparse}) {
      std::int64_t violations = 0;
      Stream s(3);
      for (int r = 0; r < 2000; ++r) violations += check_field_invariants(build_coupled_field(500, g, s, kernel)).total();
      CHECK(violations == 0);
    }
  }

  TEST_CASE("field equals strip sums of marginal_M on the same path and field") {
    Stream s(4);
    const GridSpec g({0.0, 0.3, 1.0}, {0.0, 0.5, 1.0});
    for (int r = 0; r < 50; ++r) {
      const auto path = sample_coalescent_times(60, s);
      const auto field = sample_point_field(path.total_length(), 1.0, s);
      const auto two = coupled_field_from(path, field, g);
      for (std::size_t a = 0; a < g.size1(); ++a)
        for (std::size_t b = 0; b < g.size2(); ++b) {
          const double t1 = g.t1_values()[a];
          const std::int64_t m = floor_power(60, g.t2_values()[b]);
          std::int64_t S = 0, K = 1;
          for (std::int64_t k = 2; k <= m; ++k) {
            const auto M = marginal_M(field, path, k, t1);
            S += M;
            K += M >= 1 ? 1 : 0;
          }
          CHECK(two.S_at(a, b) == S);
          CHECK(two.K_at(a, b) == K);
        }
      CHECK(marginal_M(field, path, 2, 0.0) == 0);
      CHECK(marginal_M(field, path, 3, 0.5) <= marginal_M(field, path, 3, 1.0));
    }
  }

  TEST_CASE("M_2(1) has the geometric(1/2) law") {
    const std::int64_t R = 100000;
    const auto m = run_replicates(5, R, 1, [](std::int64_t, Stream& st) {
      const auto path = sample_coalescent_times(10, st);
      return marginal_M(sample_point_field(path.total_length(), 1.0, st), path, 2, 1.0);
    });
    std::vector<double> freq(13, 0.0);
    for (auto v : m)
      if (v <= 12) freq[v] += 1.0 / R;
    for (int j = 0; j <= 12; ++j) {
      const double p = oracle::strip_pmf(2, 1.0, j);
      CHECK(p == doctest::Approx(std::ldexp(1.0, -(j + 1))).epsilon(1e-8));
      CHECK(std::abs(freq[j] - p) <= 4.0 * std::sqrt(p * (1 - p) / R));
    }
  }

  TEST_CASE("field means at (1,1)") {
    const auto g = GridSpec::default_grid();
    const auto fields = run_replicates(6, 10000, 1, [&](std::int64_t, Stream& st) { return build_coupled_field(10000, g, st); });
    const auto S = summarize(column(fields, 4, 4, true), 2);
    const auto K = summarize(column(fields, 4, 4, false), 2);
    CHECK(std::abs(S.mean() - sites_cumulant(1, 10000, 1.0)) <= 4.0 * S.se[0]);
    CHECK(std::abs(K.mean() - harmonic({1, 10000, 1})) <= 4.0 * K.se[0]);
  }

  TEST_CASE("dense and sparse kernels agree in law") {
    const auto g = GridSpec::default_grid();
    const std::int64_t R = 40000;
    const auto dense = run_replicates(7, R, 1, [&](std::int64_t, Stream& st) { return build_coupled_field(300, g, st); });
    const auto sparse = run_replicates(8, R, 1, [&](std::int64_t, Stream& st) { return build_coupled_field_sparse(300, g, st); });
    for (auto [a, b] : {std::pair{4, 4}, std::pair{2, 3}, std::pair{1, 4}}) {
      for (bool sites : {true, false}) {
        const auto x = summarize(column(dense, a, b, sites), 3);
        const auto y = summarize(column(sparse, a, b, sites), 3);
        for (int i = 0; i < 3; ++i) CHECK(std::abs(x.cumulants[i] - y.cumulants[i]) <= 5.0 * std::hypot(x.se[i], y.se[i]));
      }
    }
  }

  TEST_CASE("sites at (t1,1) match the geometric route") {
    const auto g = GridSpec::default_grid();
    const std::int64_t R = 100000;
    const auto fields = run_replicates(9, R, 1, [&](std::int64_t, Stream& st) { return build_coupled_field(1000, g, st); });
    const auto geo = run_replicates(10, R, 1, [](std::int64_t, Stream& st) {
      return static_cast<double>(sample_mutations_geometric(1000, 0.5, st).total());
    });
    const auto x = summarize(column(fields, 2, 4, true), 3);
    const auto y = summarize(geo, 3);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(x.cumulants[i] - y.cumulants[i]) <= 5.0 * std::hypot(x.se[i], y.se[i]));
      CHECK(std::abs(x.cumulants[i] - sites_cumulant(i + 1, 1000, 0.5)) <= 5.0 * x.se[i]);
    }
  }

  TEST_CASE("Var(M_k - B_k) bound") {
    const std::int64_t R = 100000;
    for (std::int64_t k : {2, 3, 5, 10}) {
      const auto d = run_replicates(11 + k, R, 1, [k](std::int64_t, Stream& st) {
        const auto path = sample_coalescent_times(k, st);
        const auto m = marginal_M(sample_point_field(path.total_length(), 1.0, st), path, k, 1.0);
        return static_cast<double>(m - (m >= 1 ? 1 : 0));
      });
      const auto s = summarize(d, 2);
      CHECK(s.variance() <= 5.0 / double((k - 1) * (k - 1)) + 4.0 * s.se[1]);
    }
  }

  TEST_CASE("normalization") {
    const auto g = GridSpec::default_grid();
    Stream s(20);
    const auto f = build_coupled_field(1000, g, s);
    const auto ns = normalize_field(f, FieldComponent::sites);
    const auto nk = normalize_field(f, FieldComponent::cycles, true);
    const double log_n = std::log(1000.0);
    for (std::size_t a = 0; a < 5; ++a) {
      CHECK(ns.at(a, 0) == 0.0);
      CHECK(nk.at(a, 0) == 0.0);
    }
    CHECK(ns.at(4, 4) == doctest::Approx((f.S_at(4, 4) - log_n) / std::sqrt(log_n)));
    CHECK(nk.at(2, 3) == doctest::Approx((f.K_at(2, 3) - 1.0 - 0.5 * 0.75 * log_n) / std::sqrt(log_n)));
    TwoParamField tiny;
    tiny.n = 1;
    CHECK_THROWS(normalize_field(tiny, FieldComponent::sites));
  }

  TEST_CASE("normalized variance at n = 1e5") {
    const auto g = GridSpec::default_grid();
    const auto v = run_replicates(21, 10000, 1, [&](std::int64_t, Stream& st) {
      return normalize_field(build_coupled_field_sparse(100000, g, st), FieldComponent::sites).at(4, 4);
    });
    const auto s = summarize(v, 2);
    CHECK(std::abs(s.variance() - sites_cumulant(2, 100000, 1.0) / std::log(1e5)) <= 5.0 * s.se[1]);
  }

  TEST_CASE("block increments") {
    const GridSpec g({0.0, 0.2, 0.7, 1.0}, {0.0, 0.3, 0.9, 1.0});
    std::vector<double> f(g.size());
    for (std::size_t a = 0; a < g.size1(); ++a)
      for (std::size_t b = 0; b < g.size2(); ++b) f[g.flat(a, b)] = g.t1_values()[a] * g.t2_values()[b];
    CHECK(block_increment(g, f, {{0.2, 0.3}, {0.7, 0.9}}) == doctest::Approx(0.3));
    CHECK(block_increment(g, f, {{0.2, 0.3}, {0.2, 0.3}}) == 0.0);
    // Additivity over neighbouring blocks.
    std::vector<double> r(g.size());
    Stream s(22);
    for (auto& x : r) x = s.normal();
    const Block B{{0.0, 0.3}, {0.2, 0.9}}, C{{0.2, 0.3}, {0.7, 0.9}}, U{{0.0, 0.3}, {0.7, 0.9}};
    CHECK(block_increment(g, r, U) == doctest::Approx(block_increment(g, r, B) + block_increment(g, r, C)));
    CHECK_THROWS(block_increment(g, r, {{0.7, 0.3}, {0.2, 0.9}}));
  }

  TEST_CASE("moment bound estimate") {
    const std::int64_t n = 10000;
    const double c = std::log(2.0) / std::log(double(n));
    CHECK(in_corner_set(n, {0.3, 0.0}));
    CHECK(in_corner_set(n, {0.3, c}));
    CHECK_FALSE(in_corner_set(n, {0.3, c / 2}));
    const Block B{{0.0, c}, {0.5, 0.5}}, C{{0.5, c}, {1.0, 0.5}};
    const auto e = moment_bound_estimate(n, B, C, 2000, 5);
    CHECK(e.rhs == doctest::Approx(25.0 / 4.0 * B.area() * C.area()));
    CHECK(e.lhs_estimate <= e.rhs + 4.0 * e.lhs_se);
    const auto swapped = moment_bound_estimate(n, C, B, 2000, 5);
    CHECK(swapped.lhs_estimate == doctest::Approx(e.lhs_estimate).epsilon(1e-12));
    const Block null{{0.5, 0.5}, {0.5, 1.0}};
    const auto z = moment_bound_estimate(n, null, C, 200, 6);
    CHECK(z.rhs == 0.0);
    CHECK(std::abs(z.lhs_estimate) <= 4.0 * z.lhs_se + 1e-300);
    CHECK_THROWS(moment_bound_estimate(n, {{0.0, c / 2}, {0.5, 0.5}}, C, 10, 1));
  }

  TEST_CASE("exact moments match strip-conditioning quadrature") {
    const double pts[][2] = {{0.25, 0.5}, {0.5, 1.0}, {1.0, 0.5}, {0.75, 0.75}, {1.0, 1.0}, {0.0, 1.0}};
    for (std::int64_t n : {2LL, 7LL, 30LL, 50LL})
      for (const auto& s : pts)
        for (const auto& t : pts) {
          const GridPoint gs{s[0], s[1]}, gt{t[0], t[1]};
          CHECK(sites_covariance(n, gs, gt) ==
                doctest::Approx(oracle::field_cov_SS(n, s[0], s[1], t[0], t[1])).epsilon(1e-9));
          CHECK(cycles_sites_covariance(n, gs, gt) ==
                doctest::Approx(oracle::field_cov_KS(n, s[0], s[1], t[0], t[1])).epsilon(1e-9));
          CHECK(cycles_covariance(n, gs, gt) ==
                doctest::Approx(oracle::field_cov_KK(n, s[0], s[1], t[0], t[1])).epsilon(1e-9));
        }
    CHECK(sites_covariance(1000, {1, 1}, {1, 1}) == doctest::Approx(sites_cumulant(2, 1000, 1.0)));
    CHECK(expected_sites(1000, {0.5, 1}) == doctest::Approx(sites_cumulant(1, 1000, 0.5)));
    CHECK(expected_cycles(30, {1, 1}) == doctest::Approx(harmonic({1, 30, 1})));
    CHECK(cycles_sites_covariance(100, {1, 1}, {1, 1}) == doctest::Approx(harmonic({1, 100, 1}) - 1.0));
  }

  TEST_CASE("empirical covariances match the exact values") {
    const auto g = GridSpec::default_grid();
    const std::int64_t R = 40000;
    const auto fields = run_replicates(23, R, 1, [&](std::int64_t, Stream& st) { return build_coupled_field(40, g, st); });
    const GridPoint s{0.5, 1.0}, t{1.0, 0.5};
    const auto ks = cross_covariance(column(fields, 2, 4, false), column(fields, 4, 2, true));
    CHECK(std::abs(ks.estimate - cycles_sites_covariance(40, s, t)) <= 5.0 * ks.se);
    const auto ss = cross_covariance(column(fields, 1, 3, true), column(fields, 3, 4, true));
    CHECK(std::abs(ss.estimate - sites_covariance(40, {0.25, 0.75}, {0.75, 1.0})) <= 5.0 * ss.se);
  }
}
