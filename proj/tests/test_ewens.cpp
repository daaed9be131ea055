#include "oracles.hpp"

#include "sheetsim/coupling_field.hpp"
#include "sheetsim/ewens.hpp"
#include "sheetsim/replicates.hpp"
#include "sheetsim/special_functions.hpp"
#include "sheetsim/stats.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

using namespace sheetsim;

namespace {

std::vector<std::int64_t> histogram(const std::vector<std::int64_t>& ks, std::int64_t n) {
  std::vector<std::int64_t> h(n, 0);
  for (auto k : ks) ++h[k - 1];
  return h;
}

}  // namespace

TEST_SUITE("ewens") {
  TEST_CASE("trivial sizes") {
    Stream s(1);
    for (int r = 0; r < 100; ++r) CHECK(sample_crp_cycles(1, 0.7, s).k == 1);
    for (int r = 0; r < 100; ++r) CHECK(sample_feller_cycles(2, 1e-12, s).k == 1);
    const auto one = exact_cycle_pmf(1, 2.0);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == 1.0);
    CHECK_THROWS(sample_feller_cycles(1, 1.0, s));
    CHECK_THROWS(sample_crp_cycles(3, 0.0, s));
    CHECK_THROWS(exact_cycle_pmf(31, 1.0));
    CHECK_THROWS(enumerate_cycle_pmf(9, 1.0));
  }

  TEST_CASE("exact pmf at n = 3") {
    const auto p = exact_cycle_pmf(3, 1.0);
    CHECK(p[0] == doctest::Approx(2.0 / 6.0));
    CHECK(p[1] == doctest::Approx(3.0 / 6.0));
    CHECK(p[2] == doctest::Approx(1.0 / 6.0));
    const auto counts = oracle::permutations_by_cycles(3);
    CHECK(counts == std::vector<std::uint64_t>{2, 3, 1});
  }

  TEST_CASE("exact pmf matches brute-force permutation counts") {
    for (int n = 1; n <= 8; ++n) {
      const auto counts = oracle::permutations_by_cycles(n);
      for (double t1 : {0.5, 1.0, 2.0}) {
        const auto dp = exact_cycle_pmf(n, t1);
        const auto lib = enumerate_cycle_pmf(n, t1);
        double norm = 1.0;
        for (int j = 0; j < n; ++j) norm *= t1 + j;
        for (int c = 1; c <= n; ++c) {
          const double brute = counts[c - 1] * std::pow(t1, c) / norm;
          CHECK(std::abs(dp[c - 1] - brute) <= 1e-10);
          CHECK(std::abs(lib[c - 1] - brute) <= 1e-10);
        }
      }
    }
  }

  TEST_CASE("exact pmf sums to one and has the Feller mean") {
    for (std::int64_t n : {2, 10, 30})
      for (double t1 : {0.3, 1.0, 4.0}) {
        const auto p = exact_cycle_pmf(n, t1);
        double total = 0.0, mean = 0.0, expect = 1.0;
        for (std::size_t k = 0; k < p.size(); ++k) {
          total += p[k];
          mean += (k + 1.0) * p[k];
        }
        for (std::int64_t k = 2; k <= n; ++k) expect += t1 / (t1 + k - 1.0);
        CHECK(std::abs(total - 1.0) <= 1e-12);
        CHECK(std::abs(mean - expect) <= 1e-12);
      }
  }

  TEST_CASE("sampler moments") {
    const std::int64_t R = 100000;
    const auto crp3 = run_replicates(2, R, 1, [](std::int64_t, Stream& s) { return sample_crp_cycles(3, 1.0, s).k; });
    const double p3 = std::count(crp3.begin(), crp3.end(), 3) / double(R);
    CHECK(std::abs(p3 - 1.0 / 6.0) <= 4.0 * std::sqrt((1.0 / 6.0) * (5.0 / 6.0) / R));

    const auto f2 = run_replicates(3, R, 1, [](std::int64_t, Stream& s) { return sample_feller_cycles(2, 1.0, s).k; });
    const double q2 = std::count(f2.begin(), f2.end(), 2) / double(R);
    CHECK(std::abs(q2 - 0.5) <= 4.0 * std::sqrt(0.25 / R));

    const auto crp50 = run_replicates(4, R, 1, [](std::int64_t, Stream& s) {
      return static_cast<double>(sample_crp_cycles(50, 1.0, s).k);
    });
    const auto m = summarize(crp50, 2);
    CHECK(std::abs(m.mean() - harmonic({1, 50, 1})) <= 4.0 * m.se[0]);
  }

  TEST_CASE("CRP, Feller and the coupled field agree in law") {
    const std::int64_t R = 100000;
    const std::int64_t n = 50;
    const auto crp = run_replicates(5, R, 1, [](std::int64_t, Stream& s) { return sample_crp_cycles(n, 1.0, s).k; });
    const auto fel = run_replicates(6, R, 1, [](std::int64_t, Stream& s) { return sample_feller_cycles(n, 1.0, s).k; });
    const GridSpec g({0.0, 1.0}, {0.0, 1.0});
    const auto fld = run_replicates(7, R, 1, [&](std::int64_t, Stream& s) { return build_coupled_field(n, g, s).K_at(1, 1); });
    const auto hc = histogram(crp, n), hf = histogram(fel, n), hd = histogram(fld, n);
    for (const auto& [a, b] : {std::pair{&hc, &hf}, std::pair{&hc, &hd}, std::pair{&hf, &hd}}) {
      const auto c = chi_square_two_sample(*a, *b);
      CHECK(c.statistic < chi_square_critical(c.dof));
    }
  }
}
