#include "sheetsim/random_stream.hpp"
#include "sheetsim/stats.hpp"

#include <boost/math/distributions/normal.hpp>

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace sheetsim;

TEST_SUITE("stats") {
  TEST_CASE("summaries of tiny samples") {
    const std::vector<double> c(10, 3.5);
    const auto s = summarize(c, 6);
    CHECK(s.cumulants[0] == doctest::Approx(3.5));
    for (int j = 1; j < 6; ++j) CHECK(std::abs(s.cumulants[j]) <= 1e-12);
    const auto two = summarize(std::vector<double>{0.0, 2.0}, 2);
    CHECK(two.cumulants[0] == 1.0);
    CHECK(two.cumulants[1] == 1.0);
    CHECK(two.central_moments[1] == 1.0);
    CHECK(two.raw_moments[1] == doctest::Approx(2.0));
    CHECK_THROWS_AS(summarize(std::vector<double>{}, 2), std::invalid_argument);
    CHECK_THROWS(summarize(c, 9));
  }

  TEST_CASE("moment and cumulant recursions invert each other") {
    std::mt19937_64 gen(3);
    std::gamma_distribution<double> gamma(2.0, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> xs(500);
      for (auto& x : xs) x = gamma(gen);
      const auto s = summarize(xs, 6);
      const auto m = cumulants_to_moments(s.cumulants);
      for (int r = 0; r < 6; ++r) CHECK(m[r] == doctest::Approx(s.raw_moments[r]).epsilon(1e-10));
      const auto k = moments_to_cumulants(s.raw_moments);
      for (int r = 0; r < 6; ++r) CHECK(std::abs(k[r] - s.cumulants[r]) <= 1e-8 * std::max(1.0, std::abs(s.raw_moments[r])));
    }
  }

  TEST_CASE("known laws") {
    Stream s(4);
    const int R = 100000;
    std::vector<double> pois(R), gam(R);
    for (auto& x : pois) x = static_cast<double>(s.poisson(3.0));
    std::gamma_distribution<double> gamma(2.5, 1.0 / 1.5);  // shape alpha, rate beta = 1.5
    for (auto& x : gam) x = gamma(s.engine());
    const auto p = summarize(pois, 3);
    for (int j = 0; j < 3; ++j) CHECK(std::abs(p.cumulants[j] - 3.0) <= 5.0 * p.se[j]);
    const auto g = summarize(gam, 4);
    double fact = 1.0;
    for (int j = 1; j <= 4; ++j) {
      if (j > 1) fact *= j - 1;
      CHECK(std::abs(g.cumulants[j - 1] - 2.5 * fact / std::pow(1.5, j)) <= 5.0 * g.se[j - 1]);
    }
  }

  TEST_CASE("power sums merge exactly") {
    Stream s(5);
    PowerSums all(4, 2.0), left(4, 2.0), right(4, 2.0);
    std::vector<double> xs(1000);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      xs[i] = 2.0 + s.normal();
      all.add(xs[i]);
      (i < 400 ? left : right).add(xs[i]);
    }
    left.merge(right);
    CHECK(left.count() == 1000);
    const auto a = all.central_moments();
    const auto b = left.central_moments();
    for (int r = 0; r < 4; ++r) CHECK(a[r] == doctest::Approx(b[r]).epsilon(1e-12));
    const auto ref = summarize(xs, 4);
    for (int r = 1; r < 4; ++r) CHECK(a[r] == doctest::Approx(ref.central_moments[r]).epsilon(1e-10));
    const auto raw = all.raw_moments();
    for (int r = 0; r < 4; ++r) CHECK(raw[r] == doctest::Approx(ref.raw_moments[r]).epsilon(1e-10));
    CHECK_THROWS(left.merge(PowerSums(4, 0.0)));
  }

  TEST_CASE("cross covariance") {
    Stream s(6);
    std::vector<double> a(5000), b(5000);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = s.normal();
      b[i] = s.normal();
    }
    const auto self = cross_covariance(a, a);
    CHECK(self.estimate == doctest::Approx(summarize(a, 2).variance()).epsilon(1e-12));
    std::vector<double> twice(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) twice[i] = 2.0 * b[i];
    CHECK(cross_covariance(twice, b).estimate == doctest::Approx(2.0 * summarize(b, 2).variance()).epsilon(1e-12));
    CHECK_THROWS(cross_covariance(a, std::vector<double>(3, 0.0)));

    std::vector<double> x(100000), y(100000);
    for (auto& v : x) v = s.normal();
    for (auto& v : y) v = s.normal();
    const auto ind = cross_covariance(x, y);
    CHECK(std::abs(ind.estimate) <= 4.0 * ind.se);
    CHECK(ind.se == doctest::Approx(1.0 / std::sqrt(100000.0)).epsilon(0.2));
  }

  TEST_CASE("covariance matrix") {
    Stream s(7);
    std::vector<std::vector<double>> cols(3, std::vector<double>(2000));
    for (std::size_t i = 0; i < 2000; ++i) {
      const double z = s.normal();
      cols[0][i] = z;
      cols[1][i] = z + s.normal();
      cols[2][i] = s.normal();
    }
    const auto m = covariance_matrix(cols);
    CHECK(m.dim == 3);
    CHECK(m.at(0, 1) == m.at(1, 0));
    CHECK(m.at(0, 1) == doctest::Approx(covariance(cols[0], cols[1])).epsilon(1e-12));
    CHECK(m.se_at(0, 1) > 0.0);
  }

  TEST_CASE("Kolmogorov-Smirnov statistic") {
    CHECK(ks_statistic(std::vector<double>{0.0}) == doctest::Approx(0.5));
    const int m = 100;
    boost::math::normal_distribution<double> nd;
    std::vector<double> q(m);
    for (int i = 1; i <= m; ++i) q[i - 1] = boost::math::quantile(nd, (i - 0.5) / m);
    CHECK(ks_statistic(q) <= 0.5 / m + 1e-12);
    for (auto& v : q) v += 10.0;
    CHECK(ks_statistic(q) > 0.99);
    CHECK_THROWS(ks_statistic(std::vector<double>{}));
  }

  TEST_CASE("two-sample chi-square") {
    const std::vector<std::int64_t> h{30, 50, 80, 40, 10};
    const auto same = chi_square_two_sample(h, h);
    CHECK(same.statistic == 0.0);
    CHECK(same.dof == 4);

    const std::vector<std::int64_t> a{500, 500, 0, 0}, b{0, 0, 500, 500};
    CHECK(chi_square_two_sample(a, b).statistic >= 2000.0);

    Stream s(8);
    std::vector<std::int64_t> x(20, 0), y(20, 0);
    for (int i = 0; i < 100000; ++i) {
      const auto v = std::min<std::int64_t>(19, s.poisson(6.0));
      (i % 2 ? x : y)[v]++;
    }
    const auto c = chi_square_two_sample(x, y);
    CHECK(c.statistic < chi_square_critical(c.dof));

    const std::vector<std::int64_t> zero(4, 0);
    CHECK_THROWS(chi_square_two_sample(zero, zero));
    CHECK_THROWS(chi_square_two_sample(h, zero));
    CHECK_THROWS(chi_square_two_sample(h, std::vector<std::int64_t>{1, 2}));
  }

  TEST_CASE("pooling merges sparse tails") {
    const std::vector<std::int64_t> a{100, 100, 2, 1, 1}, b{100, 100, 1, 2, 0};
    const auto c = chi_square_two_sample(a, b);
    CHECK(c.dof == 1);  // tail merges into the second bin
  }

  TEST_CASE("goodness of fit and critical values") {
    CHECK(chi_square_critical(1) == doctest::Approx(10.8276).epsilon(1e-4));
    CHECK(chi_square_critical(10) == doctest::Approx(29.5883).epsilon(1e-4));
    CHECK_THROWS(chi_square_critical(0));
    const std::vector<double> p{0.25, 0.25, 0.5};
    const std::vector<std::int64_t> exact{250, 250, 500};
    CHECK(chi_square_goodness_of_fit(exact, p).statistic == 0.0);
    CHECK(chi_square_goodness_of_fit(exact, p).dof == 2);
  }
}
