#include "sheetsim/gaussian_sheet.hpp"
#include "sheetsim/replicates.hpp"
#include "sheetsim/stats.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace sheetsim;

TEST_SUITE("gaussian_sheet") {
  TEST_CASE("covariance function") {
    CHECK(sheet_covariance({1, 1}, {1, 1}) == 1.0);
    CHECK(sheet_covariance({0, 0.7}, {1, 1}) == 0.0);
    CHECK(sheet_covariance({0.4, 0.0}, {0.3, 0.2}) == 0.0);
    CHECK(sheet_covariance({0.5, 0.5}, {1, 1}) == 0.25);
    CHECK_THROWS(sheet_covariance({1.5, 0.5}, {1, 1}));
  }

  TEST_CASE("samples vanish on the lower boundary") {
    Stream s(1);
    const GridSpec g({0.0, 0.1, 0.6, 1.0}, {0.0, 0.5, 1.0});
    for (int r = 0; r < 20; ++r) {
      const auto sh = sample_sheet(g, s);
      for (std::size_t a = 0; a < g.size1(); ++a) CHECK(sh.at(a, 0) == 0.0);
      for (std::size_t b = 0; b < g.size2(); ++b) CHECK(sh.at(0, b) == 0.0);
    }
  }

  TEST_CASE("empirical covariances and independent increments") {
    const auto g = GridSpec::default_grid();
    const std::int64_t R = 100000;
    const auto sheets = run_replicates(2, R, 1, [&](std::int64_t, Stream& s) { return sample_sheet(g, s); });
    auto col = [&](double t1, double t2) {
      std::vector<double> v;
      for (const auto& sh : sheets) v.push_back(sh.at(g.index1(t1), g.index2(t2)));
      return v;
    };
    const auto var = summarize(col(1, 1), 4);
    CHECK(std::abs(var.variance() - 1.0) <= 4.0 * var.se[1]);
    CHECK(std::abs(var.cumulants[2]) <= 5.0 * var.se[2]);
    CHECK(std::abs(var.cumulants[3]) <= 5.0 * var.se[3]);
    const auto c = cross_covariance(col(0.5, 1), col(1, 0.5));
    CHECK(std::abs(c.estimate - 0.25) <= 4.0 * c.se);

    const Block B{{0.0, 0.0}, {0.5, 0.5}}, C{{0.5, 0.25}, {1.0, 0.75}};
    std::vector<double> xb, xc;
    for (const auto& sh : sheets) {
      xb.push_back(block_increment(g, sh.values, B));
      xc.push_back(block_increment(g, sh.values, C));
    }
    const auto ind = cross_covariance(xb, xc);
    CHECK(std::abs(ind.estimate) <= 4.0 * ind.se);
    const auto vb = summarize(xb, 2);
    CHECK(std::abs(vb.variance() - B.area()) <= 4.0 * vb.se[1]);
  }
}
