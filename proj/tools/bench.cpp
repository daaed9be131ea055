// Dense vs sparse field kernels, serial reference loop vs OpenMP driver.

#include "sheetsim/coupling_field.hpp"
#include "sheetsim/replicates.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <vector>

int main(int argc, char** argv) {
  using namespace sheetsim;
  using Clock = std::chrono::steady_clock;

  CLI::App app{"sheetsim kernel benchmark"};
  std::vector<std::int64_t> sizes{1000, 10000, 100000};
  std::int64_t replicates = 200;
  int threads = 4;
  std::uint64_t seed = 1;
  app.add_option("--n", sizes, "Sample sizes")->delimiter(',');
  app.add_option("--replicates", replicates, "Replicates per timing")->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "Threads for the OpenMP driver")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Run seed");
  CLI11_PARSE(app, argc, argv);

  const GridSpec grid = GridSpec::default_grid();
  std::printf("%-8s %-10s %-8s %12s %14s\n", "kernel", "n", "threads", "total_ms", "us_per_rep");
  for (FieldKernel kernel : {FieldKernel::dense, FieldKernel::sparse}) {
    for (std::int64_t n : sizes) {
      auto body = [&](std::int64_t, Stream& s) { return build_coupled_field(n, grid, s, kernel).S.back(); };
      for (int t : {0, threads}) {
        const auto start = Clock::now();
        std::int64_t checksum = 0;
        if (t == 0) {
          for (auto v : run_replicates_serial(seed, replicates, body)) checksum += v;
        } else {
          for (auto v : run_replicates(seed, replicates, t, body)) checksum += v;
        }
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        std::printf("%-8s %-10lld %-8s %12.2f %14.2f  (checksum %lld)\n",
                    kernel == FieldKernel::dense ? "dense" : "sparse", static_cast<long long>(n),
                    t == 0 ? "serial" : std::to_string(t).c_str(), ms, 1000.0 * ms / static_cast<double>(replicates),
                    static_cast<long long>(checksum));
      }
    }
  }
  return 0;
}
