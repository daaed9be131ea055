#include "sheetsim/commands.hpp"
#include "sheetsim/report.hpp"
#include "sheetsim/verification.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

constexpr int kUsageError = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace sheetsim;

  CLI::App app{"Coupled Ewens cycle counts and coalescent segregating sites"};
  app.set_config("--config", "", "TOML or INI file with option defaults; flags override it");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "csv";
  std::string kernel = "dense";
  app.add_option("--seed", config.seed, "Run seed")->capture_default_str();
  auto* replicates_opt =
      app.add_option("--replicates", config.replicates, "Number of replicates")->capture_default_str();
  auto* n_opt = app.add_option("--n", config.n, "Base sample size n")->capture_default_str();
  app.add_option("--t1", config.t1, "Mutation parameter for cumulants")->capture_default_str();
  app.add_option("--t1-grid", config.t1_grid, "Comma-separated t1 grid containing 0 and 1")->delimiter(',');
  app.add_option("--t2-grid", config.t2_grid, "Comma-separated t2 grid containing 0 and 1")->delimiter(',');
  app.add_option("--order", config.order, "Highest cumulant order")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--out", config.output_path, "Output file (default: standard output)");
  app.add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--suite", config.suite, "Verification suite name, criterion number, or 'all'")
      ->capture_default_str();
  app.add_option("--kernel", kernel, "Field kernel for simulate")
      ->check(CLI::IsMember({"dense", "sparse"}))
      ->capture_default_str();
  app.add_flag("--subtract-unit", config.subtract_unit, "Normalize K - 1 instead of K");

  auto* cumulants = app.add_subcommand("cumulants", "Exact cumulants of S(n), L_n and their limits");
  auto* simulate = app.add_subcommand("simulate", "Replicate-level coupled fields K(n,t), S(n,t)");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  auto* list = app.add_subcommand("list-suites", "List verification suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsageError;
  }

  if (list->parsed()) {
    for (const auto& s : verification_suites())
      std::cout << s.criterion << '\t' << s.name << '\t' << s.summary << '\n';
    return 0;
  }

  try {
    config.format = parse_output_format(format);
    config.kernel = kernel == "sparse" ? FieldKernel::sparse : FieldKernel::dense;

    std::ofstream file;
    if (!config.output_path.empty()) {
      file.open(config.output_path, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot open " << config.output_path << " for writing\n";
        return kUsageError;
      }
    }
    std::ostream& out = config.output_path.empty() ? std::cout : file;

    int status = 0;
    if (cumulants->parsed()) {
      cmd_cumulants(config, out);
    } else if (simulate->parsed()) {
      cmd_simulate(config, out);
    } else if (verify->parsed()) {
      std::optional<std::int64_t> n;
      std::optional<std::int64_t> r;
      if (n_opt->count() > 0) n = config.n;
      if (replicates_opt->count() > 0) r = config.replicates;
      status = cmd_verify(config, out, n, r);
    }
    out.flush();
    if (!out) {
      std::cerr << "error: write failed\n";
      return kUsageError;
    }
    return status;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
}
