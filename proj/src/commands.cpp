#include "sheetsim/commands.hpp"

#include "sheetsim/coupling_field.hpp"
#include "sheetsim/partition_cumulants.hpp"
#include "sheetsim/replicates.hpp"
#include "sheetsim/verification.hpp"

#include <json.hpp>

#include <ostream>
#include <stdexcept>
#include <string>

namespace sheetsim {

namespace {

struct CumulantRow {
  std::string quantity;
  int order = 0;
  double value = 0.0;
};

}  // namespace

void cmd_cumulants(const RunConfig& config, std::ostream& out) {
  if (config.n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(config.t1 >= 0.0)) throw std::invalid_argument("t1 must be >= 0");
  if (config.order < 1 || config.order > 63) throw std::invalid_argument("order must lie in [1, 63]");

  std::vector<CumulantRow> rows;
  for (int i = 1; i <= config.order; ++i) rows.push_back({"S", i, sites_cumulant(i, config.n, config.t1)});
  if (config.n >= 2)
    for (int j = 1; j <= config.order; ++j) rows.push_back({"L", j, tree_length_cumulant(j, config.n)});
  if (config.t1 > 0.0)
    for (int j = 1; j <= config.order; ++j)
      rows.push_back({"scaled_S", j, scaled_sites_cumulant(j, config.n, config.t1)});
  for (int j = 2; j <= config.order; ++j) rows.push_back({"L_limit", j, tree_length_cumulant_limit(j)});

  if (config.format == OutputFormat::csv) {
    out << "quantity,order,value\n";
    for (const auto& r : rows) out << r.quantity << ',' << r.order << ',' << format_number(r.value) << '\n';
  } else {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back({{"quantity", r.quantity}, {"order", r.order}, {"value", r.value}});
    out << arr.dump(2) << '\n';
  }
}

void cmd_simulate(const RunConfig& config, std::ostream& out) {
  config.validate();
  const GridSpec grid = config.grid();
  const auto fields = run_replicates(config.seed, config.replicates, config.threads,
                                     [&](std::int64_t, Stream& s) {
                                       return build_coupled_field(config.n, grid, s, config.kernel);
                                     });

  const bool csv = config.format == OutputFormat::csv;
  if (csv) out << "replicate,t1,t2,K,S,K_norm,S_norm\n";
  auto arr = nlohmann::json::array();
  for (std::size_t r = 0; r < fields.size(); ++r) {
    const auto& f = fields[r];
    const auto kn = normalize_field(f, FieldComponent::cycles, config.subtract_unit);
    const auto sn = normalize_field(f, FieldComponent::sites);
    for (std::size_t a = 0; a < grid.size1(); ++a) {
      for (std::size_t b = 0; b < grid.size2(); ++b) {
        const GridPoint t = grid.point(a, b);
        if (csv) {
          out << r << ',' << format_number(t.t1) << ',' << format_number(t.t2) << ',' << f.K_at(a, b) << ','
              << f.S_at(a, b) << ',' << format_number(kn.at(a, b)) << ',' << format_number(sn.at(a, b))
              << '\n';
        } else {
          arr.push_back({{"replicate", r},
                         {"t1", t.t1},
                         {"t2", t.t2},
                         {"K", f.K_at(a, b)},
                         {"S", f.S_at(a, b)},
                         {"K_norm", kn.at(a, b)},
                         {"S_norm", sn.at(a, b)}});
        }
      }
    }
  }
  if (!csv) out << arr.dump(2) << '\n';
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::optional<std::int64_t> n,
               std::optional<std::int64_t> replicates) {
  if (config.suite != "all" && !find_suite(config.suite))
    throw std::invalid_argument("unknown suite '" + config.suite + "'");
  if (config.threads < 1) throw std::invalid_argument("threads must be >= 1");
  SuiteOptions options;
  options.seed = config.seed;
  options.threads = config.threads;
  options.n = n;
  options.replicates = replicates;
  const auto records = run_suite(config.suite, options);
  write_records(out, records, config.format);
  for (const auto& r : records)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace sheetsim
