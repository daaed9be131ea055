#pragma once

#include "sheetsim/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sheetsim {

/// Overrides for a suite run. Unset sizes fall back to the suite defaults.
struct SuiteOptions {
  std::uint64_t seed = 20240601;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> replicates;
  int threads = 1;
};

using SuiteRunner = std::vector<ReportRecord> (*)(const SuiteOptions&);

struct SuiteInfo {
  std::string name;
  int criterion = 0;
  std::string summary;
  SuiteRunner run = nullptr;
};

/// Named suites in criterion order.
const std::vector<SuiteInfo>& verification_suites();

/// Lookup by name or by criterion number ("6"); nullptr when unknown.
const SuiteInfo* find_suite(std::string_view name);

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// an unknown name.
std::vector<ReportRecord> run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace sheetsim
