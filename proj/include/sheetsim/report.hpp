#pragma once

#include "sheetsim/coupling_field.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sheetsim {

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(std::string_view text);

struct RunConfig {
  std::uint64_t seed = 20240601;
  std::int64_t replicates = 1000;
  std::int64_t n = 1000;
  double t1 = 1.0;
  std::vector<double> t1_grid{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> t2_grid{0.0, 0.25, 0.5, 0.75, 1.0};
  int order = 8;
  OutputFormat format = OutputFormat::csv;
  std::string output_path;  // empty: standard output
  int threads = 1;
  std::string suite = "all";
  FieldKernel kernel = FieldKernel::dense;
  bool subtract_unit = false;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
  GridSpec grid() const { return GridSpec(t1_grid, t2_grid); }
};

/// How `pass` follows from the other fields of a record.
enum class Relation {
  abs,  // |estimate - target| <= tolerance
  le,   // estimate <= target + tolerance
  ge,   // estimate >= target - tolerance
};

std::string_view to_string(Relation relation);

struct ReportRecord {
  std::string check_id;
  double target = 0.0;
  double estimate = 0.0;
  double se = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::abs;
  bool pass = false;
  std::int64_t runtime_ms = 0;

  /// Builds a record with pass computed from the relation.
  static ReportRecord make(std::string check_id, double target, double estimate, double se,
                           double tolerance, Relation relation, std::int64_t runtime_ms = 0);

  bool recompute_pass() const;
};

/// Shortest round-trip decimal form of x.
std::string format_number(double x);

/// CSV columns: check_id,target,estimate,se,tolerance,relation,pass,runtime_ms.
void write_records_csv(std::ostream& out, std::span<const ReportRecord> records);
/// JSON array of objects with the CSV column names as keys.
void write_records_json(std::ostream& out, std::span<const ReportRecord> records);
void write_records(std::ostream& out, std::span<const ReportRecord> records, OutputFormat format);

}  // namespace sheetsim
