#include "sheetsim/report.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace sheetsim {

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format '" + std::string(text) + "' (csv|json)");
}

void RunConfig::validate() const {
  if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (!(t1 >= 0.0) || !std::isfinite(t1)) throw std::invalid_argument("t1 must be >= 0");
  if (order < 1 || order > 63) throw std::invalid_argument("order must lie in [1, 63]");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  (void)grid();
}

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::abs: return "abs";
    case Relation::le: return "le";
    case Relation::ge: return "ge";
  }
  return "abs";
}

ReportRecord ReportRecord::make(std::string check_id, double target, double estimate, double se,
                                double tolerance, Relation relation, std::int64_t runtime_ms) {
  ReportRecord r;
  r.check_id = std::move(check_id);
  r.target = target;
  r.estimate = estimate;
  r.se = se;
  r.tolerance = tolerance;
  r.relation = relation;
  r.runtime_ms = runtime_ms;
  r.pass = r.recompute_pass();
  return r;
}

bool ReportRecord::recompute_pass() const {
  switch (relation) {
    case Relation::abs: return std::abs(estimate - target) <= tolerance;
    case Relation::le: return estimate <= target + tolerance;
    case Relation::ge: return estimate >= target - tolerance;
  }
  return false;
}

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

// RFC 4180 quoting for fields that need it.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

void write_records_csv(std::ostream& out, std::span<const ReportRecord> records) {
  out << "check_id,target,estimate,se,tolerance,relation,pass,runtime_ms\n";
  for (const auto& r : records) {
    out << csv_field(r.check_id) << ',' << format_number(r.target) << ',' << format_number(r.estimate) << ','
        << format_number(r.se) << ',' << format_number(r.tolerance) << ',' << to_string(r.relation)
        << ',' << (r.pass ? "true" : "false") << ',' << r.runtime_ms << '\n';
  }
}

void write_records_json(std::ostream& out, std::span<const ReportRecord> records) {
  auto arr = nlohmann::json::array();
  for (const auto& r : records) {
    arr.push_back({{"check_id", r.check_id},
                   {"target", r.target},
                   {"estimate", r.estimate},
                   {"se", r.se},
                   {"tolerance", r.tolerance},
                   {"relation", std::string(to_string(r.relation))},
                   {"pass", r.pass},
                   {"runtime_ms", r.runtime_ms}});
  }
  out << arr.dump(2) << '\n';
}

void write_records(std::ostream& out, std::span<const ReportRecord> records, OutputFormat format) {
  if (format == OutputFormat::csv)
    write_records_csv(out, records);
  else
    write_records_json(out, records);
}

}  // namespace sheetsim
