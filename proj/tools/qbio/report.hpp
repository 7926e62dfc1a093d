#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qbio::cli {

enum class Format { table, csv, json };

Format parse_format(const std::string& name);  // ConfigError on unknown

// Uniform result container every subcommand fills in: echoed parameters,
// scalar results, and an optional numeric series (trajectory, CDF,
// histogram). Rendering is deterministic: insertion order is kept and all
// floating-point text goes through fixed printf formats.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, std::string>> results;

  std::vector<std::string> columns;        // empty -> no series
  std::vector<std::vector<double>> rows;

  void param(const std::string& key, const std::string& value);
  void result(const std::string& key, const std::string& value);
  void result(const std::string& key, const char* value);
  void result(const std::string& key, double value);       // %.17g
  void result(const std::string& key, long value);
  void result(const std::string& key, bool value);

  bool has_series() const { return !columns.empty(); }
};

// %.17g: round-trips doubles exactly.
std::string format_full(double value);
// %.8e: 9 significant digits, the CSV contract.
std::string format_sci9(double value);

// table: params/results block, series summarized.
// csv: "# key=value" config echo, then the series (or key,value pairs).
// json: one document; numbers carried as decimal strings for full precision.
void write_report(const Report& report, Format format, std::ostream& out);

}  // namespace qbio::cli
