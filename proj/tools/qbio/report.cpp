#include "report.hpp"

#include <json.hpp>

#include <cstdio>

#include "qbio/errors.hpp"
#include "qbio/version.hpp"

namespace qbio::cli {

Format parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw ConfigError("--format: unknown format '" + name +
                    "' (expected table|csv|json)");
}

void Report::param(const std::string& key, const std::string& value) {
  params.emplace_back(key, value);
}
void Report::result(const std::string& key, const std::string& value) {
  results.emplace_back(key, value);
}
void Report::result(const std::string& key, const char* value) {
  results.emplace_back(key, std::string(value));
}
void Report::result(const std::string& key, double value) {
  results.emplace_back(key, format_full(value));
}
void Report::result(const std::string& key, long value) {
  results.emplace_back(key, std::to_string(value));
}
void Report::result(const std::string& key, bool value) {
  results.emplace_back(key, value ? "true" : "false");
}

std::string format_full(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string format_sci9(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8e", value);
  return buf;
}

namespace {

void write_table(const Report& r, std::ostream& out) {
  out << "qbio " << r.command << "\n";
  if (!r.params.empty()) {
    out << "  inputs:\n";
    for (const auto& [k, v] : r.params) out << "    " << k << " = " << v << "\n";
  }
  if (!r.results.empty()) {
    out << "  results:\n";
    for (const auto& [k, v] : r.results) out << "    " << k << " = " << v << "\n";
  }
  if (r.has_series()) {
    out << "  series: " << r.rows.size() << " rows (";
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
      if (c) out << ", ";
      out << r.columns[c];
    }
    out << "); final:";
    if (!r.rows.empty()) {
      for (const double v : r.rows.back()) out << ' ' << format_full(v);
    }
    out << "\n  (use --format csv or --output to export the series)\n";
  }
}

void write_csv(const Report& r, std::ostream& out) {
  out << "# command=" << r.command << "\n";
  for (const auto& [k, v] : r.params) out << "# " << k << "=" << v << "\n";
  if (r.has_series()) {
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
      if (c) out << ',';
      out << r.columns[c];
    }
    out << '\n';
    for (const auto& row : r.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << ',';
        out << format_sci9(row[c]);
      }
      out << '\n';
    }
    return;
  }
  out << "name,value\n";
  for (const auto& [k, v] : r.results) out << k << ',' << v << '\n';
}

void write_json(const Report& r, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["command"] = r.command;
  doc["version"] = qbio::kVersion;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  doc["params"] = std::move(params);
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.results) results[k] = v;
  doc["results"] = std::move(results);
  if (r.has_series()) {
    nlohmann::ordered_json series = nlohmann::ordered_json::object();
    series["columns"] = r.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
      nlohmann::ordered_json one = nlohmann::ordered_json::array();
      for (const double v : row) one.push_back(format_full(v));
      rows.push_back(std::move(one));
    }
    series["rows"] = std::move(rows);
    doc["series"] = std::move(series);
  }
  out << doc.dump(2) << '\n';
}

}  // namespace

void write_report(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::table: write_table(report, out); return;
    case Format::csv: write_csv(report, out); return;
    case Format::json: write_json(report, out); return;
  }
}

}  // namespace qbio::cli
