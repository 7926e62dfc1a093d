#include "qbio/units.hpp"

#include <array>
#include <cstdlib>

#include "qbio/constants.hpp"

namespace qbio::bounds {

std::string Dimensions::str() const {
  static constexpr std::array<const char*, 4> names = {"kg", "m", "s", "K"};
  const std::array<int, 4> exps = {mass, length, time, temperature};
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += names[i];
    if (exps[i] != 1) out += '^' + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Quantity::str() const {
  std::string out = std::to_string(value_);
  const std::string d = dims_.str();
  if (d != "1") out += ' ' + d;
  return out;
}

namespace {

constexpr Dimensions kSpeedPerForce{-1, -1, 1, 0};  // (1/s)/N

// Longer symbols first so greedy lookup of compound tokens works.
constexpr std::array<Unit, 17> kUnits = {{
    {"bp/s/pN", 1e12, kSpeedPerForce},
    {"bp/s", 1.0, kFrequency},
    {"1/s", 1.0, kFrequency},
    {"m/s", 1.0, kSpeed},
    {"cm/s", 1e-2, kSpeed},
    {"kg", 1.0, kMass},
    {"Da", qbio::constants::kDalton, kMass},
    {"g", 1e-3, kMass},
    {"nm", 1e-9, kLength},
    {"cm", 1e-2, kLength},
    {"m", 1.0, kLength},
    {"\xc3\x85", 1e-10, kLength},  // Angstrom
    {"s", 1.0, kTime},
    {"K", 1.0, kTemperature},
    {"pN", 1e-12, kForce},
    {"N", 1.0, kForce},
    {"eV", 1.602176634e-19, kEnergy},
}};

// J overlaps nothing, appended via table copy below.
constexpr std::array<Unit, 18> kFullTable = {{
    kUnits[0], kUnits[1], kUnits[2], kUnits[3], kUnits[4], kUnits[5], kUnits[6],
    kUnits[7], kUnits[8], kUnits[9], kUnits[10], kUnits[11], kUnits[12],
    kUnits[13], kUnits[14], kUnits[15], kUnits[16],
    Unit{"J", 1.0, kEnergy},
}};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::span<const Unit> unit_table() { return kFullTable; }

const Unit* find_unit(std::string_view symbol) {
  for (const Unit& u : kFullTable) {
    if (u.symbol == symbol) return &u;
  }
  return nullptr;
}

Quantity parse_quantity(std::string_view text, std::string_view default_unit) {
  const std::string s{trim(text)};
  if (s.empty()) throw ConfigError("parse_quantity: empty value");

  const char* begin = s.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin) {
    throw ConfigError("parse_quantity: '" + s + "' does not start with a number");
  }

  const std::string_view unit = trim(std::string_view(end));
  if (unit.empty()) {
    if (default_unit.empty()) return dimensionless(value);
    const Unit* u = find_unit(default_unit);
    if (u == nullptr) {
      throw ConfigError("parse_quantity: unknown default unit '" +
                        std::string(default_unit) + "'");
    }
    return {value * u->scale, u->dims};
  }

  const Unit* u = find_unit(unit);
  if (u == nullptr) {
    throw ConfigError("parse_quantity: unknown unit '" + std::string(unit) + "'");
  }
  return {value * u->scale, u->dims};
}

double convert_to(const Quantity& q, std::string_view unit_symbol) {
  const Unit* u = find_unit(unit_symbol);
  if (u == nullptr) {
    throw ConfigError("convert_to: unknown unit '" + std::string(unit_symbol) + "'");
  }
  if (q.dims() != u->dims) {
    throw DimensionError("convert_to: quantity is " + q.dims().str() + ", unit '" +
                         std::string(unit_symbol) + "' is " + u->dims.str());
  }
  return q.value() / u->scale;
}

}  // namespace qbio::bounds
