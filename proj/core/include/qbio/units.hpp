#pragma once

#include <span>
#include <string>
#include <string_view>

#include "qbio/quantity.hpp"

namespace qbio::bounds {

// One accepted unit token. Values scale into SI on parse.
struct Unit {
  std::string_view symbol;
  double scale;
  Dimensions dims;
};

std::span<const Unit> unit_table();

// nullptr when the symbol is unknown.
const Unit* find_unit(std::string_view symbol);

// Parses "<number><unit>" (e.g. "1e-19g", "0.4nm", "100bp/s", "300 K").
// A bare number is dimensionless unless default_unit is given, in which case
// it is read in that unit. Unknown unit or malformed number -> ConfigError.
Quantity parse_quantity(std::string_view text, std::string_view default_unit = "");

// Value formatted in the given unit, e.g. format_in(v, "cm/s").
double convert_to(const Quantity& q, std::string_view unit_symbol);

}  // namespace qbio::bounds
