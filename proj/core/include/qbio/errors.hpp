#pragma once

#include <stdexcept>

namespace qbio {

// Input is structurally well-formed but numerically unusable
// (zero vector, nonpositive mass, search space smaller than one item, ...).
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands disagree in Hilbert-space dimension or physical dimension.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configuration value is outside its accepted range or vocabulary.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The time integration left its reliability envelope; retry with smaller dt.
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pre- and post-selected states admit no intermediate measurement outcome.
class InconsistentSelection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qbio
