#pragma once

#include "qbio/quantity.hpp"

namespace qbio::constants {

// 2019 SI values.
inline constexpr double kHbar = 1.054571817e-34;      // J s
inline constexpr double kPlanck = 6.62607015e-34;     // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J/K
inline constexpr double kDalton = 1.66053907e-27;     // kg

// B-DNA rise per base pair, used for bp/s <-> m/s cross-checks.
inline constexpr double kBasePairLength = 0.34e-9;    // m

inline bounds::Quantity hbar() { return {kHbar, bounds::kAction}; }
inline bounds::Quantity planck() { return {kPlanck, bounds::kAction}; }
inline bounds::Quantity boltzmann() { return {kBoltzmann, bounds::kEnergyPerTemperature}; }
inline bounds::Quantity dalton() { return {kDalton, bounds::kMass}; }
inline bounds::Quantity base_pair_length() { return {kBasePairLength, bounds::kLength}; }

}  // namespace qbio::constants
