#include "qbio/bounds.hpp"

#include <cmath>
#include <string>

#include "qbio/constants.hpp"
#include "qbio/units.hpp"

namespace qbio::bounds {

namespace {

void require_dims(const Quantity& q, const Dimensions& dims, const char* name) {
  if (q.dims() != dims) {
    throw DimensionError(std::string(name) + ": expected " + dims.str() + ", got " +
                         q.dims().str());
  }
}

void require_positive(const Quantity& q, const char* name) {
  if (!(q.value() > 0.0)) {
    throw DegenerateInput(std::string(name) + " must be > 0");
  }
}

}  // namespace

ClockSpec::ClockSpec(Quantity mass_in, Quantity size_in)
    : mass(mass_in), size(size_in) {
  require_dims(mass, kMass, "ClockSpec.mass");
  require_dims(size, kLength, "ClockSpec.size");
  require_positive(mass, "ClockSpec.mass");
  require_positive(size, "ClockSpec.size");
}

ProteinSpec::ProteinSpec(long residues_in, Quantity mass_in, Quantity length_in)
    : residues(residues_in), residue_mass(mass_in), residue_length(length_in) {
  if (residues < 1) throw DegenerateInput("ProteinSpec.residues must be >= 1");
  require_dims(residue_mass, kMass, "ProteinSpec.residue_mass");
  require_dims(residue_length, kLength, "ProteinSpec.residue_length");
  require_positive(residue_mass, "ProteinSpec.residue_mass");
  require_positive(residue_length, "ProteinSpec.residue_length");
}

ProteinSpec ProteinSpec::with_defaults(long residues) {
  return ProteinSpec(residues, 110.0 * constants::dalton(), metres(0.4e-9));
}

MotorSpec::MotorSpec(Quantity mass_in, Quantity length_in, Quantity speed_in,
                     Quantity slope_in)
    : mass(mass_in),
      length(length_in),
      zero_load_speed(speed_in),
      tension_slope(slope_in) {
  require_dims(mass, kMass, "MotorSpec.mass");
  require_dims(length, kLength, "MotorSpec.length");
  require_dims(zero_load_speed, kFrequency, "MotorSpec.zero_load_speed");
  require_dims(tension_slope, Dimensions{-1, -1, 1, 0}, "MotorSpec.tension_slope");
  require_positive(mass, "MotorSpec.mass");
  require_positive(length, "MotorSpec.length");
  require_positive(zero_load_speed, "MotorSpec.zero_load_speed");
  require_positive(tension_slope, "MotorSpec.tension_slope");
}

MotorSpec MotorSpec::polymerase_defaults() {
  return MotorSpec(kilograms(1e-22), metres(1e-5), per_second(100.0),
                   Quantity(3.0e12, Dimensions{-1, -1, 1, 0}));
}

Quantity wigner_clock_limit(const ClockSpec& spec) {
  return spec.mass * spec.size * spec.size / constants::hbar();
}

Quantity folding_time_limit(const ProteinSpec& spec) {
  const double n = static_cast<double>(spec.residues);
  return spec.residue_mass * spec.residue_length * spec.residue_length *
         (n * n * n) / constants::hbar();
}

FoldingRegime parse_folding_regime(std::string_view name) {
  if (name == "extended") return FoldingRegime::extended;
  if (name == "compact") return FoldingRegime::compact;
  if (name == "subdomain") return FoldingRegime::subdomain;
  throw ConfigError("unknown folding regime '" + std::string(name) +
                    "' (expected extended|compact|subdomain)");
}

std::string_view folding_regime_name(FoldingRegime regime) {
  switch (regime) {
    case FoldingRegime::extended: return "extended";
    case FoldingRegime::compact: return "compact";
    case FoldingRegime::subdomain: return "subdomain";
  }
  throw ConfigError("unknown folding regime value");
}

FoldingScaling folding_scaling(long residues, FoldingRegime regime) {
  if (residues < 1) throw DegenerateInput("folding_scaling: N must be >= 1");
  double exponent = 0.0;
  switch (regime) {
    case FoldingRegime::extended: exponent = 3.0; break;
    case FoldingRegime::compact: exponent = 5.0 / 3.0; break;
    case FoldingRegime::subdomain: exponent = 7.0 / 3.0; break;
  }
  return {exponent, std::pow(static_cast<double>(residues), exponent)};
}

Quantity metabolic_rate(const Quantity& body_mass, double prefactor,
                        double exponent) {
  require_dims(body_mass, kMass, "metabolic_rate: body mass");
  require_positive(body_mass, "metabolic_rate: body mass");
  if (!(prefactor > 0.0)) {
    throw DegenerateInput("metabolic_rate: prefactor must be > 0");
  }
  if (!(exponent > 0.0) || !(exponent < 2.0)) {
    throw ConfigError("metabolic_rate: exponent must lie in (0, 2)");
  }
  return dimensionless(prefactor *
                       std::pow(body_mass.value_in(kilograms(1.0)), exponent));
}

Quantity quantized_energy(long n, const Quantity& angular_frequency) {
  if (n < 0) throw DegenerateInput("quantized_energy: n must be >= 0");
  require_dims(angular_frequency, kFrequency, "quantized_energy: omega");
  require_positive(angular_frequency, "quantized_energy: omega");
  return static_cast<double>(n) * constants::hbar() * angular_frequency;
}

Quantity motor_velocity_bound(const MotorSpec& spec) {
  return constants::hbar() / (spec.mass * spec.length);
}

TensionResponse motor_speed_under_tension(const Quantity& tension,
                                          const MotorSpec& spec) {
  return motor_speed_under_tension(tension, spec, Quantity(40e-12, kForce));
}

TensionResponse motor_speed_under_tension(const Quantity& tension,
                                          const MotorSpec& spec,
                                          const Quantity& reference_stall) {
  require_dims(tension, kForce, "motor_speed_under_tension: tension");
  require_dims(reference_stall, kForce, "motor_speed_under_tension: reference stall");
  require_positive(reference_stall, "motor_speed_under_tension: reference stall");
  if (tension.value() < 0.0) {
    throw DegenerateInput("motor_speed_under_tension: tension must be >= 0");
  }
  const Quantity stall = spec.zero_load_speed / spec.tension_slope;
  const Quantity linear = spec.zero_load_speed - spec.tension_slope * tension;
  const Quantity speed =
      linear.value() > 0.0 ? linear : per_second(0.0);
  return {speed, stall, reference_stall, stall.value_in(reference_stall)};
}

Quantity de_broglie(const Quantity& mass, const Quantity& speed) {
  require_dims(mass, kMass, "de_broglie: mass");
  require_dims(speed, kSpeed, "de_broglie: speed");
  require_positive(mass, "de_broglie: mass");
  require_positive(speed, "de_broglie: speed");
  return constants::planck() / (mass * speed);
}

Quantity thermal_decoherence_time(const Quantity& mass,
                                  const Quantity& temperature,
                                  const Quantity& separation,
                                  const Quantity& damping_rate) {
  require_dims(mass, kMass, "thermal_decoherence_time: mass");
  require_dims(temperature, kTemperature, "thermal_decoherence_time: temperature");
  require_dims(separation, kLength, "thermal_decoherence_time: separation");
  require_dims(damping_rate, kFrequency, "thermal_decoherence_time: damping rate");
  require_positive(mass, "thermal_decoherence_time: mass");
  require_positive(temperature, "thermal_decoherence_time: temperature");
  require_positive(separation, "thermal_decoherence_time: separation");
  require_positive(damping_rate, "thermal_decoherence_time: damping rate");
  const Quantity hbar = constants::hbar();
  return hbar * hbar /
         (2.0 * mass * damping_rate * constants::boltzmann() * temperature *
          separation * separation);
}

double barrier_transmission(const Quantity& energy, const Quantity& barrier_height,
                            const Quantity& width, const Quantity& mass) {
  require_dims(energy, kEnergy, "barrier_transmission: energy");
  require_dims(barrier_height, kEnergy, "barrier_transmission: barrier height");
  require_dims(width, kLength, "barrier_transmission: width");
  require_dims(mass, kMass, "barrier_transmission: mass");
  require_positive(energy, "barrier_transmission: energy");
  require_positive(barrier_height, "barrier_transmission: barrier height");
  require_positive(width, "barrier_transmission: width");
  require_positive(mass, "barrier_transmission: mass");

  const double e = energy.value();
  const double v0 = barrier_height.value();
  const double w = width.value();
  const double m = mass.value();
  const double hbar = constants::kHbar;

  // Relative detuning below this uses the E = V0 limit, where both exact
  // branches degenerate to 0/0.
  constexpr double kDegenerateBand = 1e-12;
  const double detuning = (e - v0) / v0;

  if (std::abs(detuning) <= kDegenerateBand) {
    return 1.0 / (1.0 + m * v0 * w * w / (2.0 * hbar * hbar));
  }
  if (e < v0) {
    const double kappa = std::sqrt(2.0 * m * (v0 - e)) / hbar;
    const double sh = std::sinh(kappa * w);
    return 1.0 / (1.0 + v0 * v0 * sh * sh / (4.0 * e * (v0 - e)));
  }
  const double k2 = std::sqrt(2.0 * m * (e - v0)) / hbar;
  const double sn = std::sin(k2 * w);
  return 1.0 / (1.0 + v0 * v0 * sn * sn / (4.0 * e * (e - v0)));
}

}  // namespace qbio::bounds
