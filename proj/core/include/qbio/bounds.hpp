#pragma once

#include <string_view>

#include "qbio/quantity.hpp"

namespace qbio::bounds {

// ---------------------------------------------------------------------------
// Input specs. Constructors validate dimensions and positivity, so the
// estimators below can assume well-formed SI inputs.
// ---------------------------------------------------------------------------

// A clock of mass m and linear size l.
struct ClockSpec {
  Quantity mass;
  Quantity size;
  ClockSpec(Quantity mass, Quantity size);
};

// A peptide chain of N residues with per-residue mass and length.
// Defaults: 110 Da and 0.4 nm, a typical amino acid; both overridable.
struct ProteinSpec {
  long residues;
  Quantity residue_mass;
  Quantity residue_length;
  ProteinSpec(long residues, Quantity residue_mass, Quantity residue_length);
  static ProteinSpec with_defaults(long residues);
};

// A processive molecular motor: mass, length, zero-load stepping speed
// (steps/s) and the linear slowdown per unit applied tension.
struct MotorSpec {
  Quantity mass;
  Quantity length;
  Quantity zero_load_speed;   // 1/s (base pairs per second)
  Quantity tension_slope;     // (1/s)/N
  MotorSpec(Quantity mass, Quantity length, Quantity zero_load_speed,
            Quantity tension_slope);
  // 1e-19 g, 1e-3 cm, 100 bp/s, 3 bp/s/pN: a DNA polymerase.
  static MotorSpec polymerase_defaults();
};

// ---------------------------------------------------------------------------
// Closed-form estimators.
// ---------------------------------------------------------------------------

// Longest time a mass-m, size-l quantum clock stays coherent: T = m l^2 / hbar.
// Callers interpret the result as a strict upper bound.
Quantity wigner_clock_limit(const ClockSpec& spec);

// Clock-limit ceiling on one-step folding of an N-residue chain:
// T = m0 a^2 N^3 / hbar.
Quantity folding_time_limit(const ProteinSpec& spec);

enum class FoldingRegime { extended, compact, subdomain };

FoldingRegime parse_folding_regime(std::string_view name);  // ConfigError
std::string_view folding_regime_name(FoldingRegime regime);

struct FoldingScaling {
  double exponent;       // 3 (extended chain), 5/3 (compact), 7/3 (sub-domain)
  double relative_time;  // N^exponent, normalized to N = 1
};

FoldingScaling folding_scaling(long residues, FoldingRegime regime);

// Allometric law P = a W^beta with W in kg; the returned value carries the
// units of the prefactor a (the integer dimension vector cannot express
// kg^beta). beta outside (0, 2) -> ConfigError.
Quantity metabolic_rate(const Quantity& body_mass, double prefactor,
                        double exponent);

// E = n hbar omega.
Quantity quantized_energy(long n, const Quantity& angular_frequency);

// Characteristic clock-limited speed v = hbar / (m L). The inequality
// direction is left to the caller: the same number reads as a floor for a
// clock-rate-limited motor and as a ceiling for a coherence-limited one.
Quantity motor_velocity_bound(const MotorSpec& spec);

struct TensionResponse {
  Quantity speed;            // steps/s at the applied tension, clipped at 0
  Quantity stall_force;      // v0 / slope, where the linear model hits zero
  Quantity reference_stall;  // measured stall used for the residual
  double stall_ratio;        // model stall / measured stall
};

// Linear slowdown model v(F) = max(0, v0 - k F). The model stall (v0/k)
// disagrees with the measured ~40 pN stall; the ratio is reported rather
// than hidden.
TensionResponse motor_speed_under_tension(const Quantity& tension,
                                          const MotorSpec& spec);
TensionResponse motor_speed_under_tension(const Quantity& tension,
                                          const MotorSpec& spec,
                                          const Quantity& reference_stall);

// lambda = h / (m v).
Quantity de_broglie(const Quantity& mass, const Quantity& speed);

// High-temperature quantum-Brownian-motion dephasing time over a coherent
// separation dx: tau = hbar^2 / (2 m gamma kB T dx^2). gamma is the bath
// damping rate; 1e12 1/s is a sensible default for a warm, wet environment.
Quantity thermal_decoherence_time(const Quantity& mass,
                                  const Quantity& temperature,
                                  const Quantity& separation,
                                  const Quantity& damping_rate);

// Rectangular-barrier transmission probability for a particle of mass m and
// energy E against height V0 and width w; exact for E<V0, E=V0, E>V0.
double barrier_transmission(const Quantity& energy, const Quantity& barrier_height,
                            const Quantity& width, const Quantity& mass);

}  // namespace qbio::bounds
