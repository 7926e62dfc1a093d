#include <memory>

#include "commands.hpp"
#include "qbio/bounds.hpp"
#include "qbio/constants.hpp"
#include "qbio/units.hpp"

namespace qbio::cli {

using namespace qbio::bounds;

bounds::Quantity parse_flag_quantity(const std::string& flag,
                                     const std::string& text,
                                     const bounds::Dimensions& dims,
                                     const std::string& default_unit,
                                     bool require_positive) {
  Quantity q = dimensionless(0.0);
  try {
    q = parse_quantity(text, default_unit);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(flag + ": " + e.what());
  }
  if (q.dims() != dims) {
    throw DimensionError(flag + ": expected a quantity of dimension " + dims.str() +
                         ", got " + q.dims().str() + " from '" + text + "'");
  }
  if (require_positive && !(q.value() > 0.0)) {
    throw DegenerateInput(flag + ": must be > 0, got '" + text + "'");
  }
  return q;
}

namespace {

struct MotorFlags {
  std::string mass = "1e-19g";
  std::string length = "1e-3cm";
  std::string speed = "100bp/s";
  std::string slope = "3bp/s/pN";

  void attach(CLI::App* cmd) {
    cmd->add_option("--mass", mass, "motor mass (e.g. 1e-19g)")
        ->capture_default_str();
    cmd->add_option("--length", length, "motor length (e.g. 1e-3cm)")
        ->capture_default_str();
    cmd->add_option("--v0", speed, "zero-load stepping speed (bp/s)")
        ->capture_default_str();
    cmd->add_option("--slope", slope, "slowdown per unit tension (bp/s/pN)")
        ->capture_default_str();
  }

  MotorSpec build() const {
    return MotorSpec(parse_flag_quantity("--mass", mass, kMass, "kg"),
                     parse_flag_quantity("--length", length, kLength, "m"),
                     parse_flag_quantity("--v0", speed, kFrequency, "bp/s"),
                     parse_flag_quantity("--slope", slope,
                                         Dimensions{-1, -1, 1, 0}, "bp/s/pN"));
  }

  void echo(Report& r) const {
    r.param("mass", mass);
    r.param("length", length);
    r.param("v0", speed);
    r.param("slope", slope);
  }
};

}  // namespace

void register_bounds(CLI::App& app, CommandContext& ctx) {
  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds", "Closed-form physical bound and scaling-law estimators");
  bounds_cmd->require_subcommand(1);

  // clock -------------------------------------------------------------
  {
    auto mass = std::make_shared<std::string>();
    auto size = std::make_shared<std::string>();
    CLI::App* cmd = bounds_cmd->add_subcommand(
        "clock", "Coherence-time ceiling of a mass-m, size-l clock");
    cmd->add_option("--mass", *mass, "clock mass (e.g. 1e-22kg)")->required();
    cmd->add_option("--size", *size, "clock size (e.g. 1e-5m)")->required();
    cmd->callback([&ctx, mass, size] {
      ctx.runner = [mass, size] {
        const ClockSpec spec{parse_flag_quantity("--mass", *mass, kMass, "kg"),
                             parse_flag_quantity("--size", *size, kLength, "m")};
        const Quantity t = wigner_clock_limit(spec);
        Report r;
        r.command = "bounds.clock";
        r.param("mass", *mass);
        r.param("size", *size);
        r.result("formula", "T_max = m*l^2/hbar");
        r.result("bound_kind", "upper");
        r.result("clock_time_limit_s", t.value());
        return r;
      };
    });
  }

  // folding -----------------------------------------------------------
  {
    auto residues = std::make_shared<long>(100);
    auto m0 = std::make_shared<std::string>("110Da");
    auto a = std::make_shared<std::string>("0.4nm");
    CLI::App* cmd = bounds_cmd->add_subcommand(
        "folding", "Clock-limited one-step folding time of an N-residue chain");
    cmd->add_option("--N", *residues, "number of residues")->required();
    cmd->add_option("--m0", *m0, "residue mass")->capture_default_str();
    cmd->add_option("--a", *a, "residue length")->capture_default_str();
    cmd->callback([&ctx, residues, m0, a] {
      ctx.runner = [residues, m0, a] {
        const ProteinSpec spec(*residues,
                               parse_flag_quantity("--m0", *m0, kMass, "kg"),
                               parse_flag_quantity("--a", *a, kLength, "m"));
        const Quantity t = folding_time_limit(spec);
        Report r;
        r.command = "bounds.folding";
        r.param("N", std::to_string(*residues));
        r.param("m0", *m0);
        r.param("a", *a);
        r.result("formula", "T_max = m0*a^2*N^3/hbar");
        r.result("folding_time_limit_s", t.value());
        return r;
      };
    });
  }

  // scaling -----------------------------------------------------------
  {
    auto residues = std::make_shared<long>(100);
    auto regime = std::make_shared<std::string>("extended");
    CLI::App* cmd = bounds_cmd->add_subcommand(
        "scaling", "Folding-time scaling exponent by chain-geometry regime");
    cmd->add_option("--N", *residues, "number of residues")->required();
    cmd->add_option("--regime", *regime, "extended|compact|subdomain")
        ->capture_default_str();
    cmd->callback([&ctx, residues, regime] {
      ctx.runner = [residues, regime] {
        const FoldingScaling s =
            folding_scaling(*residues, parse_folding_regime(*regime));
        Report r;
        r.command = "bounds.scaling";
        r.param("N", std::to_string(*residues));
        r.param("regime", *regime);
        r.result("formula", "T ~ N^exponent");
        r.result("exponent", s.exponent);
        r.result("relative_time", s.relative_time);
        return r;
      };
    });
  }

  // metabolic ---------------------------------------------------------
  {
    auto body_mass = std::make_shared<std::string>("1kg");
    auto prefactor = std::make_shared<double>(1.0);
    auto exponent = std::make_shared<double>(0.75);
    CLI::App* cmd = bounds_cmd->add_subcommand(
        "metabolic", "Allometric metabolic rate P = a*W^beta");
    cmd->add_option("--W", *body_mass, "body mass")->required();
    cmd->add_option("--a", *prefactor, "prefactor (carries the output units)")
        ->capture_default_str();
    cmd->add_option("--beta", *exponent, "scaling exponent (3/4 mammals, 2/3 birds)")
        ->capture_default_str();
    cmd->callback([&ctx, body_mass, prefactor, exponent] {
      ctx.runner = [body_mass, prefactor, exponent] {
        const Quantity p = metabolic_rate(
            parse_flag_quantity("--W", *body_mass, kMass, "kg"), *prefactor,
            *exponent);
        Report r;
        r.command = "bounds.metabolic";
        r.param("W", *body_mass);
        r.param("a", format_full(*prefactor));
        r.param("beta", format_full(*exponent));
        r.result("formula", "P = a*W^beta (W in kg; output in units of a)");
        r.result("metabolic_rate", p.value());
        return r;
      };
    });
  }

  // energy ------------------------------------------------------------
  {
    auto n = std::make_shared<long>(1);
    auto omega = std::make_shared<std::string>("1e13");
    CLI::App* cmd = bounds_cmd->add_subcommand(
        "energy", "Quantized transport energy E = n*hbar*omega");
    cmd->add_option("--n", *n, "quantum number (>= 0)")->required();
    cmd->add_option("--omega", *omega, "angular frequency (1/s)")
        ->capture_default_str();
    cmd->callback([&ctx, n, omega] {
      ctx.runner = [n, omega] {
        const Quantity e = quantized_energy(
            *n, parse_flag_quantity("--omega", *omega, kFrequency, "1/s"));
        Report r;
        r.command = "bounds.energy";
        r.param("n", std::to_string(*n));
        r.param("omega", *omega);
        r.result("formula", "E = n*hbar*omega");
        r.result("energy_J", e.value());
        return r;
      };
    });
  }

  // motor ---------------------------------------------------------------
  {
    auto flags = std::make_shared<MotorFlags>();
    CLI::App* cmd = bounds_cmd->add_subcommand(
        "motor", "Clock-limited characteristic speed of a molecular motor");
    flags->attach(cmd);
    cmd->callback([&ctx, flags] {
      ctx.runner = [flags] {
        const MotorSpec spec = flags->build();
        const Quantity v = motor_velocity_bound(spec);
        const double stepping_speed_si =
            spec.zero_load_speed.value() * constants::kBasePairLength;
        Report r;
        r.command = "bounds.motor";
        flags->echo(r);
        r.result("formula", "v = hbar/(m*L)");
        r.result("velocity_bound_m_per_s", v.value());
        r.result("velocity_bound_cm_per_s", convert_to(v, "cm/s"));
        r.result("stepping_speed_m_per_s", stepping_speed_si);
        r.result("stepping_over_bound", stepping_speed_si / v.value());
        return r;
      };
    });
  }

  // tension -------------------------------------------------------------
  {
    auto flags = std::make_shared<MotorFlags>();
    auto tension = std::make_shared<std::string>("0pN");
    auto reference = std::make_shared<std::string>("40pN");
    CLI::App* cmd = bounds_cmd->add_subcommand(
        "tension", "Linear tension response v(F) = max(0, v0 - k*F)");
    flags->attach(cmd);
    cmd->add_option("--F", *tension, "applied tension")->capture_default_str();
    cmd->add_option("--stall-ref", *reference, "measured stall for the residual")
        ->capture_default_str();
    cmd->callback([&ctx, flags, tension, reference] {
      ctx.runner = [flags, tension, reference] {
        const MotorSpec spec = flags->build();
        const TensionResponse resp = motor_speed_under_tension(
            parse_flag_quantity("--F", *tension, kForce, "N", false), spec,
            parse_flag_quantity("--stall-ref", *reference, kForce, "N"));
        Report r;
        r.command = "bounds.tension";
        flags->echo(r);
        r.param("F", *tension);
        r.param("stall-ref", *reference);
        r.result("formula", "v(F) = max(0, v0 - k*F)");
        r.result("speed_bp_per_s", resp.speed.value());
        r.result("stall_force_pN", convert_to(resp.stall_force, "pN"));
        r.result("reference_stall_pN", convert_to(resp.reference_stall, "pN"));
        r.result("model_over_reference_stall", resp.stall_ratio);
        return r;
      };
    });
  }

  // debroglie -----------------------------------------------------------
  {
    auto mass = std::make_shared<std::string>();
    auto velocity = std::make_shared<std::string>();
    CLI::App* cmd =
        bounds_cmd->add_subcommand("debroglie", "Matter wavelength h/(m*v)");
    cmd->add_option("--mass", *mass, "particle mass")->required();
    cmd->add_option("--velocity", *velocity, "speed (m/s)")->required();
    cmd->callback([&ctx, mass, velocity] {
      ctx.runner = [mass, velocity] {
        const Quantity lambda = de_broglie(
            parse_flag_quantity("--mass", *mass, kMass, "kg"),
            parse_flag_quantity("--velocity", *velocity, kSpeed, "m/s"));
        Report r;
        r.command = "bounds.debroglie";
        r.param("mass", *mass);
        r.param("velocity", *velocity);
        r.result("formula", "lambda = h/(m*v)");
        r.result("wavelength_m", lambda.value());
        r.result("wavelength_nm", lambda.value() * 1e9);
        return r;
      };
    });
  }

  // decoherence ---------------------------------------------------------
  {
    auto mass = std::make_shared<std::string>("500Da");
    auto temperature = std::make_shared<std::string>("300K");
    auto separation = std::make_shared<std::string>("1nm");
    auto damping = std::make_shared<std::string>("1e12");
    CLI::App* cmd = bounds_cmd->add_subcommand(
        "decoherence",
        "High-temperature Brownian dephasing time over a separation dx");
    cmd->add_option("--mass", *mass, "particle mass")->capture_default_str();
    cmd->add_option("--T", *temperature, "bath temperature")->capture_default_str();
    cmd->add_option("--dx", *separation, "coherent separation")
        ->capture_default_str();
    cmd->add_option("--gamma", *damping, "bath damping rate (1/s)")
        ->capture_default_str();
    cmd->callback([&ctx, mass, temperature, separation, damping] {
      ctx.runner = [mass, temperature, separation, damping] {
        const Quantity tau = thermal_decoherence_time(
            parse_flag_quantity("--mass", *mass, kMass, "kg"),
            parse_flag_quantity("--T", *temperature, kTemperature, "K"),
            parse_flag_quantity("--dx", *separation, kLength, "m"),
            parse_flag_quantity("--gamma", *damping, kFrequency, "1/s"));
        Report r;
        r.command = "bounds.decoherence";
        r.param("mass", *mass);
        r.param("T", *temperature);
        r.param("dx", *separation);
        r.param("gamma", *damping);
        r.result("formula", "tau = hbar^2/(2*m*gamma*kB*T*dx^2)");
        r.result("decoherence_time_s", tau.value());
        return r;
      };
    });
  }

  // tunneling -----------------------------------------------------------
  {
    auto energy = std::make_shared<std::string>("0.25eV");
    auto height = std::make_shared<std::string>("0.5eV");
    auto width = std::make_shared<std::string>("0.5\xc3\x85");
    auto mass = std::make_shared<std::string>("1Da");
    CLI::App* cmd = bounds_cmd->add_subcommand(
        "tunneling", "Rectangular-barrier transmission probability");
    cmd->add_option("--E", *energy, "particle energy")->capture_default_str();
    cmd->add_option("--V0", *height, "barrier height")->capture_default_str();
    cmd->add_option("--width", *width, "barrier width")->capture_default_str();
    cmd->add_option("--mass", *mass, "particle mass")->capture_default_str();
    cmd->callback([&ctx, energy, height, width, mass] {
      ctx.runner = [energy, height, width, mass] {
        const double t = barrier_transmission(
            parse_flag_quantity("--E", *energy, kEnergy, "J"),
            parse_flag_quantity("--V0", *height, kEnergy, "J"),
            parse_flag_quantity("--width", *width, kLength, "m"),
            parse_flag_quantity("--mass", *mass, kMass, "kg"));
        Report r;
        r.command = "bounds.tunneling";
        r.param("E", *energy);
        r.param("V0", *height);
        r.param("width", *width);
        r.param("mass", *mass);
        r.result("formula", "rectangular-barrier transmission");
        r.result("transmission", t);
        return r;
      };
    });
  }
}

}  // namespace qbio::cli
