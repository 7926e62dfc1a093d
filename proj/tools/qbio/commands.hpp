#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <string>

#include "qbio/quantity.hpp"
#include "report.hpp"

namespace qbio::cli {

// Shared state between main() and the registered subcommands. The chosen
// subcommand installs `runner`; main executes it and renders the report.
struct CommandContext {
  std::string format;  // empty -> the command's default_format
  std::string output_path;
  std::string plot_path;
  std::uint64_t seed = 0;

  std::string default_format = "table";
  std::function<Report()> runner;
};

// Parses a value-with-unit flag, names the flag in every failure, checks the
// physical dimension, and (by default) requires a strictly positive value.
bounds::Quantity parse_flag_quantity(const std::string& flag,
                                     const std::string& text,
                                     const bounds::Dimensions& dims,
                                     const std::string& default_unit,
                                     bool require_positive = true);

void register_bounds(CLI::App& app, CommandContext& ctx);
void register_grover(CLI::App& app, CommandContext& ctx);
void register_lindblad(CLI::App& app, CommandContext& ctx);
void register_search(CLI::App& app, CommandContext& ctx);

}  // namespace qbio::cli
