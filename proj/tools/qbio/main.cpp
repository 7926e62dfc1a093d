#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "qbio/errors.hpp"
#include "qbio/version.hpp"
#include "report.hpp"
#include "svg_plot.hpp"

namespace qbio::cli {

namespace {

// Config files are flat `key = value` text. Keys are long option names
// without the dashes; values are injected before the explicit command-line
// flags, which therefore win. Unknown keys fail the normal unknown-option
// path (exit 2).
std::vector<std::string> load_config_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config: cannot read '" + path + "'");
  std::vector<std::string> tokens;
  std::string line;
  const auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("--config: expected key = value, got '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) throw ConfigError("--config: empty key in '" + stripped + "'");
    tokens.push_back("--" + key + "=" + value);
  }
  return tokens;
}

// Splices config-file tokens in after the subcommand names so they act as
// overridable defaults for the invoked command.
std::vector<std::string> expand_args(int argc, char** argv) {
  std::vector<std::string> raw(argv + 1, argv + argc);
  std::string config_path;
  std::vector<std::string> args;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == "--config") {
      if (i + 1 >= raw.size()) throw ConfigError("--config: missing path");
      config_path = raw[++i];
    } else if (raw[i].rfind("--config=", 0) == 0) {
      config_path = raw[i].substr(9);
    } else {
      args.push_back(raw[i]);
    }
  }
  if (config_path.empty()) return args;

  const std::vector<std::string> config_tokens = load_config_tokens(config_path);
  std::vector<std::string> result;
  std::size_t i = 0;
  while (i < args.size() && !args[i].empty() && args[i].front() != '-') {
    result.push_back(args[i++]);  // subcommand chain
  }
  result.insert(result.end(), config_tokens.begin(), config_tokens.end());
  result.insert(result.end(), args.begin() + static_cast<long>(i), args.end());
  return result;
}

}  // namespace

int run(int argc, char** argv) {
  CommandContext ctx;

  CLI::App app{"qbio: quantum feasibility bounds and desk-scale open-system, "
               "search, and amplitude-amplification simulators"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qbio::kVersion));

  app.add_option("--format", ctx.format, "output format: table|csv|json");
  app.add_option("--output", ctx.output_path, "write the report to a file");
  app.add_option("--plot", ctx.plot_path, "render the series to an SVG file");
  app.add_option("--seed", ctx.seed, "RNG seed (env QBIO_SEED)")
      ->envname("QBIO_SEED");

  register_bounds(app, ctx);
  register_grover(app, ctx);
  register_lindblad(app, ctx);
  register_search(app, ctx);

  // let --format/--output/--plot/--seed appear after the subcommand too
  const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
    for (CLI::App* sub : node->get_subcommands(
             [](const CLI::App*) { return true; })) {
      sub->fallthrough(true);
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    std::vector<std::string> args = expand_args(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (!ctx.runner) {
    std::cerr << "error: no command selected\n";
    return 2;
  }

  try {
    const Report report = ctx.runner();
    const Format format =
        parse_format(ctx.format.empty() ? ctx.default_format : ctx.format);

    if (!ctx.output_path.empty()) {
      std::ofstream out(ctx.output_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: --output: cannot open '" << ctx.output_path << "'\n";
        return 2;
      }
      write_report(report, format, out);
      write_report(report, Format::table, std::cout);  // human summary
    } else {
      write_report(report, format, std::cout);
      if (format == Format::csv) {
        // keep the CSV bytes clean; one-line summary goes to stderr
        std::cerr << "summary:";
        for (const auto& [k, v] : report.results) std::cerr << ' ' << k << '=' << v;
        std::cerr << '\n';
      }
    }

    if (!ctx.plot_path.empty()) {
      std::string error;
      if (write_svg_plot(report, ctx.plot_path, &error)) {
        std::cerr << "plot written to " << ctx.plot_path << "\n";
      } else {
        std::cerr << "warning: --plot: " << error << "\n";
      }
    }
    return 0;
  } catch (const IntegrationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InconsistentSelection& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace qbio::cli

int main(int argc, char** argv) { return qbio::cli::run(argc, argv); }
