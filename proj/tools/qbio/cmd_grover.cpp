#include <cmath>
#include <memory>

#include "commands.hpp"
#include "qbio/grover.hpp"

namespace qbio::cli {

using namespace qbio::grover;

void register_grover(CLI::App& app, CommandContext& ctx) {
  auto items = std::make_shared<double>(-1.0);
  auto iterations = std::make_shared<double>(-1.0);
  auto marked_count = std::make_shared<long>(1);
  auto simulate = std::make_shared<bool>(false);

  CLI::App* cmd = app.add_subcommand(
      "grover", "Optimal-iteration solver and statevector amplitude amplification");
  cmd->add_option("--N", *items, "database size (real, >= 1)");
  cmd->add_option("--Q", *iterations, "iteration count to invert (real, >= 0)");
  cmd->add_option("--marked", *marked_count, "marked items for --simulate")
      ->capture_default_str();
  cmd->add_flag("--simulate", *simulate, "run the statevector simulation");

  cmd->callback([&ctx, items, iterations, marked_count, simulate] {
    ctx.runner = [items, iterations, marked_count, simulate] {
      if (*items < 0.0 && *iterations < 0.0) {
        throw ConfigError("grover: provide --N and/or --Q");
      }
      Report r;
      r.command = "grover";

      if (*iterations >= 0.0) {
        r.param("Q", format_full(*iterations));
        r.result("items_for_Q", items_for_iterations(*iterations));
      }

      if (*items >= 0.0) {
        r.param("N", format_full(*items));
        const IterationCount q = optimal_iterations(*items);
        r.result("q_exact", q.exact);
        r.result("q_rounded", q.rounded);

        const double theta = std::asin(1.0 / std::sqrt(*items));
        const double closed =
            std::pow(std::sin((2.0 * static_cast<double>(q.rounded) + 1.0) * theta), 2);
        r.result("closed_form_success_at_q", closed);

        const double rounded_items = std::round(*items);
        if (*items >= 2.0 && std::abs(*items - rounded_items) < 1e-12) {
          const SamplingEfficiency eff =
              sampling_efficiency(static_cast<long>(rounded_items));
          r.result("classical_expected_trials", eff.classical_expected_trials);
          r.result("quantum_queries", eff.quantum_queries);
          r.result("amplitude_factor_sqrtN", eff.amplitude_factor);
          r.result("trials_per_query", eff.trials_per_query);
        }

        if (*simulate) {
          if (std::abs(*items - rounded_items) >= 1e-12) {
            throw ConfigError("--simulate: N must be an integer item count");
          }
          const auto m = static_cast<Eigen::Index>(rounded_items);
          std::vector<Eigen::Index> marked;
          if (*marked_count < 1 || *marked_count > m) {
            throw ConfigError("--marked: need 1 <= marked <= N");
          }
          for (long i = 0; i < *marked_count; ++i) marked.push_back(i);
          r.param("marked", std::to_string(*marked_count));

          const GroverProblem problem(m, marked, q.rounded);
          const GroverTrace trace = run_grover_trace(problem);
          r.result("simulated_success", trace.success_probability.back());
          r.result("closed_form_success",
                   predict(m, *marked_count, q.rounded).success_probability);

          r.columns = {"iteration", "success_probability", "norm_error"};
          for (std::size_t i = 0; i < trace.success_probability.size(); ++i) {
            r.rows.push_back({static_cast<double>(i), trace.success_probability[i],
                              trace.norm_error[i]});
          }
        }
      }
      return r;
    };
  });
}

}  // namespace qbio::cli
