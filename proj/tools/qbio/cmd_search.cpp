#include <algorithm>
#include <map>
#include <memory>

#include "commands.hpp"
#include "qbio/mcfadden.hpp"
#include "qbio/replicator.hpp"

namespace qbio::cli {

using namespace qbio::replicator;

namespace {

struct SpaceFlags {
  long length = 10;
  long alphabet = 2;
  std::string marked = "1";

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", length, "sequence length")->capture_default_str();
    cmd->add_option("--b", alphabet, "alphabet size")->capture_default_str();
    cmd->add_option("--marked", marked,
                    "replicator count (first k sequences) or 'all'")
        ->capture_default_str();
  }

  SequenceSpace space() const {
    if (length < 1 || length > 64) throw ConfigError("--n: need 1 <= n <= 64");
    if (alphabet < 2) throw ConfigError("--b: need b >= 2");
    return SequenceSpace(static_cast<int>(alphabet), static_cast<int>(length));
  }

  ReplicatorSet replicators(const SequenceSpace& s) const {
    if (marked == "all") return ReplicatorSet::all(s);
    long count = 0;
    try {
      std::size_t consumed = 0;
      count = std::stol(marked, &consumed);
      if (consumed != marked.size()) throw std::invalid_argument(marked);
    } catch (const std::exception&) {
      throw ConfigError("--marked: expected a count or 'all', got '" + marked + "'");
    }
    return ReplicatorSet::first(s, count);
  }

  void echo(Report& r) const {
    r.param("n", std::to_string(length));
    r.param("b", std::to_string(alphabet));
    r.param("marked", marked);
  }
};

}  // namespace

void register_search(CLI::App& app, CommandContext& ctx) {
  CLI::App* search = app.add_subcommand(
      "search", "Replicator-search models over a b^n sequence space");
  search->require_subcommand(1);

  // classical -------------------------------------------------------------
  {
    auto flags = std::make_shared<SpaceFlags>();
    auto trials = std::make_shared<long>(10000);
    auto threads = std::make_shared<int>(0);
    CLI::App* cmd = search->add_subcommand(
        "classical", "Uniform sampling until the first replicator hit");
    flags->attach(cmd);
    cmd->add_option("--trials", *trials, "number of independent trials")
        ->capture_default_str();
    cmd->add_option("--threads", *threads, "worker threads (0 = auto)")
        ->capture_default_str();
    cmd->callback([&ctx, flags, trials, threads] {
      ctx.runner = [flags, trials, threads, &ctx] {
        const SequenceSpace space = flags->space();
        const ReplicatorSet marked = flags->replicators(space);
        const ClassicalSearchResult res =
            classical_search(space, marked, *trials, ctx.seed, *threads);

        Report r;
        r.command = "search.classical";
        flags->echo(r);
        r.param("trials", std::to_string(*trials));
        r.param("seed", std::to_string(ctx.seed));
        r.result("num_sequences", static_cast<long>(space.num_sequences));
        r.result("marked_count", static_cast<long>(marked.marked.size()));
        r.result("mean_hitting_time", res.mean_hitting_time);
        r.result("std_error", res.std_error);
        r.result("expected_mean",
                 static_cast<double>(space.num_sequences) /
                     static_cast<double>(marked.marked.size()));
        r.result("total_draws", static_cast<long>(res.total_draws));

        // hitting-time histogram as the exportable series
        std::map<std::uint32_t, std::uint64_t> histogram;
        for (const std::uint32_t h : res.hitting_times) ++histogram[h];
        r.columns = {"hitting_time", "count"};
        for (const auto& [h, count] : histogram) {
          r.rows.push_back(
              {static_cast<double>(h), static_cast<double>(count)});
        }
        return r;
      };
    });
  }

  // grover ------------------------------------------------------------------
  {
    auto flags = std::make_shared<SpaceFlags>();
    CLI::App* cmd = search->add_subcommand(
        "grover", "Amplitude amplification over the same space");
    flags->attach(cmd);
    cmd->callback([&ctx, flags] {
      ctx.runner = [flags] {
        const SequenceSpace space = flags->space();
        const ReplicatorSet marked = flags->replicators(space);
        const GroverSearchResult res = grover_search(space, marked);

        Report r;
        r.command = "search.grover";
        flags->echo(r);
        r.result("num_sequences", static_cast<long>(space.num_sequences));
        r.result("marked_count", static_cast<long>(marked.marked.size()));
        r.result("effective_items", res.effective_items);
        r.result("queries", res.queries);
        r.result("success_probability", res.success_probability);
        return r;
      };
    });
  }

  // mcfadden ------------------------------------------------------------------
  {
    auto flags = std::make_shared<SpaceFlags>();
    auto params = std::make_shared<McFaddenParams>();
    CLI::App* cmd = search->add_subcommand(
        "mcfadden", "Tunneling walker watched on the replicator subset");
    flags->attach(cmd);
    cmd->add_option("--hop", params->hop_rate, "tunneling amplitude J")
        ->capture_default_str();
    cmd->add_option("--kappa", params->detect_rate, "detection rate kappa")
        ->capture_default_str();
    cmd->add_option("--tmax", params->t_max, "integration window")
        ->capture_default_str();
    cmd->add_option("--dt", params->dt_override, "step override (0 = auto)")
        ->capture_default_str();
    cmd->add_option("--records", params->max_records, "max recorded samples")
        ->capture_default_str();
    cmd->callback([&ctx, flags, params] {
      ctx.default_format = "csv";
      ctx.runner = [flags, params, &ctx] {
        const SequenceSpace space = flags->space();
        const ReplicatorSet marked = flags->replicators(space);
        McFaddenParams run = *params;
        run.rng_seed = ctx.seed;
        const McFaddenResult res = mcfadden_search(space, marked, run);

        Report r;
        r.command = "search.mcfadden";
        flags->echo(r);
        r.param("hop", format_full(run.hop_rate));
        r.param("kappa", format_full(run.detect_rate));
        r.param("tmax", format_full(run.t_max));
        r.param("seed", std::to_string(run.rng_seed));
        r.result("num_sequences", static_cast<long>(space.num_sequences));
        r.result("marked_count", static_cast<long>(marked.marked.size()));
        r.result("detection_at_tmax", res.detection_cdf.back());
        r.result("mean_detection_time", res.mean_detection_time);
        r.result("tail_truncated", res.tail_truncated);
        r.result("low_detection_warning", res.low_detection_warning);
        r.result("max_norm_accounting_error", res.max_norm_accounting_error);

        r.columns = {"t", "detection_cdf", "survival_norm"};
        for (std::size_t i = 0; i < res.times.size(); ++i) {
          r.rows.push_back(
              {res.times[i], res.detection_cdf[i], res.survival_norm[i]});
        }
        return r;
      };
    });
  }
}

}  // namespace qbio::cli
