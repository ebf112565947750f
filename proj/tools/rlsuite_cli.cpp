// Command-line front end: benchmarks, experiments, table reports.
#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>

#include "rlsuite/analysis/analysis.hpp"
#include "rlsuite/bench/bench.hpp"
#include "rlsuite/bench/experiment.hpp"
#include "rlsuite/core/errors.hpp"
#include "rlsuite/dlw/deep_line_wars.hpp"
#include "rlsuite/registry.hpp"

namespace {

using namespace rlsuite;

dlw::Policy make_policy(const std::string& name, const dlw::DlwConfig& config, std::uint64_t seed) {
  if (name == "random") return dlw::random_policy(config, seed);
  if (name == "idle") return dlw::idle_policy();
  if (name == "always_send") return dlw::always_send_policy(config);
  throw InvalidConfig("unknown policy '" + name + "' (expected random, idle or always_send)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rlsuite: environments, agents, benchmarks and table reports"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list-scenarios", "Print every registered scenario id");

  std::string bench_id;
  bench::BenchOptions bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "Measure ticks per second for a scenario");
  bench_cmd->add_option("scenario", bench_id, "Scenario id")->required();
  bench_cmd->add_option("--seconds", bench_opts.seconds, "Measured duration after warmup")->capture_default_str();
  bench_cmd->add_option("--workers", bench_opts.workers, "Worker threads, one env each")->capture_default_str();
  bench_cmd->add_option("--warmup", bench_opts.warmup_seconds, "Warmup seconds")->capture_default_str();
  bench_cmd->add_option("--seed", bench_opts.seed, "Seed for envs and action streams")->capture_default_str();
  bench_cmd->add_flag("--encoded", bench_opts.encode_observations, "Encode an observation every tick");

  std::string config_path;
  std::vector<std::string> overrides;
  std::string output_override;
  auto* run = app.add_subcommand("run", "Run an experiment from a YAML config");
  run->add_option("config", config_path, "Experiment YAML file")->required();
  run->add_option("--set", overrides, "Override a config key, e.g. --set hyperparams.alpha=0.5");
  run->add_option("--output", output_override, "Per-episode metrics CSV (overrides the config)");

  bool csv = false;
  auto* report = app.add_subcommand("report-tables", "Reproduce the parameter and representation tables");
  report->add_flag("--csv", csv, "Machine-readable output");

  std::string dlw_config_path, p0_name = "random", p1_name = "random", match_csv;
  std::size_t games = 100;
  std::uint64_t match_seed = 0;
  auto* matches = app.add_subcommand("dlw-matches", "Play Deep Line Wars matches between scripted policies");
  matches->add_option("--config", dlw_config_path, "Match/catalog YAML (defaults when omitted)");
  matches->add_option("--p0", p0_name, "random | idle | always_send")->capture_default_str();
  matches->add_option("--p1", p1_name, "random | idle | always_send")->capture_default_str();
  matches->add_option("--games", games, "Number of matches")->capture_default_str();
  matches->add_option("--seed", match_seed, "First match seed")->capture_default_str();
  matches->add_option("--csv", match_csv, "Append one row per match to this CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      for (const auto& id : default_registry().ids()) std::cout << id << '\n';
      return 0;
    }
    if (*bench_cmd) {
      const auto r = bench::bench_ticks(default_registry(), bench_id, bench_opts);
      std::cout << "scenario " << r.scenario << " (" << (r.encoded ? "encoded" : "headless") << ")\n";
      for (std::size_t w = 0; w < r.workers.size(); ++w) {
        std::cout << "worker " << w << ": " << std::fixed << std::setprecision(0) << r.workers[w].median
                  << " ticks/s median over " << r.workers[w].samples.size() << " samples, "
                  << r.workers[w].episodes << " episodes\n";
      }
      std::cout << "aggregate: " << std::fixed << std::setprecision(0) << r.aggregate << " ticks/s\n";
      return 0;
    }
    if (*run) {
      auto config = bench::load_experiment(config_path, overrides);
      if (!output_override.empty()) config.output = output_override;
      const auto summary = bench::run_experiment(config);
      bench::print_summary(summary, std::cout);
      return 0;
    }
    if (*report) {
      const auto rows = analysis::report_tables();
      analysis::print_report(rows, std::cout, csv);
      if (!csv) {
        const auto table = analysis::dlw_representation_table();
        std::cout << "image/grayscale reduction: " << analysis::repr_reduction_ratio(table) << "x\n";
      }
      return analysis::all_pass(rows) ? 0 : 1;
    }
    if (*matches) {
      const dlw::DlwConfig config =
          dlw_config_path.empty() ? dlw::DlwConfig::defaults() : dlw::load_dlw_config(dlw_config_path);
      std::array<std::size_t, 3> tally{};  // p0 wins, p1 wins, draws
      for (std::size_t g = 0; g < games; ++g) {
        const std::uint64_t seed = match_seed + g;
        const auto stats = dlw::play_match(config, seed, make_policy(p0_name, config, mix_seed(seed, 0)),
                                           make_policy(p1_name, config, mix_seed(seed, 1)));
        ++tally[stats.winner < 0 ? 2 : static_cast<std::size_t>(stats.winner)];
        if (!match_csv.empty()) dlw::append_match_csv(match_csv, seed, stats);
      }
      std::cout << "p0 wins " << tally[0] << ", p1 wins " << tally[1] << ", draws " << tally[2] << " of " << games
                << '\n';
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
