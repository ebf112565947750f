#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "rlsuite/bench/bench.hpp"
#include "rlsuite/bench/experiment.hpp"
#include "rlsuite/core/errors.hpp"

using namespace rlsuite;
using namespace rlsuite::bench;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Bench, RejectsBadOptions) {
  BenchOptions o;
  o.seconds = 0.0;
  EXPECT_THROW(bench_ticks(default_registry(), "DeepMaze-Deterministic-7x7", o), InvalidArgument);
  o = {};
  o.workers = 0;
  EXPECT_THROW(bench_ticks(default_registry(), "DeepMaze-Deterministic-7x7", o), InvalidArgument);
  o = {};
  o.seconds = 0.1;
  EXPECT_THROW(bench_ticks(default_registry(), "NoSuchGame-X-1x1", o), UnknownScenario);
}

TEST(Bench, ShortRunReportsSamples) {
  BenchOptions o;
  o.seconds = 1.0;
  o.warmup_seconds = 0.0;
  const auto r = bench_ticks(default_registry(), "DeepMaze-Deterministic-7x7", o);
  ASSERT_EQ(r.workers.size(), 1u);
  EXPECT_FALSE(r.workers[0].samples.empty());
  EXPECT_GT(r.workers[0].ticks, 0u);
  EXPECT_GT(r.aggregate, 0.0);
  EXPECT_FALSE(r.encoded);
}

TEST(Bench, ScalesWithWorkers) {
  if (std::thread::hardware_concurrency() < 4) GTEST_SKIP() << "needs at least 4 hardware threads";
  BenchOptions o;
  o.seconds = 2.0;
  o.warmup_seconds = 0.5;
  const double one = bench_ticks(default_registry(), "DeepMaze-Deterministic-7x7", o).aggregate;
  o.workers = 4;
  const double four = bench_ticks(default_registry(), "DeepMaze-Deterministic-7x7", o).aggregate;
  EXPECT_GE(four, 3.0 * one);
}

TEST(Bench, Median) {
  EXPECT_EQ(median({3, 1, 2}), 2.0);
  EXPECT_EQ(median({4, 1, 2, 3}), 2.5);
  EXPECT_THROW(median({}), InvalidArgument);
}

TEST(Bench, ActionStreamDeterministic) {
  EXPECT_EQ(action_stream(4, 1, 0), action_stream(4, 1, 0));
  EXPECT_NE(action_stream(4, 1, 0), action_stream(4, 1, 1));
  EXPECT_EQ(action_stream(4, 1, 0).size(), kActionStreamLength);
  for (auto a : action_stream(3, 2, 0)) ASSERT_LT(a, 3u);
}

TEST(Bench, WorkIsReproducible) {
  for (const auto& id : {"DeepMaze-Stochastic-9x9", "DeepLineWars-HeatmapGray-15x10", "DeepRtsLite-Matrix-10x10"}) {
    EXPECT_EQ(replay_bench_work(default_registry(), id, 3, 0, 20'000),
              replay_bench_work(default_registry(), id, 3, 0, 20'000))
        << id;
  }
}

TEST(Experiment, ParsesYamlAndOverrides) {
  const std::string yaml =
      "scenario: DeepMaze-Deterministic-7x7\n"
      "agent: dqn\n"
      "episodes: 10\n"
      "hyperparams:\n"
      "  alpha: 0.001\n"
      "  loss: mse\n"
      "dqn:\n"
      "  hidden: [32, 16]\n";
  const auto c = parse_experiment(yaml, {"hyperparams.alpha=0.5", "seed=9"});
  EXPECT_EQ(c.agent, AgentKind::Dqn);
  EXPECT_EQ(c.episodes, 10u);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.hyperparams.alpha, 0.5);
  EXPECT_EQ(c.hyperparams.loss, nn::LossSpec::mse());
  EXPECT_EQ(c.dqn.hidden, (std::vector<std::size_t>{32, 16}));
  EXPECT_EQ(c.hyperparams.batch_size, 32u);
}

TEST(Experiment, UnknownKeyReportsLine) {
  try {
    parse_experiment("scenario: DeepMaze-Deterministic-7x7\nagent: tabular\nepisodes: 5\nhyperparams:\n  alpah: 1\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 5);
    EXPECT_NE(std::string(e.what()).find("hyperparams.alpah"), std::string::npos);
  }
}

TEST(Experiment, TypeErrorsReportLineAndField) {
  try {
    parse_experiment("scenario: DeepMaze-Deterministic-7x7\nagent: tabular\nepisodes: many\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_NE(std::string(e.what()).find("episodes"), std::string::npos);
  }
  EXPECT_THROW(parse_experiment("scenario: [unclosed\n"), ConfigError);
  EXPECT_THROW(parse_experiment("agent: tabular\nepisodes: 5\n"), ConfigError);
  EXPECT_THROW(parse_experiment("scenario: x\nagent: genius\nepisodes: 5\n"), ConfigError);
  EXPECT_THROW(parse_experiment("scenario: x\nagent: tabular\nepisodes: 5\n", {"noequals"}), ConfigError);
}

TEST(Experiment, ValidationNamesField) {
  auto c = parse_experiment("scenario: NoSuch-X-1x1\nagent: tabular\nepisodes: 5\n");
  EXPECT_THROW(c.validate(default_registry()), ConfigError);
  c = parse_experiment("scenario: DeepMaze-Deterministic-7x7\nagent: tabular\nepisodes: 5\n", {"hyperparams.gamma=2"});
  try {
    c.validate(default_registry());
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("gamma"), std::string::npos);
  }
}

TEST(Experiment, ShippedConfigsParse) {
  for (const char* name : {"maze_tabular.yaml", "maze_dqn.yaml"}) {
    const auto c = load_experiment(std::string(RLSUITE_CONFIG_DIR) + "/" + name);
    EXPECT_NO_THROW(c.validate(default_registry())) << name;
  }
  EXPECT_THROW(load_experiment("/nonexistent/config.yaml"), ConfigError);
}

TEST(Experiment, SameConfigSameCsv) {
  const auto dir = std::filesystem::temp_directory_path();
  std::string csv[2];
  for (int run = 0; run < 2; ++run) {
    const auto path = dir / ("rlsuite_run_" + std::to_string(run) + ".csv");
    auto c = parse_experiment("scenario: DeepMaze-Stochastic-7x7\nagent: dqn\nepisodes: 5\nseed: 3\nmax_steps: 200\n",
                              {"output=" + path.string(), "hyperparams.memory_size=1000"});
    run_experiment(c);
    csv[run] = slurp(path);
    std::filesystem::remove(path);
  }
  EXPECT_EQ(csv[0], csv[1]);
  EXPECT_EQ(csv[0].rfind(std::string(kMetricsSchema) + "\n" + kMetricsHeader + "\n", 0), 0u);
}

TEST(Experiment, TabularBeatsRandomOnSmallMaze) {
  auto c = parse_experiment("scenario: DeepMaze-Deterministic-7x7\nagent: tabular\nepisodes: 500\nseed: 2\n",
                            {"hyperparams.alpha=0.5", "hyperparams.epsilon_min=0"});
  const auto s = run_experiment(c);
  EXPECT_GT(s.agent_last50_mean, s.random_last50_mean);
  EXPECT_EQ(s.metrics.size(), 500u);
  EXPECT_EQ(s.random_rewards.size(), 500u);
}

TEST(Experiment, SummaryFormat) {
  ExperimentSummary s;
  s.scenario = "A";
  s.agent = "tabular";
  s.episodes = 2;
  s.agent_mean = -1.5;
  std::ostringstream out;
  print_summary(s, out);
  EXPECT_EQ(out.str(),
            "scenario,agent,episodes,agent_mean,random_mean,agent_last50_mean,random_last50_mean\n"
            "A,tabular,2,-1.5,0,0,0\n");
}
