#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rlsuite/agents/dqn.hpp"
#include "rlsuite/agents/hyperparams.hpp"
#include "rlsuite/registry.hpp"

namespace rlsuite::bench {

enum class AgentKind { Random, Tabular, Dqn };

/// One experiment, usually read from a YAML file:
///
///   scenario: DeepMaze-Deterministic-7x7   # registry id (required)
///   agent: tabular                         # random | tabular | dqn (required)
///   episodes: 500                          # required, >= 1
///   seed: 1
///   max_steps: 1000
///   output: metrics.csv                    # per-episode CSV; empty disables
///   hyperparams: { alpha, gamma, loss (mse|huber), huber_delta, optimizer (adam|sgd),
///                  batch_size, memory_size, epsilon_min, epsilon_max, epsilon_start,
///                  epsilon_decay, decay_law (linear|exponential) }
///   dqn: { hidden: [64], target_refresh, train_every, warmup }
///
/// Unset keys keep their defaults. Overrides given as "key=value" (dotted
/// paths such as hyperparams.alpha=0.5) win over the file.
struct ExperimentConfig {
  std::string scenario;
  AgentKind agent = AgentKind::Tabular;
  std::size_t episodes = 0;
  std::uint64_t seed = 0;
  std::size_t max_steps = 1000;
  std::string output;
  agents::Hyperparams hyperparams;
  agents::DqnOptions dqn;

  /// Throws ConfigError naming the field.
  void validate(const Registry& registry) const;
};

/// Throws ConfigError with the offending line when the text is malformed or
/// a key is unknown or mistyped.
ExperimentConfig parse_experiment(const std::string& yaml_text, const std::vector<std::string>& overrides = {});
ExperimentConfig load_experiment(const std::string& path, const std::vector<std::string>& overrides = {});

struct EpisodeMetrics {
  std::size_t episode = 0;
  std::size_t steps = 0;
  double total_reward = 0.0;
  double loss_mean = 0.0;
  double epsilon = 0.0;
};

struct ExperimentSummary {
  std::string scenario;
  std::string agent;
  std::size_t episodes = 0;
  double agent_mean = 0.0;
  double random_mean = 0.0;
  double agent_last50_mean = 0.0;
  double random_last50_mean = 0.0;
  std::vector<EpisodeMetrics> metrics;
  std::vector<double> random_rewards;
};

inline constexpr const char* kMetricsSchema = "# schema: episode-metrics/1";
inline constexpr const char* kMetricsHeader = "episode,steps,total_reward,loss_mean,epsilon";

/// Trains the configured agent, then runs a uniform random agent over the same
/// scenario seed for the same number of episodes as the baseline.
ExperimentSummary run_experiment(const ExperimentConfig& config, const Registry& registry = default_registry());

void write_metrics_csv(const std::vector<EpisodeMetrics>& metrics, std::ostream& out);
void print_summary(const ExperimentSummary& summary, std::ostream& out);

}  // namespace rlsuite::bench
