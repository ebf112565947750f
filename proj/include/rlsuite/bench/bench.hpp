#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rlsuite/registry.hpp"

namespace rlsuite::bench {

struct BenchOptions {
  double seconds = 5.0;
  std::size_t workers = 1;
  /// Also encode an observation every tick ("encoded" ticks); off by default.
  bool encode_observations = false;
  double warmup_seconds = 1.0;
  std::uint64_t seed = 0;
};

struct WorkerStats {
  std::vector<double> samples;  // ticks in each measured one-second window
  double median = 0.0;          // ticks per second
  std::uint64_t ticks = 0;      // measured ticks (warmup excluded)
  std::uint64_t episodes = 0;   // resets inside the measured loop
};

struct BenchResult {
  std::string scenario;
  bool encoded = false;
  double aggregate = 0.0;  // sum of worker medians
  std::vector<WorkerStats> workers;
};

/// Size of the pre-generated action stream each worker cycles through.
inline constexpr std::size_t kActionStreamLength = 65'536;

/// Deterministic action stream for a worker.
std::vector<ActionIndex> action_stream(std::size_t action_count, std::uint64_t seed, std::size_t worker);

/// Steps one environment per worker thread through its action stream,
/// resetting on terminal. Reports the median of per-second tick counts taken
/// after the warmup. Throws UnknownScenario and InvalidArgument.
BenchResult bench_ticks(const Registry& registry, const std::string& scenario_id, const BenchOptions& options);

double median(std::vector<double> values);

/// Work done in `ticks` steps from a fresh environment: (episodes, total reward).
/// Independent of timing; used to check the benchmark loop is reproducible.
std::pair<std::uint64_t, double> replay_bench_work(const Registry& registry, const std::string& scenario_id,
                                                   std::uint64_t seed, std::size_t worker, std::uint64_t ticks);

}  // namespace rlsuite::bench
