#include "rlsuite/bench/bench.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "rlsuite/core/errors.hpp"

namespace rlsuite::bench {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kCheckEvery = 1024;  // ticks between clock reads

WorkerStats run_worker(const Scenario& scenario, const BenchOptions& options, std::size_t worker) {
  auto env = scenario.make(mix_seed(options.seed, worker));
  const auto actions = action_stream(env->action_space().count(), options.seed, worker);
  std::size_t cursor = 0;
  WorkerStats stats;
  volatile double sink = 0.0;  // keeps encoded observations from being optimized out

  const auto start = Clock::now();
  const auto measure_from = start + std::chrono::duration_cast<Clock::duration>(
                                        std::chrono::duration<double>(options.warmup_seconds));
  const auto stop = measure_from + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(options.seconds));
  bool measuring = false;
  auto window_start = measure_from;
  std::uint64_t window_ticks = 0;

  for (;;) {
    for (std::uint64_t i = 0; i < kCheckEvery; ++i) {
      const Outcome o = env->advance(actions[cursor]);
      cursor = (cursor + 1) & (kActionStreamLength - 1);
      if (options.encode_observations) sink = sink + env->observe()[0];
      if (o.terminal) {
        env->restart();
        if (measuring) ++stats.episodes;
      }
    }
    const auto now = Clock::now();
    if (!measuring) {
      if (now < measure_from) continue;
      measuring = true;
      window_start = now;
      window_ticks = 0;
      continue;
    }
    window_ticks += kCheckEvery;
    stats.ticks += kCheckEvery;
    const double elapsed = std::chrono::duration<double>(now - window_start).count();
    if (elapsed >= 1.0) {
      stats.samples.push_back(static_cast<double>(window_ticks) / elapsed);
      window_start = now;
      window_ticks = 0;
    }
    if (now >= stop) break;
  }
  if (stats.samples.empty()) {
    stats.samples.push_back(static_cast<double>(stats.ticks) / std::max(options.seconds, 1e-9));
  }
  stats.median = median(stats.samples);
  return stats;
}

}  // namespace

std::vector<ActionIndex> action_stream(std::size_t action_count, std::uint64_t seed, std::size_t worker) {
  if (action_count == 0) throw InvalidArgument("action stream needs at least one action");
  Rng rng(mix_seed(mix_seed(seed, worker), 0xB3EC));
  std::vector<ActionIndex> out(kActionStreamLength);
  for (auto& a : out) a = static_cast<ActionIndex>(rng.uniform(action_count));
  return out;
}

double median(std::vector<double> values) {
  if (values.empty()) throw InvalidArgument("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

BenchResult bench_ticks(const Registry& registry, const std::string& scenario_id, const BenchOptions& options) {
  const Scenario& scenario = registry.get(scenario_id);
  if (!(options.seconds > 0.0)) throw InvalidArgument("benchmark duration must be > 0 seconds");
  if (options.workers == 0) throw InvalidArgument("benchmark needs at least one worker");
  if (options.warmup_seconds < 0.0) throw InvalidArgument("warmup must be >= 0 seconds");

  BenchResult result;
  result.scenario = scenario_id;
  result.encoded = options.encode_observations;
  result.workers.resize(options.workers);
  if (options.workers == 1) {
    result.workers[0] = run_worker(scenario, options, 0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < options.workers; ++w) {
      threads.emplace_back([&, w] { result.workers[w] = run_worker(scenario, options, w); });
    }
    for (auto& t : threads) t.join();
  }
  for (const auto& w : result.workers) result.aggregate += w.median;
  return result;
}

std::pair<std::uint64_t, double> replay_bench_work(const Registry& registry, const std::string& scenario_id,
                                                   std::uint64_t seed, std::size_t worker, std::uint64_t ticks) {
  auto env = registry.get(scenario_id).make(mix_seed(seed, worker));
  const auto actions = action_stream(env->action_space().count(), seed, worker);
  std::uint64_t episodes = 0;
  double reward = 0.0;
  std::size_t cursor = 0;
  for (std::uint64_t i = 0; i < ticks; ++i) {
    const Outcome o = env->advance(actions[cursor]);
    cursor = (cursor + 1) & (kActionStreamLength - 1);
    reward += o.reward;
    if (o.terminal) {
      env->restart();
      ++episodes;
    }
  }
  return {episodes, reward};
}

}  // namespace rlsuite::bench
