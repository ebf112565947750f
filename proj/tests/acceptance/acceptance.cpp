// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every budget below is wall-clock seconds for that check.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/gradcheck.hpp"
#include "oracles/mdp_env.hpp"
#include "oracles/oracles.hpp"
#include "rlsuite/analysis/analysis.hpp"
#include "rlsuite/bench/bench.hpp"
#include "rlsuite/bench/experiment.hpp"
#include "rlsuite/dlw/deep_line_wars.hpp"
#include "rlsuite/maze/deep_maze.hpp"
#include "rlsuite/registry.hpp"
#include "rlsuite/rts/deep_rts_lite.hpp"

using namespace rlsuite;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<Verdict()> run;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

Verdict capsnet_table() {
  const auto c28 = analysis::capsnet_param_count(analysis::CapsNetSpec::square(28));
  const auto c84 = analysis::capsnet_param_count(analysis::CapsNetSpec::square(84));
  const bool pass = c28.conv == 20'992 && c28.primary_caps == 5'308'672 && c28.capsule_layer == 2'359'296 &&
                    c28.total == 7'688'960 && c84.capsule_layer == 75'759'616 && c84.total == 81'089'280;
  return {pass, fmt("28x28x1 %llu/%llu/%llu total %llu; 84x84x1 capsule %llu total %llu",
                    static_cast<unsigned long long>(c28.conv), static_cast<unsigned long long>(c28.primary_caps),
                    static_cast<unsigned long long>(c28.capsule_layer), static_cast<unsigned long long>(c28.total),
                    static_cast<unsigned long long>(c84.capsule_layer), static_cast<unsigned long long>(c84.total))};
}

Verdict representation_table() {
  const auto rows = analysis::dlw_representation_table();
  std::vector<std::uint64_t> sizes;
  for (const auto& r : rows) sizes.push_back(r.size);
  const double ratio = analysis::repr_reduction_ratio(rows);
  const bool pass = sizes == std::vector<std::uint64_t>{1'440'000, 750, 450, 150} && ratio == 9600.0;
  return {pass, fmt("sizes %llu/%llu/%llu/%llu ratio %.0f", static_cast<unsigned long long>(sizes[0]),
                    static_cast<unsigned long long>(sizes[1]), static_cast<unsigned long long>(sizes[2]),
                    static_cast<unsigned long long>(sizes[3]), ratio)};
}

Verdict state_space() {
  bool pass = maze::maze_state_space(7, 7) == 1176;
  std::uint64_t previous = 0;
  int agree = 0;
  for (std::uint64_t n = 7; n <= 55; ++n) {
    const auto v = maze::maze_state_space(n, n);
    const bool ok = std::to_string(v) == oracle::binomial_n_choose_2(n * n) && v > previous;
    agree += ok;
    pass = pass && ok;
    previous = v;
  }
  return {pass, fmt("7x7=%llu, %d/49 sizes agree and increase", static_cast<unsigned long long>(maze::maze_state_space(7, 7)),
                    agree)};
}

Verdict gradient_suite() {
  constexpr int kCases = 20;
  const auto families = oracle::run_gradient_suite(kCases);
  bool pass = families.size() == 11;
  double worst = 0.0;
  std::string worst_name;
  for (const auto& f : families) {
    pass = pass && f.errors.size() == kCases && f.max_error() < 1e-4;
    if (f.max_error() >= worst) {
      worst = f.max_error();
      worst_name = f.name;
    }
  }
  return {pass, fmt("%zu families x %d cases, worst %.2e (%s)", families.size(), kCases, worst, worst_name.c_str())};
}

Verdict tabular_mdps() {
  bool pass = true;
  std::string detail;
  for (const auto& [name, mdp] : oracle::reference_mdps()) {
    const auto r = oracle::learn_mdp(mdp, 5000, 1);
    pass = pass && r.max_abs_error < 1e-4 && r.same_policy;
    detail += fmt("%s err %.1e%s; ", name.c_str(), r.max_abs_error, r.same_policy ? "" : " POLICY DIFFERS");
  }
  detail.resize(detail.size() - 2);
  return {pass, detail};
}

Verdict tabular_maze() {
  bool pass = true;
  std::string detail = "optimal in final 50:";
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto config = bench::parse_experiment(
        "scenario: DeepMaze-Deterministic-9x9\nagent: tabular\nepisodes: 2000\nmax_steps: 1000\n",
        {"seed=" + std::to_string(seed), "hyperparams.alpha=0.5", "hyperparams.gamma=0.99",
         "hyperparams.epsilon_min=0", "hyperparams.epsilon_start=1", "hyperparams.epsilon_decay=0.001"});
    const auto s = bench::run_experiment(config);
    int optimal = 0;
    for (std::size_t i = s.metrics.size() - 50; i < s.metrics.size(); ++i) optimal += s.metrics[i].total_reward == 0.0;
    pass = pass && optimal >= 48;  // 95% of 50, rounded up
    detail += fmt(" %d", optimal);
  }
  return {pass, detail};
}

Verdict dqn_maze() {
  bool pass = true;
  std::string detail;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto config = bench::parse_experiment(
        "scenario: DeepMaze-Deterministic-7x7\nagent: dqn\nepisodes: 300\nmax_steps: 1000\n",
        {"seed=" + std::to_string(seed)});
    const auto s = bench::run_experiment(config);
    pass = pass && s.agent_last50_mean > s.random_last50_mean;
    detail += fmt("seed %llu %.2f vs random %.2f; ", static_cast<unsigned long long>(seed), s.agent_last50_mean,
                  s.random_last50_mean);
  }
  detail.resize(detail.size() - 2);
  return {pass, detail};
}

Verdict dlw_balance() {
  const auto c = dlw::DlwConfig::defaults();
  int p0 = 0, p1 = 0, draws = 0;
  for (std::uint64_t g = 0; g < 500; ++g) {
    const auto m = dlw::play_match(c, g, dlw::random_policy(c, mix_seed(g, 1)), dlw::random_policy(c, mix_seed(g, 2)));
    (m.winner == 0 ? p0 : m.winner == 1 ? p1 : draws)++;
  }
  const double rate = p0 / 500.0;
  int send_wins = 0;
  for (std::uint64_t g = 0; g < 100; ++g) {
    send_wins += dlw::play_match(c, 10'000 + g, dlw::always_send_policy(c), dlw::idle_policy()).winner == 0;
  }
  const bool pass = rate >= 0.42 && rate <= 0.58 && send_wins == 100;
  return {pass, fmt("random p0 win rate %.3f (%d/%d/%d draws), always-send %d/100", rate, p0, p1, draws, send_wins)};
}

Verdict rts_fuzz() {
  rts::RtsConfig c;
  c.random_opponent = true;
  rts::DeepRtsLiteEnv env(c, 7);
  Rng rng(8);
  long long violations = 0, ledger_breaks = 0, resets = 0;
  for (int i = 0; i < 100'000; ++i) {
    const auto r = env.advance(static_cast<ActionIndex>(rng.uniform(rts::kRtsActionCount)));
    const auto& s = env.state();
    violations += !s.players[0].resources.within_limits() + !s.players[1].resources.within_limits();
    ledger_breaks += !s.ledger_holds();
    if (r.terminal) {
      env.restart();
      ++resets;
    }
  }
  return {violations == 0 && ledger_breaks == 0,
          fmt("1e5 actions, %lld games, %lld clamp violations, %lld ledger breaks", resets + 1, violations,
              ledger_breaks)};
}

Verdict maze_throughput() {
  bench::BenchOptions o;
  o.seconds = 5.0;
  o.warmup_seconds = 1.0;
  const auto r = bench::bench_ticks(default_registry(), "DeepMaze-Deterministic-25x25", o);
  return {r.aggregate >= 1e6, fmt("%.0f ticks/s single worker (headless, 25x25)", r.aggregate)};
}

// Hash of everything an agent sees along a trajectory.
std::uint64_t trajectory_digest(Environment& env, std::uint64_t seed, int steps) {
  std::uint64_t h = hash_bytes(env.reset(seed));
  Rng rng(seed ^ 0x5EED);
  for (int t = 0; t < steps; ++t) {
    const auto r = env.step(env.sample_action(rng));
    h = mix_seed(h, hash_bytes(r.observation));
    h = mix_seed(h, std::bit_cast<std::uint64_t>(r.reward));
    h = mix_seed(h, r.terminal);
    if (r.terminal) h = mix_seed(h, hash_bytes(env.reset()));
  }
  return h;
}

Verdict determinism() {
  int same = 0, total = 0;
  for (const auto& id : default_registry().ids()) {
    const int steps = id.find("RawImage") != std::string::npos ? 20 : 2000;
    auto a = default_registry().make(id), b = default_registry().make(id);
    same += trajectory_digest(*a, 42, steps) == trajectory_digest(*b, 42, steps);
    ++total;
  }

  int identical_runs = 0;
  const char* configs[] = {
      "scenario: DeepMaze-Stochastic-9x9\nagent: tabular\nepisodes: 100\nseed: 4\n",
      "scenario: DeepMaze-Deterministic-7x7\nagent: dqn\nepisodes: 5\nseed: 4\nmax_steps: 200\n",
      "scenario: DeepLineWars-HeatmapGray-15x10\nagent: random\nepisodes: 3\nseed: 4\n",
  };
  for (const char* text : configs) {
    std::string csv[2];
    for (int run = 0; run < 2; ++run) {
      const auto path = std::filesystem::temp_directory_path() / ("rlsuite_acceptance_" + std::to_string(run) + ".csv");
      bench::run_experiment(bench::parse_experiment(text, {"output=" + path.string(), "hyperparams.memory_size=10000"}));
      std::ifstream in(path);
      std::stringstream buf;
      buf << in.rdbuf();
      csv[run] = buf.str();
      std::filesystem::remove(path);
    }
    identical_runs += !csv[0].empty() && csv[0] == csv[1];
  }
  return {same == total && identical_runs == 3,
          fmt("%d/%d scenarios replay identically, %d/3 run configs give identical CSVs", same, total, identical_runs)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"capsnet-parameter-table", 1, capsnet_table},
      {"dlw-representation-table", 1, representation_table},
      {"maze-state-space", 1, state_space},
      {"gradient-suite", 30, gradient_suite},
      {"tabular-q-mdp-convergence", 10, tabular_mdps},
      {"tabular-q-maze-9x9", 120, tabular_maze},
      {"dqn-maze-7x7", 600, dqn_maze},
      {"dlw-balance", 120, dlw_balance},
      {"rts-resource-conservation", 60, rts_fuzz},
      {"maze-throughput", 10, maze_throughput},
      {"determinism", 60, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::cout << (pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << " [" << fmt("%.2f", secs) << "s of "
              << c.budget_seconds << "s" << (in_time ? "" : ", over budget") << "]" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : fmt("%d criteria failed", failures)) << std::endl;
  return failures == 0 ? 0 : 1;
}
