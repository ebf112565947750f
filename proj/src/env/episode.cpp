#include "rlsuite/env/episode.hpp"

#include "rlsuite/core/errors.hpp"

namespace rlsuite {

EpisodeLog run_episode(Environment& env, Agent& agent, std::size_t max_steps, std::optional<std::uint64_t> seed,
                       bool keep_transitions) {
  if (max_steps < 1) throw InvalidArgument("run_episode: max_steps must be >= 1");
  EpisodeLog log;
  Tensor state = env.reset(seed);
  while (!env.terminal() && log.steps < max_steps) {
    const ActionIndex a = agent.act(state);
    StepResult r = env.step(a);
    Transition t{std::move(state), a, r.reward, r.observation, r.terminal};
    agent.observe(t);
    log.total_reward += r.reward;
    ++log.steps;
    state = std::move(r.observation);
    if (keep_transitions) log.transitions.push_back(std::move(t));
  }
  log.reached_terminal = env.terminal();
  agent.end_episode();
  return log;
}

RandomAgent::RandomAgent(std::size_t action_count, std::uint64_t seed) : count_(action_count), rng_(seed) {
  if (count_ == 0) throw InvalidArgument("RandomAgent needs at least one action");
}

ActionIndex RandomAgent::act(const Tensor&) { return static_cast<ActionIndex>(rng_.uniform(count_)); }

}  // namespace rlsuite
