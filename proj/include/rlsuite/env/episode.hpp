#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rlsuite/core/tensor.hpp"
#include "rlsuite/env/environment.hpp"

namespace rlsuite {

/// One (s, a, r, s', terminal) record: the unit of replay memory and logs.
struct Transition {
  Tensor state;
  ActionIndex action = 0;
  double reward = 0.0;
  Tensor next_state;
  bool terminal = false;
};

/// Decision-maker driven by run_episode.
class Agent {
 public:
  virtual ~Agent() = default;

  virtual ActionIndex act(const Tensor& observation) = 0;

  /// Called once per transition, in order.
  virtual void observe(const Transition& /*transition*/) {}

  /// Called after the last transition of an episode.
  virtual void end_episode() {}
};

struct EpisodeLog {
  double total_reward = 0.0;
  std::size_t steps = 0;
  bool reached_terminal = false;
  std::vector<Transition> transitions;
};

/// reset -> (act, step, observe) until terminal or max_steps.
EpisodeLog run_episode(Environment& env, Agent& agent, std::size_t max_steps,
                       std::optional<std::uint64_t> seed = std::nullopt, bool keep_transitions = true);

/// Uniform random policy over an action space.
class RandomAgent final : public Agent {
 public:
  RandomAgent(std::size_t action_count, std::uint64_t seed);
  ActionIndex act(const Tensor& observation) override;

 private:
  std::size_t count_;
  Rng rng_;
};

}  // namespace rlsuite
