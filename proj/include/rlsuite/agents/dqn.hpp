#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "rlsuite/agents/hyperparams.hpp"
#include "rlsuite/agents/replay.hpp"
#include "rlsuite/nn/network.hpp"
#include "rlsuite/nn/optimizer.hpp"

namespace rlsuite::agents {

struct DqnOptions {
  std::vector<std::size_t> hidden{64};  // ReLU hidden layers
  /// Copy the online network into a frozen target every N steps; 0 disables.
  std::size_t target_refresh = 0;
  /// Train once every N observed transitions.
  std::size_t train_every = 1;
  /// Start training once the buffer holds this many transitions (at least one batch).
  std::size_t warmup = 0;
};

/// Dense(in -> h1) - ReLU - ... - Dense(hk -> actions).
std::vector<nn::LayerSpec> dqn_layers(std::size_t inputs, std::size_t actions, const std::vector<std::size_t>& hidden);

/// Targets y = r + gamma max_a' Q(s', a') (y = r on terminal), with Q(s') from
/// `target` when given, otherwise from `net` before the update. The loss only
/// sees the taken action of each transition. One optimizer step; returns the
/// batch mean loss.
double dqn_train_step(nn::Network& net, const nn::Network* target, std::span<const Transition> batch,
                      const Hyperparams& params, nn::Optimizer& optimizer);

class DqnAgent final : public Agent {
 public:
  DqnAgent(const Shape& observation_shape, std::size_t action_count, Hyperparams params, DqnOptions options,
           std::uint64_t seed);

  ActionIndex act(const Tensor& observation) override;
  void observe(const Transition& t) override;
  void end_episode() override;

  double epsilon() const noexcept { return epsilon_; }
  std::size_t episode() const noexcept { return episode_; }
  /// Mean training loss over the last finished episode (0 when it did not train).
  double last_episode_loss() const noexcept { return last_loss_mean_; }
  nn::Network& network() noexcept { return net_; }
  const ReplayBuffer& replay() const noexcept { return replay_; }

 private:
  Hyperparams params_;
  DqnOptions options_;
  nn::Network net_;
  std::optional<nn::Network> target_;
  std::unique_ptr<nn::Optimizer> optimizer_;
  ReplayBuffer replay_;
  Rng rng_;
  std::size_t episode_ = 0;
  std::size_t steps_ = 0;
  double epsilon_;
  double loss_sum_ = 0.0;
  std::size_t loss_count_ = 0;
  double last_loss_mean_ = 0.0;
};

}  // namespace rlsuite::agents
