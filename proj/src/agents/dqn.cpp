#include "rlsuite/agents/dqn.hpp"

#include <algorithm>

#include "rlsuite/agents/q_learning.hpp"
#include "rlsuite/core/errors.hpp"

namespace rlsuite::agents {

std::vector<nn::LayerSpec> dqn_layers(std::size_t inputs, std::size_t actions,
                                      const std::vector<std::size_t>& hidden) {
  std::vector<nn::LayerSpec> specs;
  std::size_t width = inputs;
  for (std::size_t h : hidden) {
    specs.push_back(nn::LayerSpec::dense(width, h));
    specs.push_back(nn::LayerSpec::act(nn::Activation::ReLU));
    width = h;
  }
  specs.push_back(nn::LayerSpec::dense(width, actions));
  return specs;
}

double dqn_train_step(nn::Network& net, const nn::Network* target, std::span<const Transition> batch,
                      const Hyperparams& params, nn::Optimizer& optimizer) {
  if (batch.empty()) throw EmptyBatch("dqn_train_step needs at least one transition");
  nn::Network& bootstrap = target ? const_cast<nn::Network&>(*target) : net;

  // All targets come from the pre-update parameters.
  std::vector<double> y(batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const Transition& t = batch[i];
    y[i] = t.reward;
    if (!t.terminal && params.gamma != 0.0) {
      const Tensor q_next = bootstrap.forward(t.next_state);
      y[i] += params.gamma * *std::max_element(q_next.data().begin(), q_next.data().end());
    }
  }

  net.zero_grad();
  const double n = static_cast<double>(batch.size());
  double total = 0.0;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const Transition& t = batch[i];
    const Tensor q = net.forward(t.state);
    if (t.action >= q.size()) throw InvalidAction("transition action exceeds network outputs");
    const Tensor pred = Tensor::vector({q[t.action]});
    const Tensor tgt = Tensor::vector({y[i]});
    total += nn::loss(params.loss, pred, tgt);
    Tensor grad(q.shape());
    grad[t.action] = nn::loss_grad(params.loss, pred, tgt)[0] / n;
    net.backward(grad);
  }
  auto p = net.parameters();
  auto g = net.gradients();
  optimizer.step(p, g);
  return total / n;
}

DqnAgent::DqnAgent(const Shape& observation_shape, std::size_t action_count, Hyperparams params,
                   DqnOptions options, std::uint64_t seed)
    : params_(std::move(params)),
      options_(std::move(options)),
      net_(dqn_layers(shape_size(observation_shape), action_count, options_.hidden), observation_shape,
           mix_seed(seed, 1)),
      replay_(params_.memory_size, mix_seed(seed, 2)),
      rng_(mix_seed(seed, 3)) {
  params_.validate();
  if (options_.train_every == 0) throw InvalidConfig("train_every: must be >= 1");
  optimizer_ = nn::make_optimizer(params_.optimizer, params_.alpha);
  if (options_.target_refresh > 0) target_ = net_;
  epsilon_ = epsilon_at(params_, 0);
}

ActionIndex DqnAgent::act(const Tensor& observation) {
  if (rng_.uniform01() < epsilon_) return static_cast<ActionIndex>(rng_.uniform(net_.output_shape()[0]));
  const Tensor q = net_.forward(observation);
  return argmax(q.data());
}

void DqnAgent::observe(const Transition& t) {
  replay_.store(t);
  ++steps_;
  const std::size_t warmup = std::max(options_.warmup, params_.batch_size);
  if (replay_.size() >= warmup && steps_ % options_.train_every == 0) {
    const auto batch = replay_.sample(params_.batch_size);
    loss_sum_ += dqn_train_step(net_, target_ ? &*target_ : nullptr, batch, params_, *optimizer_);
    ++loss_count_;
  }
  if (target_ && steps_ % options_.target_refresh == 0) target_->copy_parameters_from(net_);
}

void DqnAgent::end_episode() {
  last_loss_mean_ = loss_count_ ? loss_sum_ / static_cast<double>(loss_count_) : 0.0;
  loss_sum_ = 0.0;
  loss_count_ = 0;
  ++episode_;
  epsilon_ = epsilon_at(params_, episode_);
}

}  // namespace rlsuite::agents
