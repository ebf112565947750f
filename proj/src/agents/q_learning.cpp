#include "rlsuite/agents/q_learning.hpp"

#include <algorithm>

#include "rlsuite/core/errors.hpp"

namespace rlsuite::agents {

QTable::QTable(std::size_t action_count) : actions_(action_count) {
  if (action_count == 0) throw InvalidArgument("QTable needs at least one action");
}

double QTable::get(Key s, ActionIndex a) const {
  if (a >= actions_) throw InvalidAction("QTable action out of range");
  const auto it = table_.find(s);
  return it == table_.end() ? 0.0 : it->second[a];
}

void QTable::set(Key s, ActionIndex a, double value) {
  if (a >= actions_) throw InvalidAction("QTable action out of range");
  auto [it, inserted] = table_.try_emplace(s, actions_, 0.0);
  it->second[a] = value;
}

std::vector<double> QTable::values(Key s) const {
  const auto it = table_.find(s);
  return it == table_.end() ? std::vector<double>(actions_, 0.0) : it->second;
}

double QTable::max_value(Key s) const {
  const auto it = table_.find(s);
  return it == table_.end() ? 0.0 : *std::max_element(it->second.begin(), it->second.end());
}

double q_update(QTable& table, QTable::Key s, ActionIndex a, double r, QTable::Key s_next, bool terminal,
                double alpha, double gamma) {
  const double q = table.get(s, a);
  const double future = terminal ? 0.0 : table.max_value(s_next);
  const double updated = q + alpha * (r + gamma * future - q);
  table.set(s, a, updated);
  return updated;
}

ActionIndex argmax(std::span<const double> q) {
  if (q.empty()) throw InvalidArgument("argmax of an empty vector");
  return static_cast<ActionIndex>(std::max_element(q.begin(), q.end()) - q.begin());
}

ActionIndex select_action(std::span<const double> q, double epsilon, Rng& rng) {
  if (q.empty()) throw InvalidArgument("select_action needs at least one action");
  if (rng.uniform01() < epsilon) return static_cast<ActionIndex>(rng.uniform(q.size()));
  return argmax(q);
}

TabularQAgent::TabularQAgent(std::size_t action_count, Hyperparams params, std::uint64_t seed)
    : params_(std::move(params)), table_(action_count), rng_(seed) {
  params_.validate();
  epsilon_ = epsilon_at(params_, 0);
}

ActionIndex TabularQAgent::act(const Tensor& observation) {
  const auto q = table_.values(state_key(observation));
  return select_action(q, epsilon_, rng_);
}

void TabularQAgent::observe(const Transition& t) {
  q_update(table_, state_key(t.state), t.action, t.reward, state_key(t.next_state), t.terminal, params_.alpha,
           params_.gamma);
}

void TabularQAgent::end_episode() {
  ++episode_;
  epsilon_ = epsilon_at(params_, episode_);
}

}  // namespace rlsuite::agents
