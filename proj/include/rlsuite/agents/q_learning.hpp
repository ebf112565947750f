#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "rlsuite/agents/hyperparams.hpp"
#include "rlsuite/core/rng.hpp"
#include "rlsuite/env/episode.hpp"

namespace rlsuite::agents {

/// Q-values keyed by a discrete state key. Unseen states read as all zeros.
class QTable {
 public:
  using Key = std::uint64_t;

  explicit QTable(std::size_t action_count);

  std::size_t action_count() const noexcept { return actions_; }
  std::size_t size() const noexcept { return table_.size(); }
  bool contains(Key s) const { return table_.count(s) != 0; }

  double get(Key s, ActionIndex a) const;
  void set(Key s, ActionIndex a, double value);
  /// Copy of the row for `s` (zeros when unseen).
  std::vector<double> values(Key s) const;
  double max_value(Key s) const;

 private:
  std::size_t actions_;
  std::unordered_map<Key, std::vector<double>> table_;
};

/// State key used for tabular agents: byte hash of the observation.
inline QTable::Key state_key(const Tensor& observation) noexcept { return hash_bytes(observation); }

/// Q(s,a) <- Q(s,a) + alpha (r + gamma max_a' Q(s',a') - Q(s,a)), with the max
/// term dropped on terminal transitions. Returns the new Q(s,a).
double q_update(QTable& table, QTable::Key s, ActionIndex a, double r, QTable::Key s_next, bool terminal,
                double alpha, double gamma);

/// Lowest index among the maxima.
ActionIndex argmax(std::span<const double> q);

/// One uniform draw decides explore (< epsilon) or exploit; exploring draws a
/// second number for the action.
ActionIndex select_action(std::span<const double> q, double epsilon, Rng& rng);

class TabularQAgent final : public Agent {
 public:
  TabularQAgent(std::size_t action_count, Hyperparams params, std::uint64_t seed);

  ActionIndex act(const Tensor& observation) override;
  void observe(const Transition& t) override;
  void end_episode() override;

  double epsilon() const noexcept { return epsilon_; }
  std::size_t episode() const noexcept { return episode_; }
  const QTable& table() const noexcept { return table_; }
  const Hyperparams& params() const noexcept { return params_; }

 private:
  Hyperparams params_;
  QTable table_;
  Rng rng_;
  std::size_t episode_ = 0;
  double epsilon_;
};

}  // namespace rlsuite::agents
