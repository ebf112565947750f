#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rlsuite/core/rng.hpp"
#include "rlsuite/core/tensor.hpp"
#include "rlsuite/env/spaces.hpp"

namespace rlsuite {

struct StepResult {
  Tensor observation;
  double reward = 0.0;
  bool terminal = false;
  InfoMap info;
};

/// Reward and terminal flag of one tick without observation encoding.
struct Outcome {
  double reward = 0.0;
  bool terminal = false;
};

/// Gym-style environment. Concrete environments are constructed already
/// reset. A single instance is not thread-safe; instances are movable
/// between threads.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual std::string_view kind_name() const noexcept = 0;
  virtual const ActionSpace& action_space() const noexcept = 0;
  virtual const ObservationSpec& observation_spec() const noexcept = 0;

  /// Start a new episode. With a seed the initial state is a pure function
  /// of (config, seed); without one the environment's own episode stream
  /// continues.
  Tensor reset(std::optional<std::uint64_t> seed = std::nullopt);

  /// reset() without encoding the initial observation (benchmark path).
  void restart(std::optional<std::uint64_t> seed = std::nullopt);

  /// Advance one tick and encode the resulting observation.
  StepResult step(ActionIndex action);

  /// Advance one tick without encoding an observation (benchmark path).
  Outcome advance(ActionIndex action);

  bool terminal() const noexcept { return terminal_; }

  ActionIndex sample_action(Rng& rng) const;

  virtual Tensor observe() const = 0;

  /// Plain-text rendering. Rendering is never required for stepping.
  virtual std::string render_text() const = 0;

  /// Optional auxiliary feature vector (e.g. economy values); empty if none.
  virtual std::vector<double> auxiliary() const { return {}; }

 protected:
  virtual void on_reset(std::optional<std::uint64_t> seed) = 0;
  virtual Outcome on_step(ActionIndex action, InfoMap* info) = 0;

 private:
  void check_step(ActionIndex action) const;

  bool terminal_ = false;
};

ActionIndex sample_action(const Environment& env, Rng& rng);

}  // namespace rlsuite
