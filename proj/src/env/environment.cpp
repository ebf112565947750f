#include "rlsuite/env/environment.hpp"

#include "rlsuite/core/errors.hpp"

namespace rlsuite {

Tensor Environment::reset(std::optional<std::uint64_t> seed) {
  on_reset(seed);
  terminal_ = false;
  return observe();
}

void Environment::restart(std::optional<std::uint64_t> seed) {
  on_reset(seed);
  terminal_ = false;
}

void Environment::check_step(ActionIndex action) const {
  if (terminal_) throw SteppedTerminalEnv(std::string(kind_name()) + ": step called on a terminal environment");
  if (!action_space().contains(action)) {
    throw InvalidAction(std::string(kind_name()) + ": action " + std::to_string(action) + " outside [0, " +
                        std::to_string(action_space().count()) + ")");
  }
}

StepResult Environment::step(ActionIndex action) {
  check_step(action);
  StepResult result;
  const Outcome o = on_step(action, &result.info);
  terminal_ = o.terminal;
  result.reward = o.reward;
  result.terminal = o.terminal;
  result.observation = observe();
  return result;
}

Outcome Environment::advance(ActionIndex action) {
  check_step(action);
  const Outcome o = on_step(action, nullptr);
  terminal_ = o.terminal;
  return o;
}

ActionIndex Environment::sample_action(Rng& rng) const {
  return static_cast<ActionIndex>(rng.uniform(action_space().count()));
}

ActionIndex sample_action(const Environment& env, Rng& rng) { return env.sample_action(rng); }

}  // namespace rlsuite
