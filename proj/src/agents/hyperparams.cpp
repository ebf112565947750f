#include "rlsuite/agents/hyperparams.hpp"

#include <algorithm>
#include <cmath>

#include "rlsuite/core/errors.hpp"

namespace rlsuite::agents {
namespace {

void require(bool ok, const char* field, const std::string& rule) {
  if (!ok) throw InvalidConfig(std::string(field) + ": " + rule);
}

}  // namespace

DecayLaw parse_decay_law(std::string_view name) {
  if (name == "linear") return DecayLaw::LinearPerEpisode;
  if (name == "exponential") return DecayLaw::ExponentialPerEpisode;
  throw InvalidConfig("decay_law: expected linear or exponential, got '" + std::string(name) + "'");
}

std::string_view to_string(DecayLaw law) noexcept {
  return law == DecayLaw::LinearPerEpisode ? "linear" : "exponential";
}

void Hyperparams::validate() const {
  require(alpha >= 0.0 && alpha <= 1.0, "alpha", "must be in [0, 1]");
  require(gamma >= 0.0 && gamma <= 1.0, "gamma", "must be in [0, 1]");
  require(epsilon_min >= 0.0 && epsilon_max <= 1.0, "epsilon_min/epsilon_max", "must lie in [0, 1]");
  require(epsilon_min <= epsilon_start && epsilon_start <= epsilon_max, "epsilon_start",
          "must satisfy epsilon_min <= epsilon_start <= epsilon_max");
  require(epsilon_decay >= 0.0, "epsilon_decay", "must be >= 0");
  require(decay_law != DecayLaw::ExponentialPerEpisode || epsilon_decay <= 1.0, "epsilon_decay",
          "must be <= 1 for exponential decay");
  require(batch_size >= 1, "batch_size", "must be >= 1");
  require(memory_size >= 1, "memory_size", "must be >= 1");
  require(optimizer == "adam" || optimizer == "sgd", "optimizer", "must be adam or sgd");
  try {
    loss.validate();
  } catch (const InvalidConfig&) {
    throw InvalidConfig("loss.delta: must be > 0");
  }
}

double epsilon_at(const Hyperparams& p, std::size_t episode) {
  const double e = static_cast<double>(episode);
  const double raw = p.decay_law == DecayLaw::LinearPerEpisode
                         ? p.epsilon_start - p.epsilon_decay * e
                         : p.epsilon_start * std::pow(1.0 - p.epsilon_decay, e);
  return std::clamp(std::max(p.epsilon_min, raw), p.epsilon_min, p.epsilon_max);
}

}  // namespace rlsuite::agents
