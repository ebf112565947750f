#pragma once

#include <cstddef>
#include <string>

#include "rlsuite/nn/loss.hpp"

namespace rlsuite::agents {

enum class DecayLaw { LinearPerEpisode, ExponentialPerEpisode };

DecayLaw parse_decay_law(std::string_view name);
std::string_view to_string(DecayLaw law) noexcept;

struct Hyperparams {
  double alpha = 1e-4;  // learning rate
  double gamma = 0.99;  // discount
  nn::LossSpec loss = nn::LossSpec::huber(1.0);
  std::string optimizer = "adam";
  std::size_t batch_size = 32;
  std::size_t memory_size = 1'000'000;
  double epsilon_min = 0.10;
  double epsilon_max = 1.0;
  double epsilon_start = 1.0;
  double epsilon_decay = 0.005;
  DecayLaw decay_law = DecayLaw::LinearPerEpisode;

  /// Throws InvalidConfig naming the offending field.
  void validate() const;
};

/// Linear:      max(eps_min, eps_start - decay * episode)
/// Exponential: max(eps_min, eps_start * (1 - decay)^episode)
/// Both clamped into [eps_min, eps_max].
double epsilon_at(const Hyperparams& params, std::size_t episode);

}  // namespace rlsuite::agents
