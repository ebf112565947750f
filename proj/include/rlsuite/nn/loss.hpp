#pragma once

#include "rlsuite/core/tensor.hpp"

namespace rlsuite::nn {

struct LossSpec {
  enum class Kind { MSE, Huber };
  Kind kind = Kind::Huber;
  double delta = 1.0;  // Huber sensitivity

  static LossSpec mse() noexcept { return {Kind::MSE, 1.0}; }
  static LossSpec huber(double delta = 1.0) noexcept { return {Kind::Huber, delta}; }

  void validate() const;
  bool operator==(const LossSpec&) const = default;
};

/// Mean over elements of the per-element loss on residual a = predicted - target.
/// MSE: a^2. Huber: a^2/2 when |a| <= delta, else delta (|a| - delta/2).
double loss(const LossSpec& spec, const Tensor& predicted, const Tensor& target);

/// d loss / d predicted, same shape as predicted.
Tensor loss_grad(const LossSpec& spec, const Tensor& predicted, const Tensor& target);

}  // namespace rlsuite::nn
