#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "rlsuite/core/tensor.hpp"

namespace rlsuite::nn {

class Optimizer {
 public:
  virtual ~Optimizer() = default;
  /// Updates each params[i] in place from grads[i]. Throws ShapeMismatch.
  virtual void step(std::span<Tensor* const> params, std::span<Tensor* const> grads) = 0;
  virtual std::unique_ptr<Optimizer> clone() const = 0;
};

/// theta <- theta - lr * g
class Sgd final : public Optimizer {
 public:
  explicit Sgd(double lr) : lr_(lr) {}
  void step(std::span<Tensor* const> params, std::span<Tensor* const> grads) override;
  std::unique_ptr<Optimizer> clone() const override { return std::make_unique<Sgd>(*this); }

 private:
  double lr_;
};

/// Bias-corrected Adam:
///   m <- b1 m + (1 - b1) g,  v <- b2 v + (1 - b2) g^2
///   theta <- theta - lr * (m / (1 - b1^t)) / (sqrt(v / (1 - b2^t)) + eps)
class Adam final : public Optimizer {
 public:
  explicit Adam(double lr, double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8)
      : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps) {}
  void step(std::span<Tensor* const> params, std::span<Tensor* const> grads) override;
  std::unique_ptr<Optimizer> clone() const override { return std::make_unique<Adam>(*this); }

  std::size_t steps_taken() const noexcept { return t_; }

 private:
  double lr_, beta1_, beta2_, eps_;
  std::size_t t_ = 0;
  std::vector<Tensor> m_, v_;
};

/// "sgd" or "adam" (case-insensitive); throws InvalidConfig otherwise.
std::unique_ptr<Optimizer> make_optimizer(std::string_view name, double lr);

}  // namespace rlsuite::nn
