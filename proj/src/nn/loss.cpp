#include "rlsuite/nn/loss.hpp"

#include <cmath>

#include "rlsuite/core/errors.hpp"

namespace rlsuite::nn {
namespace {

void check_shapes(const Tensor& predicted, const Tensor& target) {
  if (predicted.shape() != target.shape()) {
    throw ShapeMismatch("loss: predicted " + shape_string(predicted.shape()) + " vs target " +
                        shape_string(target.shape()));
  }
  if (predicted.empty()) throw ShapeMismatch("loss: empty tensors");
}

}  // namespace

void LossSpec::validate() const {
  if (kind == Kind::Huber && !(delta > 0.0)) throw InvalidConfig("Huber delta must be > 0");
}

double loss(const LossSpec& spec, const Tensor& predicted, const Tensor& target) {
  spec.validate();
  check_shapes(predicted, target);
  double total = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const double a = predicted[i] - target[i];
    if (spec.kind == LossSpec::Kind::MSE) {
      total += a * a;
    } else {
      const double m = std::abs(a);
      total += m <= spec.delta ? 0.5 * a * a : spec.delta * (m - 0.5 * spec.delta);
    }
  }
  return total / static_cast<double>(predicted.size());
}

Tensor loss_grad(const LossSpec& spec, const Tensor& predicted, const Tensor& target) {
  spec.validate();
  check_shapes(predicted, target);
  Tensor g(predicted.shape());
  const double n = static_cast<double>(predicted.size());
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const double a = predicted[i] - target[i];
    if (spec.kind == LossSpec::Kind::MSE) {
      g[i] = 2.0 * a / n;
    } else {
      g[i] = (std::abs(a) <= spec.delta ? a : (a > 0 ? spec.delta : -spec.delta)) / n;
    }
  }
  return g;
}

}  // namespace rlsuite::nn
