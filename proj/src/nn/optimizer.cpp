#include "rlsuite/nn/optimizer.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "rlsuite/core/errors.hpp"

namespace rlsuite::nn {
namespace {

void check_pairs(std::span<Tensor* const> params, std::span<Tensor* const> grads) {
  if (params.size() != grads.size()) throw ShapeMismatch("optimizer: parameter and gradient counts differ");
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params[i]->shape() != grads[i]->shape()) {
      throw ShapeMismatch("optimizer: parameter " + std::to_string(i) + " is " + shape_string(params[i]->shape()) +
                          " but gradient is " + shape_string(grads[i]->shape()));
    }
  }
}

}  // namespace

void Sgd::step(std::span<Tensor* const> params, std::span<Tensor* const> grads) {
  check_pairs(params, grads);
  for (std::size_t p = 0; p < params.size(); ++p) {
    auto theta = params[p]->data();
    auto g = grads[p]->data();
    for (std::size_t i = 0; i < theta.size(); ++i) theta[i] -= lr_ * g[i];
  }
}

void Adam::step(std::span<Tensor* const> params, std::span<Tensor* const> grads) {
  check_pairs(params, grads);
  if (m_.empty()) {
    for (Tensor* p : params) {
      m_.emplace_back(p->shape());
      v_.emplace_back(p->shape());
    }
  } else if (m_.size() != params.size()) {
    throw ShapeMismatch("Adam: parameter list changed between steps");
  }
  ++t_;
  const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  for (std::size_t p = 0; p < params.size(); ++p) {
    if (m_[p].shape() != params[p]->shape()) throw ShapeMismatch("Adam: parameter shape changed between steps");
    auto theta = params[p]->data();
    auto g = grads[p]->data();
    auto m = m_[p].data();
    auto v = v_[p].data();
    for (std::size_t i = 0; i < theta.size(); ++i) {
      m[i] = beta1_ * m[i] + (1.0 - beta1_) * g[i];
      v[i] = beta2_ * v[i] + (1.0 - beta2_) * g[i] * g[i];
      theta[i] -= lr_ * (m[i] / c1) / (std::sqrt(v[i] / c2) + eps_);
    }
  }
}

std::unique_ptr<Optimizer> make_optimizer(std::string_view name, double lr) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "sgd") return std::make_unique<Sgd>(lr);
  if (lower == "adam") return std::make_unique<Adam>(lr);
  throw InvalidConfig("unknown optimizer '" + std::string(name) + "' (expected sgd or adam)");
}

}  // namespace rlsuite::nn
