#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rlsuite/core/rng.hpp"
#include "rlsuite/core/tensor.hpp"
#include "rlsuite/nn/activation.hpp"

namespace rlsuite::nn {

/// Static description of one layer. Enough to compute shapes and parameter
/// counts without allocating weights.
struct LayerSpec {
  enum class Kind { Dense, Conv2d, MaxPool, AvgPool, Activation };

  Kind kind = Kind::Dense;
  std::size_t in = 0;   // Dense inputs or Conv2d input channels
  std::size_t out = 0;  // Dense outputs or Conv2d filters
  std::size_t kernel = 0;
  std::size_t stride = 1;
  nn::Activation activation = nn::Activation::ReLU;

  static LayerSpec dense(std::size_t in, std::size_t out) noexcept;
  static LayerSpec conv2d(std::size_t in_channels, std::size_t out_channels, std::size_t kernel,
                          std::size_t stride = 1) noexcept;
  static LayerSpec max_pool(std::size_t kernel, std::size_t stride) noexcept;
  static LayerSpec avg_pool(std::size_t kernel, std::size_t stride) noexcept;
  static LayerSpec act(nn::Activation a) noexcept;

  std::size_t param_count() const noexcept;
  /// Throws ShapeMismatch when `input` does not fit this layer.
  Shape output_shape(const Shape& input) const;
  std::string describe() const;
  bool operator==(const LayerSpec&) const = default;
};

std::size_t param_count(std::span<const LayerSpec> specs) noexcept;

/// Valid (unpadded) convolution or pooling extent: floor((in - kernel) / stride) + 1.
/// Returns 0 when the kernel does not fit.
std::size_t conv_output_size(std::size_t in, std::size_t kernel, std::size_t stride) noexcept;

/// A layer caches what it needs during forward; backward consumes that cache,
/// adds into the parameter gradients and returns the gradient w.r.t. the input.
class Layer {
 public:
  explicit Layer(LayerSpec spec) : spec_(spec) {}
  virtual ~Layer() = default;

  virtual Tensor forward(const Tensor& input) = 0;
  virtual Tensor backward(const Tensor& grad_output) = 0;
  virtual std::unique_ptr<Layer> clone() const = 0;

  virtual std::vector<Tensor*> parameters() { return {}; }
  virtual std::vector<Tensor*> gradients() { return {}; }
  void zero_grad();

  const LayerSpec& spec() const noexcept { return spec_; }

 protected:
  const Tensor& cached_input() const;

  LayerSpec spec_;
  std::optional<Tensor> input_;
};

/// Weights are (out, in); any input with `in` elements is flattened.
class Dense final : public Layer {
 public:
  Dense(std::size_t in, std::size_t out, Rng& rng);

  Tensor forward(const Tensor& input) override;
  Tensor backward(const Tensor& grad_output) override;
  std::unique_ptr<Layer> clone() const override { return std::make_unique<Dense>(*this); }
  std::vector<Tensor*> parameters() override { return {&weights_, &bias_}; }
  std::vector<Tensor*> gradients() override { return {&grad_weights_, &grad_bias_}; }

  Tensor& weights() noexcept { return weights_; }
  Tensor& bias() noexcept { return bias_; }

 private:
  Tensor weights_, bias_, grad_weights_, grad_bias_;
};

/// Input (H, W, Cin); weights (k, k, Cin, Cout); output (H', W', Cout).
class Conv2d final : public Layer {
 public:
  Conv2d(std::size_t in_channels, std::size_t out_channels, std::size_t kernel, std::size_t stride, Rng& rng);

  Tensor forward(const Tensor& input) override;
  Tensor backward(const Tensor& grad_output) override;
  std::unique_ptr<Layer> clone() const override { return std::make_unique<Conv2d>(*this); }
  std::vector<Tensor*> parameters() override { return {&weights_, &bias_}; }
  std::vector<Tensor*> gradients() override { return {&grad_weights_, &grad_bias_}; }

  Tensor& weights() noexcept { return weights_; }
  Tensor& bias() noexcept { return bias_; }

 private:
  Tensor weights_, bias_, grad_weights_, grad_bias_;
};

/// Per-channel max or mean over k x k windows. Max routes the gradient to the
/// first maximal element of each window.
class Pool2d final : public Layer {
 public:
  explicit Pool2d(LayerSpec spec);

  Tensor forward(const Tensor& input) override;
  Tensor backward(const Tensor& grad_output) override;
  std::unique_ptr<Layer> clone() const override { return std::make_unique<Pool2d>(*this); }

 private:
  std::vector<std::size_t> argmax_;
};

/// Elementwise activation, or softmax over the whole tensor.
class ActivationLayer final : public Layer {
 public:
  explicit ActivationLayer(nn::Activation a);

  Tensor forward(const Tensor& input) override;
  Tensor backward(const Tensor& grad_output) override;
  std::unique_ptr<Layer> clone() const override { return std::make_unique<ActivationLayer>(*this); }

 private:
  Tensor output_;
};

/// Builds the layer; weights and biases are drawn uniformly from
/// [-1/sqrt(fan_in), 1/sqrt(fan_in)].
std::unique_ptr<Layer> make_layer(const LayerSpec& spec, Rng& rng);

}  // namespace rlsuite::nn
