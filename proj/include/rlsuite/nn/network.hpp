#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "rlsuite/nn/layers.hpp"

namespace rlsuite::nn {

/// Sequential stack of layers with a fixed input shape.
class Network {
 public:
  Network() = default;
  /// Throws ShapeMismatch if the specs do not chain from `input_shape`.
  Network(std::vector<LayerSpec> specs, Shape input_shape, std::uint64_t seed);

  Network(const Network& other);
  Network& operator=(const Network& other);
  Network(Network&&) noexcept = default;
  Network& operator=(Network&&) noexcept = default;

  Tensor forward(const Tensor& input);
  /// Accumulates parameter gradients; returns the gradient w.r.t. the input.
  Tensor backward(const Tensor& grad_output);
  void zero_grad();

  std::vector<Tensor*> parameters();
  std::vector<Tensor*> gradients();
  std::size_t param_count() const noexcept;

  const std::vector<LayerSpec>& specs() const noexcept { return specs_; }
  const Shape& input_shape() const noexcept { return input_shape_; }
  const Shape& output_shape() const noexcept { return output_shape_; }
  Layer& layer(std::size_t i) { return *layers_.at(i); }
  std::size_t layer_count() const noexcept { return layers_.size(); }

  /// Copies parameter values from a network with the same architecture.
  void copy_parameters_from(const Network& other);

 private:
  std::vector<LayerSpec> specs_;
  Shape input_shape_;
  Shape output_shape_;
  std::vector<std::unique_ptr<Layer>> layers_;
};

/// Checkpoint layout, all integers little-endian:
///
///   "RLSW"            4 bytes magic
///   u32 version       currently 1
///   u32 count         number of parameter tensors
///   count x { u32 rank, rank x u32 dim }
///   f64 values        every tensor in order, row-major
void save_weights(const Network& net, std::ostream& out);
/// Throws ShapeMismatch if the blob does not match the network's parameters.
void load_weights(Network& net, std::istream& in);
void save_weights(const Network& net, const std::string& path);
void load_weights(Network& net, const std::string& path);

}  // namespace rlsuite::nn
