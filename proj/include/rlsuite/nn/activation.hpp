#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace rlsuite::nn {

enum class Activation { TanH, Softmax, Sigmoid, ReLU, LeakyReLU, Binary };

/// Accepts the canonical names ("TanH", "ReLU", ...) case-insensitively.
Activation parse_activation(std::string_view name);
std::string_view to_string(Activation a) noexcept;

/// Scalar form. Softmax is a vector op and throws InvalidArgument here.
///
///   TanH       2 / (1 + e^-2z) - 1
///   Sigmoid    1 / (1 + e^-z)
///   ReLU       max(0, z)
///   LeakyReLU  z if z > 0 else 0.01 z
///   Binary     1 if z > 0 else 0
double activate(Activation a, double z);
double activate(std::string_view name, double z);

/// d activate / dz. ReLU and Binary use 0 at the kink; Binary is 0 everywhere.
double activation_derivative(Activation a, double z);

/// Numerically stable softmax (shifted by the max element).
std::vector<double> softmax(std::span<const double> z);

}  // namespace rlsuite::nn
