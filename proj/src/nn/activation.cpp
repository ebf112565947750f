#include "rlsuite/nn/activation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <string>

#include "rlsuite/core/errors.hpp"

namespace rlsuite::nn {
namespace {

constexpr std::array<std::pair<Activation, std::string_view>, 6> kNames{{
    {Activation::TanH, "TanH"},
    {Activation::Softmax, "Softmax"},
    {Activation::Sigmoid, "Sigmoid"},
    {Activation::ReLU, "ReLU"},
    {Activation::LeakyReLU, "LeakyReLU"},
    {Activation::Binary, "Binary"},
}};

constexpr double kLeakySlope = 0.01;

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

Activation parse_activation(std::string_view name) {
  for (const auto& [a, n] : kNames)
    if (iequals(n, name)) return a;
  throw UnknownActivation("unknown activation '" + std::string(name) + "'");
}

std::string_view to_string(Activation a) noexcept {
  for (const auto& [k, n] : kNames)
    if (k == a) return n;
  return "?";
}

double activate(Activation a, double z) {
  switch (a) {
    case Activation::TanH: return 2.0 / (1.0 + std::exp(-2.0 * z)) - 1.0;
    case Activation::Sigmoid: return 1.0 / (1.0 + std::exp(-z));
    case Activation::ReLU: return z < 0.0 ? 0.0 : z;
    case Activation::LeakyReLU: return z > 0.0 ? z : kLeakySlope * z;
    case Activation::Binary: return z > 0.0 ? 1.0 : 0.0;
    case Activation::Softmax: break;
  }
  throw InvalidArgument("Softmax is a vector operation; use softmax()");
}

double activate(std::string_view name, double z) { return activate(parse_activation(name), z); }

double activation_derivative(Activation a, double z) {
  switch (a) {
    case Activation::TanH: {
      const double t = activate(a, z);
      return 1.0 - t * t;
    }
    case Activation::Sigmoid: {
      const double s = activate(a, z);
      return s * (1.0 - s);
    }
    case Activation::ReLU: return z > 0.0 ? 1.0 : 0.0;
    case Activation::LeakyReLU: return z > 0.0 ? 1.0 : kLeakySlope;
    case Activation::Binary: return 0.0;
    case Activation::Softmax: break;
  }
  throw InvalidArgument("Softmax has no scalar derivative");
}

std::vector<double> softmax(std::span<const double> z) {
  std::vector<double> out(z.begin(), z.end());
  if (out.empty()) return out;
  const double shift = *std::max_element(out.begin(), out.end());
  double total = 0.0;
  for (double& v : out) {
    v = std::exp(v - shift);
    total += v;
  }
  for (double& v : out) v /= total;
  return out;
}

}  // namespace rlsuite::nn
