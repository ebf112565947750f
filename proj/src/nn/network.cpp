#include "rlsuite/nn/network.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "rlsuite/core/errors.hpp"

namespace rlsuite::nn {

Network::Network(std::vector<LayerSpec> specs, Shape input_shape, std::uint64_t seed)
    : specs_(std::move(specs)), input_shape_(std::move(input_shape)), output_shape_(input_shape_) {
  for (std::size_t i = 0; i < specs_.size(); ++i) {
    output_shape_ = specs_[i].output_shape(output_shape_);
    Rng rng(mix_seed(seed, i));
    layers_.push_back(make_layer(specs_[i], rng));
  }
}

Network::Network(const Network& other)
    : specs_(other.specs_), input_shape_(other.input_shape_), output_shape_(other.output_shape_) {
  for (const auto& l : other.layers_) layers_.push_back(l->clone());
}

Network& Network::operator=(const Network& other) {
  if (this != &other) {
    Network copy(other);
    *this = std::move(copy);
  }
  return *this;
}

Tensor Network::forward(const Tensor& input) {
  if (input.shape() != input_shape_ && input.size() != shape_size(input_shape_)) {
    throw ShapeMismatch("network expects " + shape_string(input_shape_) + ", got " + shape_string(input.shape()));
  }
  Tensor x = input.shape() == input_shape_ ? input : input.reshaped(input_shape_);
  for (auto& l : layers_) x = l->forward(x);
  return x;
}

Tensor Network::backward(const Tensor& grad_output) {
  if (grad_output.shape() != output_shape_) {
    throw ShapeMismatch("network backward expects " + shape_string(output_shape_) + ", got " +
                        shape_string(grad_output.shape()));
  }
  Tensor g = grad_output;
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) g = (*it)->backward(g);
  return g;
}

void Network::zero_grad() {
  for (auto& l : layers_) l->zero_grad();
}

std::vector<Tensor*> Network::parameters() {
  std::vector<Tensor*> out;
  for (auto& l : layers_)
    for (Tensor* t : l->parameters()) out.push_back(t);
  return out;
}

std::vector<Tensor*> Network::gradients() {
  std::vector<Tensor*> out;
  for (auto& l : layers_)
    for (Tensor* t : l->gradients()) out.push_back(t);
  return out;
}

std::size_t Network::param_count() const noexcept { return nn::param_count(specs_); }

void Network::copy_parameters_from(const Network& other) {
  if (specs_ != other.specs_ || input_shape_ != other.input_shape_) {
    throw ShapeMismatch("copy_parameters_from: architectures differ");
  }
  auto dst = parameters();
  auto src = const_cast<Network&>(other).parameters();
  for (std::size_t i = 0; i < dst.size(); ++i) *dst[i] = *src[i];
}

namespace {

constexpr std::array<char, 4> kMagic{'R', 'L', 'S', 'W'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> b{};
  for (int i = 0; i < 4; ++i) b[static_cast<std::size_t>(i)] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(b.data(), 4);
}

void put_f64(std::ostream& out, double d) {
  const auto v = std::bit_cast<std::uint64_t>(d);
  std::array<char, 8> b{};
  for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(b.data(), 8);
}

std::uint64_t get_le(std::istream& in, int bytes) {
  std::array<unsigned char, 8> b{};
  in.read(reinterpret_cast<char*>(b.data()), bytes);
  if (!in) throw ShapeMismatch("weights blob truncated");
  std::uint64_t v = 0;
  for (int i = bytes - 1; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
  return v;
}

}  // namespace

void save_weights(const Network& net, std::ostream& out) {
  auto params = const_cast<Network&>(net).parameters();
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, kVersion);
  put_u32(out, static_cast<std::uint32_t>(params.size()));
  for (const Tensor* t : params) {
    put_u32(out, static_cast<std::uint32_t>(t->rank()));
    for (std::size_t d : t->shape()) put_u32(out, static_cast<std::uint32_t>(d));
  }
  for (const Tensor* t : params)
    for (double v : t->data()) put_f64(out, v);
  if (!out) throw InvalidArgument("failed writing weights");
}

void load_weights(Network& net, std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw ShapeMismatch("not a weights blob (bad magic)");
  if (get_le(in, 4) != kVersion) throw ShapeMismatch("unsupported weights version");
  auto params = net.parameters();
  if (get_le(in, 4) != params.size()) throw ShapeMismatch("weights blob has a different tensor count");
  for (const Tensor* t : params) {
    Shape s(get_le(in, 4));
    for (auto& d : s) d = get_le(in, 4);
    if (s != t->shape()) {
      throw ShapeMismatch("weights blob tensor " + shape_string(s) + " does not match " + shape_string(t->shape()));
    }
  }
  for (Tensor* t : params)
    for (double& v : t->data()) v = std::bit_cast<double>(get_le(in, 8));
}

void save_weights(const Network& net, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot open " + path);
  save_weights(net, out);
}

void load_weights(Network& net, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  load_weights(net, in);
}

}  // namespace rlsuite::nn
