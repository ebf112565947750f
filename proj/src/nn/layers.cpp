#include "rlsuite/nn/layers.hpp"

#include <cmath>
#include <numeric>

#include "rlsuite/core/errors.hpp"

namespace rlsuite::nn {
namespace {

void init_uniform(Tensor& t, double bound, Rng& rng) {
  for (double& v : t.data()) v = rng.uniform_real(-bound, bound);
}

void require_rank3(const Shape& s, const char* who) {
  if (s.size() != 3) throw ShapeMismatch(std::string(who) + " expects (H, W, C) input, got " + shape_string(s));
}

}  // namespace

LayerSpec LayerSpec::dense(std::size_t in, std::size_t out) noexcept { return {Kind::Dense, in, out, 0, 1}; }

LayerSpec LayerSpec::conv2d(std::size_t in_channels, std::size_t out_channels, std::size_t kernel,
                            std::size_t stride) noexcept {
  return {Kind::Conv2d, in_channels, out_channels, kernel, stride};
}

LayerSpec LayerSpec::max_pool(std::size_t kernel, std::size_t stride) noexcept {
  return {Kind::MaxPool, 0, 0, kernel, stride};
}

LayerSpec LayerSpec::avg_pool(std::size_t kernel, std::size_t stride) noexcept {
  return {Kind::AvgPool, 0, 0, kernel, stride};
}

LayerSpec LayerSpec::act(nn::Activation a) noexcept {
  LayerSpec s{Kind::Activation};
  s.activation = a;
  return s;
}

std::size_t LayerSpec::param_count() const noexcept {
  switch (kind) {
    case Kind::Dense: return in * out + out;
    case Kind::Conv2d: return kernel * kernel * in * out + out;
    default: return 0;
  }
}

std::size_t conv_output_size(std::size_t in, std::size_t kernel, std::size_t stride) noexcept {
  if (kernel == 0 || stride == 0 || kernel > in) return 0;
  return (in - kernel) / stride + 1;
}

Shape LayerSpec::output_shape(const Shape& input) const {
  switch (kind) {
    case Kind::Dense:
      if (shape_size(input) != in) {
        throw ShapeMismatch(describe() + " got input " + shape_string(input));
      }
      return {out};
    case Kind::Conv2d:
    case Kind::MaxPool:
    case Kind::AvgPool: {
      require_rank3(input, "conv/pool");
      if (kind == Kind::Conv2d && input[2] != in) {
        throw ShapeMismatch(describe() + " got " + std::to_string(input[2]) + " channels");
      }
      const std::size_t h = conv_output_size(input[0], kernel, stride);
      const std::size_t w = conv_output_size(input[1], kernel, stride);
      if (h == 0 || w == 0) throw ShapeMismatch(describe() + " does not fit input " + shape_string(input));
      return {h, w, kind == Kind::Conv2d ? out : input[2]};
    }
    case Kind::Activation: return input;
  }
  return input;
}

std::string LayerSpec::describe() const {
  switch (kind) {
    case Kind::Dense: return "Dense(" + std::to_string(in) + "->" + std::to_string(out) + ")";
    case Kind::Conv2d:
      return "Conv2d(" + std::to_string(in) + "->" + std::to_string(out) + ", k" + std::to_string(kernel) + ", s" +
             std::to_string(stride) + ")";
    case Kind::MaxPool: return "MaxPool(k" + std::to_string(kernel) + ", s" + std::to_string(stride) + ")";
    case Kind::AvgPool: return "AvgPool(k" + std::to_string(kernel) + ", s" + std::to_string(stride) + ")";
    case Kind::Activation: return std::string(to_string(activation));
  }
  return "?";
}

std::size_t param_count(std::span<const LayerSpec> specs) noexcept {
  return std::accumulate(specs.begin(), specs.end(), std::size_t{0},
                         [](std::size_t acc, const LayerSpec& s) { return acc + s.param_count(); });
}

void Layer::zero_grad() {
  for (Tensor* g : gradients()) g->fill(0.0);
}

const Tensor& Layer::cached_input() const {
  if (!input_) throw NoForwardCache(spec_.describe() + ": backward called before forward");
  return *input_;
}

// Dense

Dense::Dense(std::size_t in, std::size_t out, Rng& rng)
    : Layer(LayerSpec::dense(in, out)),
      weights_({out, in}),
      bias_({out}),
      grad_weights_({out, in}),
      grad_bias_({out}) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(in));
  init_uniform(weights_, bound, rng);
  init_uniform(bias_, bound, rng);
}

Tensor Dense::forward(const Tensor& input) {
  const std::size_t in = spec_.in, out = spec_.out;
  if (input.size() != in) throw ShapeMismatch(spec_.describe() + " got input " + shape_string(input.shape()));
  input_ = input;
  Tensor y({out});
  const double* x = input.data().data();
  const double* w = weights_.data().data();
  for (std::size_t o = 0; o < out; ++o) {
    double acc = bias_[o];
    const double* row = w + o * in;
    for (std::size_t i = 0; i < in; ++i) acc += row[i] * x[i];
    y[o] = acc;
  }
  return y;
}

Tensor Dense::backward(const Tensor& grad_output) {
  const Tensor& x = cached_input();
  const std::size_t in = spec_.in, out = spec_.out;
  if (grad_output.size() != out) throw ShapeMismatch(spec_.describe() + " backward got wrong gradient size");
  Tensor gx(x.shape());
  double* gw = grad_weights_.data().data();
  const double* w = weights_.data().data();
  for (std::size_t o = 0; o < out; ++o) {
    const double d = grad_output[o];
    grad_bias_[o] += d;
    if (d == 0.0) continue;
    double* grow = gw + o * in;
    const double* wrow = w + o * in;
    for (std::size_t i = 0; i < in; ++i) {
      grow[i] += d * x[i];
      gx[i] += d * wrow[i];
    }
  }
  return gx;
}

// Conv2d

Conv2d::Conv2d(std::size_t in_channels, std::size_t out_channels, std::size_t kernel, std::size_t stride, Rng& rng)
    : Layer(LayerSpec::conv2d(in_channels, out_channels, kernel, stride)),
      weights_({kernel, kernel, in_channels, out_channels}),
      bias_({out_channels}),
      grad_weights_({kernel, kernel, in_channels, out_channels}),
      grad_bias_({out_channels}) {
  if (kernel == 0 || stride == 0) throw InvalidArgument("Conv2d kernel and stride must be >= 1");
  const double bound = 1.0 / std::sqrt(static_cast<double>(kernel * kernel * in_channels));
  init_uniform(weights_, bound, rng);
  init_uniform(bias_, bound, rng);
}

Tensor Conv2d::forward(const Tensor& input) {
  const Shape os = spec_.output_shape(input.shape());
  input_ = input;
  const std::size_t k = spec_.kernel, s = spec_.stride, cin = spec_.in, cout = spec_.out;
  Tensor y(os);
  for (std::size_t oy = 0; oy < os[0]; ++oy) {
    for (std::size_t ox = 0; ox < os[1]; ++ox) {
      double* dst = &y.at(oy, ox, 0);
      for (std::size_t co = 0; co < cout; ++co) dst[co] = bias_[co];
      for (std::size_t ky = 0; ky < k; ++ky) {
        for (std::size_t kx = 0; kx < k; ++kx) {
          const double* src = &input.at(oy * s + ky, ox * s + kx, 0);
          const double* w = weights_.data().data() + (ky * k + kx) * cin * cout;
          for (std::size_t ci = 0; ci < cin; ++ci) {
            const double xv = src[ci];
            const double* wr = w + ci * cout;
            for (std::size_t co = 0; co < cout; ++co) dst[co] += xv * wr[co];
          }
        }
      }
    }
  }
  return y;
}

Tensor Conv2d::backward(const Tensor& grad_output) {
  const Tensor& x = cached_input();
  const Shape os = spec_.output_shape(x.shape());
  if (grad_output.shape() != os) throw ShapeMismatch(spec_.describe() + " backward got wrong gradient shape");
  const std::size_t k = spec_.kernel, s = spec_.stride, cin = spec_.in, cout = spec_.out;
  Tensor gx(x.shape());
  for (std::size_t oy = 0; oy < os[0]; ++oy) {
    for (std::size_t ox = 0; ox < os[1]; ++ox) {
      const double* g = &grad_output.at(oy, ox, 0);
      for (std::size_t co = 0; co < cout; ++co) grad_bias_[co] += g[co];
      for (std::size_t ky = 0; ky < k; ++ky) {
        for (std::size_t kx = 0; kx < k; ++kx) {
          const std::size_t iy = oy * s + ky, ix = ox * s + kx;
          const double* src = &x.at(iy, ix, 0);
          double* gsrc = &gx.at(iy, ix, 0);
          const std::size_t base = (ky * k + kx) * cin * cout;
          for (std::size_t ci = 0; ci < cin; ++ci) {
            const double* wr = weights_.data().data() + base + ci * cout;
            double* gwr = grad_weights_.data().data() + base + ci * cout;
            double acc = 0.0;
            for (std::size_t co = 0; co < cout; ++co) {
              gwr[co] += src[ci] * g[co];
              acc += wr[co] * g[co];
            }
            gsrc[ci] += acc;
          }
        }
      }
    }
  }
  return gx;
}

// Pooling

Pool2d::Pool2d(LayerSpec spec) : Layer(spec) {
  if (spec.kind != LayerSpec::Kind::MaxPool && spec.kind != LayerSpec::Kind::AvgPool) {
    throw InvalidArgument("Pool2d needs a MaxPool or AvgPool spec");
  }
  if (spec.kernel == 0 || spec.stride == 0) throw InvalidArgument("pool kernel and stride must be >= 1");
}

Tensor Pool2d::forward(const Tensor& input) {
  const Shape os = spec_.output_shape(input.shape());
  input_ = input;
  const std::size_t k = spec_.kernel, s = spec_.stride, c = os[2];
  const bool is_max = spec_.kind == LayerSpec::Kind::MaxPool;
  Tensor y(os);
  if (is_max) argmax_.assign(y.size(), 0);
  const double area = static_cast<double>(k * k);
  for (std::size_t oy = 0; oy < os[0]; ++oy) {
    for (std::size_t ox = 0; ox < os[1]; ++ox) {
      for (std::size_t ch = 0; ch < c; ++ch) {
        double best = 0.0, total = 0.0;
        std::size_t best_idx = 0;
        bool first = true;
        for (std::size_t ky = 0; ky < k; ++ky) {
          for (std::size_t kx = 0; kx < k; ++kx) {
            const std::size_t idx = ((oy * s + ky) * input.shape()[1] + (ox * s + kx)) * c + ch;
            const double v = input[idx];
            total += v;
            if (first || v > best) {
              best = v;
              best_idx = idx;
              first = false;
            }
          }
        }
        const std::size_t o = (oy * os[1] + ox) * c + ch;
        if (is_max) {
          y[o] = best;
          argmax_[o] = best_idx;
        } else {
          y[o] = total / area;
        }
      }
    }
  }
  return y;
}

Tensor Pool2d::backward(const Tensor& grad_output) {
  const Tensor& x = cached_input();
  const Shape os = spec_.output_shape(x.shape());
  if (grad_output.shape() != os) throw ShapeMismatch(spec_.describe() + " backward got wrong gradient shape");
  Tensor gx(x.shape());
  if (spec_.kind == LayerSpec::Kind::MaxPool) {
    for (std::size_t o = 0; o < grad_output.size(); ++o) gx[argmax_[o]] += grad_output[o];
    return gx;
  }
  const std::size_t k = spec_.kernel, s = spec_.stride, c = os[2];
  const double area = static_cast<double>(k * k);
  for (std::size_t oy = 0; oy < os[0]; ++oy)
    for (std::size_t ox = 0; ox < os[1]; ++ox)
      for (std::size_t ch = 0; ch < c; ++ch) {
        const double g = grad_output.at(oy, ox, ch) / area;
        for (std::size_t ky = 0; ky < k; ++ky)
          for (std::size_t kx = 0; kx < k; ++kx) gx.at(oy * s + ky, ox * s + kx, ch) += g;
      }
  return gx;
}

// Activation

ActivationLayer::ActivationLayer(nn::Activation a) : Layer(LayerSpec::act(a)) {}

Tensor ActivationLayer::forward(const Tensor& input) {
  input_ = input;
  Tensor y(input.shape());
  if (spec_.activation == Activation::Softmax) {
    const auto p = softmax(input.data());
    std::copy(p.begin(), p.end(), y.data().begin());
  } else {
    for (std::size_t i = 0; i < input.size(); ++i) y[i] = activate(spec_.activation, input[i]);
  }
  output_ = y;
  return y;
}

Tensor ActivationLayer::backward(const Tensor& grad_output) {
  const Tensor& x = cached_input();
  if (grad_output.shape() != x.shape()) throw ShapeMismatch(spec_.describe() + " backward got wrong gradient shape");
  Tensor gx(x.shape());
  if (spec_.activation == Activation::Softmax) {
    // J^T g with J = diag(p) - p p^T
    double dot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dot += output_[i] * grad_output[i];
    for (std::size_t i = 0; i < x.size(); ++i) gx[i] = output_[i] * (grad_output[i] - dot);
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) gx[i] = grad_output[i] * activation_derivative(spec_.activation, x[i]);
  }
  return gx;
}

std::unique_ptr<Layer> make_layer(const LayerSpec& spec, Rng& rng) {
  switch (spec.kind) {
    case LayerSpec::Kind::Dense: return std::make_unique<Dense>(spec.in, spec.out, rng);
    case LayerSpec::Kind::Conv2d: return std::make_unique<Conv2d>(spec.in, spec.out, spec.kernel, spec.stride, rng);
    case LayerSpec::Kind::MaxPool:
    case LayerSpec::Kind::AvgPool: return std::make_unique<Pool2d>(spec);
    case LayerSpec::Kind::Activation: return std::make_unique<ActivationLayer>(spec.activation);
  }
  throw InvalidArgument("unknown layer kind");
}

}  // namespace rlsuite::nn
