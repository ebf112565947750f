#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rlsuite/core/tensor.hpp"

namespace rlsuite {

using ActionIndex = std::uint32_t;

/// Discrete action set with one human-readable label per action.
class ActionSpace {
 public:
  ActionSpace() = default;
  explicit ActionSpace(std::vector<std::string> labels);

  std::size_t count() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(ActionIndex a) const { return labels_.at(a); }
  bool contains(ActionIndex a) const noexcept { return a < labels_.size(); }

 private:
  std::vector<std::string> labels_;
};

enum class ObservationMode { RawImage, Matrix, HeatmapRGB, HeatmapGray };

std::string_view to_string(ObservationMode mode) noexcept;
ObservationMode parse_observation_mode(std::string_view text);

/// Declared observation layout: tensors are (height, width, channels).
struct ObservationSpec {
  ObservationMode mode = ObservationMode::HeatmapGray;
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t channels = 1;

  ObservationSpec() = default;
  ObservationSpec(ObservationMode m, std::size_t w, std::size_t h, std::size_t c);

  Shape shape() const { return {height, width, channels}; }
  std::size_t data_size() const noexcept { return width * height * channels; }
  bool matches(const Tensor& t) const { return t.shape() == shape(); }
};

/// Diagnostics only. Agents must not depend on any key.
using InfoMap = std::map<std::string, double, std::less<>>;

}  // namespace rlsuite
