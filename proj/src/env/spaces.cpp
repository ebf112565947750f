#include "rlsuite/env/spaces.hpp"

#include <set>

#include "rlsuite/core/errors.hpp"

namespace rlsuite {

ActionSpace::ActionSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidArgument("action space needs at least one action");
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw InvalidArgument("duplicate action label '" + l + "'");
  }
}

std::string_view to_string(ObservationMode mode) noexcept {
  switch (mode) {
    case ObservationMode::RawImage: return "RawImage";
    case ObservationMode::Matrix: return "Matrix";
    case ObservationMode::HeatmapRGB: return "HeatmapRGB";
    case ObservationMode::HeatmapGray: return "HeatmapGray";
  }
  return "?";
}

ObservationMode parse_observation_mode(std::string_view text) {
  for (auto m : {ObservationMode::RawImage, ObservationMode::Matrix, ObservationMode::HeatmapRGB,
                 ObservationMode::HeatmapGray}) {
    if (text == to_string(m)) return m;
  }
  throw InvalidConfig("unknown observation mode '" + std::string(text) + "'");
}

ObservationSpec::ObservationSpec(ObservationMode m, std::size_t w, std::size_t h, std::size_t c)
    : mode(m), width(w), height(h), channels(c) {
  if (w == 0 || h == 0 || c == 0) throw InvalidArgument("observation dimensions must be positive");
  const bool rgb = m == ObservationMode::RawImage || m == ObservationMode::HeatmapRGB;
  if (rgb && c != 3) throw InvalidArgument("RGB observation modes have 3 channels");
  if (m == ObservationMode::HeatmapGray && c != 1) throw InvalidArgument("grayscale heatmap has 1 channel");
}

}  // namespace rlsuite
