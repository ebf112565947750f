#include "rlsuite/analysis/analysis.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <ostream>

#include "rlsuite/core/errors.hpp"
#include "rlsuite/nn/layers.hpp"

namespace rlsuite::analysis {

CapsNetSpec CapsNetSpec::square(std::size_t side, std::size_t channels) noexcept {
  CapsNetSpec s;
  s.height = side;
  s.width = side;
  s.channels = channels;
  return s;
}

CapsNetCounts capsnet_param_count(const CapsNetSpec& spec) {
  const std::size_t fields[] = {spec.height,        spec.width,           spec.channels,       spec.conv_kernel,
                                spec.conv_stride,   spec.conv_filters,    spec.caps_kernel,    spec.caps_stride,
                                spec.caps_channels, spec.primary_capsules, spec.primary_dims, spec.class_capsules,
                                spec.class_dims};
  if (std::any_of(std::begin(fields), std::end(fields), [](std::size_t v) { return v == 0; })) {
    throw InvalidSpec("capsule network sizes must all be positive");
  }
  if (spec.primary_capsules * spec.primary_dims != spec.caps_channels) {
    throw InvalidSpec("primary capsules x dims must equal the primary conv channels");
  }
  CapsNetCounts c;
  const std::size_t conv_h = nn::conv_output_size(spec.height, spec.conv_kernel, spec.conv_stride);
  const std::size_t conv_w = nn::conv_output_size(spec.width, spec.conv_kernel, spec.conv_stride);
  if (conv_h == 0 || conv_w == 0) throw InvalidSpec("input is smaller than the conv kernel");
  const std::size_t grid_h = nn::conv_output_size(conv_h, spec.caps_kernel, spec.caps_stride);
  const std::size_t grid_w = nn::conv_output_size(conv_w, spec.caps_kernel, spec.caps_stride);
  if (grid_h == 0 || grid_w == 0) throw InvalidSpec("conv output is smaller than the primary capsule kernel");

  c.conv_output = conv_h;
  c.primary_grid = grid_h;
  c.conv = nn::LayerSpec::conv2d(spec.channels, spec.conv_filters, spec.conv_kernel, spec.conv_stride).param_count();
  c.primary_caps =
      nn::LayerSpec::conv2d(spec.conv_filters, spec.caps_channels, spec.caps_kernel, spec.caps_stride).param_count();
  const std::uint64_t capsules = std::uint64_t{grid_h} * grid_w * spec.primary_capsules;
  c.capsule_layer = capsules * spec.primary_dims * (std::uint64_t{spec.class_capsules} * spec.class_dims);
  c.total = c.conv + c.primary_caps + c.capsule_layer;
  return c;
}

std::vector<std::pair<std::size_t, std::uint64_t>> param_growth_curve(const CapsNetSpec& base,
                                                                      std::span<const std::size_t> sides) {
  std::vector<std::pair<std::size_t, std::uint64_t>> out;
  for (std::size_t side : sides) {
    CapsNetSpec s = base;
    s.height = side;
    s.width = side;
    out.emplace_back(side, capsnet_param_count(s).total);
  }
  return out;
}

std::uint64_t repr_data_size(std::span<const std::size_t> dims) {
  std::uint64_t total = 1;
  for (std::size_t d : dims) {
    if (d != 0 && total > std::numeric_limits<std::uint64_t>::max() / d) {
      throw InvalidSpec("representation size overflows 64 bits");
    }
    total *= d;
  }
  return total;
}

std::vector<ReprRow> dlw_representation_table(std::size_t rows, std::size_t cols, std::size_t image_width,
                                              std::size_t image_height) {
  std::vector<ReprRow> out{
      {ObservationMode::RawImage, {image_width, image_height, 3}},
      {ObservationMode::Matrix, {rows, cols, 5}},
      {ObservationMode::HeatmapRGB, {rows, cols, 3}},
      {ObservationMode::HeatmapGray, {rows, cols, 1}},
  };
  for (auto& r : out) r.size = repr_data_size(r.dims);
  return out;
}

double repr_reduction_ratio(const std::vector<ReprRow>& rows) {
  std::uint64_t image = 0, gray = 0;
  for (const auto& r : rows) {
    if (r.mode == ObservationMode::RawImage) image = r.size;
    if (r.mode == ObservationMode::HeatmapGray) gray = r.size;
  }
  if (image == 0 || gray == 0) throw InvalidSpec("table needs both raw image and grayscale rows");
  return static_cast<double>(image) / static_cast<double>(gray);
}

std::vector<TableCheck> report_tables(const Calculators& calc) {
  std::vector<TableCheck> rows;
  auto add = [&](std::string table, std::string item, std::uint64_t expected, std::uint64_t actual) {
    rows.push_back({std::move(table), std::move(item), expected, actual, expected == actual});
  };

  const auto c28 = calc.capsnet(CapsNetSpec::square(28));
  const auto c84 = calc.capsnet(CapsNetSpec::square(84));
  add("capsnet", "28x28x1 conv", 20'992, c28.conv);
  add("capsnet", "28x28x1 primary caps", 5'308'672, c28.primary_caps);
  add("capsnet", "28x28x1 capsule layer", 2'359'296, c28.capsule_layer);
  add("capsnet", "28x28x1 total", 7'688'960, c28.total);
  add("capsnet", "84x84x1 capsule layer", 75'759'616, c84.capsule_layer);
  add("capsnet", "84x84x1 total", 81'089'280, c84.total);

  const std::size_t image[] = {800, 600, 3}, matrix[] = {10, 15, 5}, rgb[] = {10, 15, 3}, gray[] = {10, 15, 1};
  add("dlw-representation", "image 800x600x3", 1'440'000, calc.repr(image));
  add("dlw-representation", "matrix 10x15x5", 750, calc.repr(matrix));
  add("dlw-representation", "heatmap rgb 10x15x3", 450, calc.repr(rgb));
  add("dlw-representation", "heatmap gray 10x15x1", 150, calc.repr(gray));
  return rows;
}

void print_report(const std::vector<TableCheck>& rows, std::ostream& out, bool csv) {
  if (csv) {
    out << "table,item,expected,actual,status\n";
    for (const auto& r : rows) {
      out << r.table << ',' << r.item << ',' << r.expected << ',' << r.actual << ',' << (r.pass ? "PASS" : "FAIL")
          << '\n';
    }
    return;
  }
  for (const auto& r : rows) {
    out << std::left << std::setw(20) << r.table << std::setw(26) << r.item << std::right << std::setw(12)
        << r.expected << std::setw(12) << r.actual << "  " << (r.pass ? "PASS" : "FAIL") << '\n';
  }
}

bool all_pass(const std::vector<TableCheck>& rows) noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const TableCheck& r) { return r.pass; });
}

}  // namespace rlsuite::analysis
