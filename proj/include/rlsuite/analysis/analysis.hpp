#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rlsuite/env/spaces.hpp"

namespace rlsuite::analysis {

/// Conv front-end, primary capsules and a class-capsule layer.
struct CapsNetSpec {
  std::size_t height = 28;
  std::size_t width = 28;
  std::size_t channels = 1;
  std::size_t conv_kernel = 9;
  std::size_t conv_stride = 1;
  std::size_t conv_filters = 256;
  std::size_t caps_kernel = 9;
  std::size_t caps_stride = 2;
  std::size_t caps_channels = 256;  // primary_capsules * primary_dims
  std::size_t primary_capsules = 32;
  std::size_t primary_dims = 8;
  std::size_t class_capsules = 16;
  std::size_t class_dims = 16;

  static CapsNetSpec square(std::size_t side, std::size_t channels = 1) noexcept;
};

struct CapsNetCounts {
  std::size_t conv_output = 0;   // side of the conv feature map
  std::size_t primary_grid = 0;  // side of the primary capsule grid
  std::uint64_t conv = 0;
  std::uint64_t primary_caps = 0;
  std::uint64_t capsule_layer = 0;  // transformation matrices only, no routing terms
  std::uint64_t total = 0;
};

/// conv    = k^2 C F + F
/// primary = k^2 F caps_channels + caps_channels
/// capsule = (grid^2 * primary_capsules) * primary_dims * (class_capsules * class_dims)
/// Throws InvalidSpec when a stage has no valid output.
CapsNetCounts capsnet_param_count(const CapsNetSpec& spec);

/// (side, total) for square inputs of each side length.
std::vector<std::pair<std::size_t, std::uint64_t>> param_growth_curve(const CapsNetSpec& base,
                                                                      std::span<const std::size_t> sides);

/// Product of the dimensions. Throws InvalidSpec on overflow.
std::uint64_t repr_data_size(std::span<const std::size_t> dims);

struct ReprRow {
  ObservationMode mode;
  std::vector<std::size_t> dims;
  std::uint64_t size = 0;
};

/// The four Deep Line Wars representations at the given board and image size.
std::vector<ReprRow> dlw_representation_table(std::size_t board_rows = 10, std::size_t board_cols = 15,
                                              std::size_t image_width = 800, std::size_t image_height = 600);

/// Raw-image size over grayscale-heatmap size.
double repr_reduction_ratio(const std::vector<ReprRow>& rows);

/// One reproduced table value checked against its published number.
struct TableCheck {
  std::string table;
  std::string item;
  std::uint64_t expected = 0;
  std::uint64_t actual = 0;
  bool pass = false;
};

/// Calculators used by report_tables; replaceable so a broken formula can be
/// shown to produce FAIL rows.
struct Calculators {
  std::function<CapsNetCounts(const CapsNetSpec&)> capsnet = capsnet_param_count;
  std::function<std::uint64_t(std::span<const std::size_t>)> repr = repr_data_size;
};

std::vector<TableCheck> report_tables(const Calculators& calc = {});

/// Aligned text (default) or CSV with header "table,item,expected,actual,status".
void print_report(const std::vector<TableCheck>& rows, std::ostream& out, bool csv);

bool all_pass(const std::vector<TableCheck>& rows) noexcept;

}  // namespace rlsuite::analysis
