#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rlsuite/env/environment.hpp"

namespace rlsuite::maze {

struct Cell {
  int x = 0;
  int y = 0;
  bool operator==(const Cell&) const = default;
};

enum class MazeMode { Deterministic, Stochastic };

std::string_view to_string(MazeMode mode) noexcept;

enum class MazeAction : ActionIndex { Up = 0, Down = 1, Left = 2, Right = 3 };

struct MazeConfig {
  int width = 11;
  int height = 11;
  MazeMode mode = MazeMode::Deterministic;
  ObservationMode observation = ObservationMode::HeatmapGray;
  /// Environment truncates the episode after this many steps.
  std::size_t episode_cap = 1000;
  /// Pixels per cell for RawImage rendering.
  int cell_pixels = 4;

  /// Throws InvalidConfig unless width/height are odd and within [7, 55].
  void validate() const;
};

/// Wall layout plus start and goal. Row-major, `walls[y * width + x]`.
struct MazeGrid {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> walls;
  Cell start;
  Cell goal;

  bool in_bounds(Cell c) const noexcept { return c.x >= 0 && c.y >= 0 && c.x < width && c.y < height; }
  bool is_wall(Cell c) const noexcept { return walls[static_cast<std::size_t>(c.y * width + c.x)] != 0; }
  bool passable(Cell c) const noexcept { return in_bounds(c) && !is_wall(c); }

  bool operator==(const MazeGrid&) const = default;
};

/// Fully open grid (no walls) with the given start and goal.
MazeGrid open_grid(int width, int height, Cell start, Cell goal);

/// Recursive-backtracker perfect maze. Deterministic mode derives the layout
/// from `seed` alone; Stochastic mode mixes in `episode`.
MazeGrid generate_maze(const MazeConfig& config, std::uint64_t seed, std::uint64_t episode = 0);

/// Minimal step count under 4-neighbour moves, or nullopt if unreachable.
std::optional<int> bfs_shortest_path(const MazeGrid& grid, Cell from, Cell to);

/// Distance from every cell to `target` (-1 for walls and unreachable cells).
std::vector<int> bfs_distance_field(const MazeGrid& grid, Cell target);

/// C(w*h, 2): number of distinct (player, goal) placements.
std::uint64_t maze_state_space(std::uint64_t width, std::uint64_t height);

/// '#' wall, '.' corridor, 'S' start, 'G' goal; one line per row.
std::string to_text(const MazeGrid& grid);
MazeGrid parse_maze_text(std::string_view text);

struct MazeState {
  MazeGrid grid;
  Cell player;
  std::size_t steps_taken = 0;
  int optimal_length = 0;
};

/// Validates the grid (start != goal, both corridors, goal reachable) and
/// builds the initial state.
MazeState make_state(MazeGrid grid);

/// One move. Walls and the boundary block movement; every call counts as a
/// step. Reward is 0 while steps_taken <= optimal_length and -1 per step
/// beyond it, so an optimal episode totals 0. Throws SteppedTerminalEnv once
/// the player stands on the goal.
Outcome maze_step(MazeState& state, MazeAction action);

ObservationSpec observation_spec_for(const MazeConfig& config);
ObservationSpec observation_spec_for(ObservationMode mode, int width, int height, int cell_pixels = 4);

/// HeatmapGray: wall 1.0, corridor 0.0, player 0.6, goal 0.3.
/// HeatmapRGB: walls white, player red, goal green.
/// Matrix: planes {walls, player, goal}.
/// RawImage: HeatmapRGB upscaled by `spec` pixel size.
Tensor maze_observe(const MazeState& state, const ObservationSpec& spec);

class DeepMazeEnv final : public Environment {
 public:
  DeepMazeEnv(MazeConfig config, std::uint64_t seed);

  /// Fixed, hand-built layout (any size). Reset always restores it.
  DeepMazeEnv(MazeGrid grid, ObservationMode observation = ObservationMode::HeatmapGray,
              std::size_t episode_cap = 1000);

  std::string_view kind_name() const noexcept override { return "DeepMaze"; }
  const ActionSpace& action_space() const noexcept override { return actions_; }
  const ObservationSpec& observation_spec() const noexcept override { return spec_; }
  Tensor observe() const override;
  std::string render_text() const override;

  const MazeState& state() const noexcept { return state_; }
  const MazeConfig& config() const noexcept { return config_; }
  std::uint64_t episode_index() const noexcept { return episode_; }

 protected:
  void on_reset(std::optional<std::uint64_t> seed) override;
  Outcome on_step(ActionIndex action, InfoMap* info) override;

 private:
  MazeConfig config_;
  std::optional<MazeGrid> fixed_grid_;
  std::uint64_t seed_ = 0;
  std::uint64_t episode_ = 0;
  bool started_ = false;
  ActionSpace actions_;
  ObservationSpec spec_;
  MazeState state_;
};

}  // namespace rlsuite::maze
