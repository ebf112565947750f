#include "rlsuite/maze/deep_maze.hpp"

#include <array>
#include <deque>
#include <limits>
#include <sstream>

#include "rlsuite/core/errors.hpp"
#include "rlsuite/core/rng.hpp"

namespace rlsuite::maze {
namespace {

constexpr std::array<Cell, 4> kMoves{{{0, -1}, {0, 1}, {-1, 0}, {1, 0}}};

std::size_t index_of(const MazeGrid& g, Cell c) noexcept { return static_cast<std::size_t>(c.y * g.width + c.x); }

void validate_grid(const MazeGrid& g) {
  if (g.width < 1 || g.height < 1 || g.walls.size() != static_cast<std::size_t>(g.width * g.height)) {
    throw InvalidConfig("maze grid dimensions do not match its cell data");
  }
  if (!g.passable(g.start) || !g.passable(g.goal)) throw InvalidConfig("start and goal must be corridor cells");
  if (g.start == g.goal) throw InvalidConfig("start and goal must differ");
}

}  // namespace

std::string_view to_string(MazeMode mode) noexcept {
  return mode == MazeMode::Deterministic ? "Deterministic" : "Stochastic";
}

void MazeConfig::validate() const {
  auto ok = [](int v) { return v >= 7 && v <= 55 && v % 2 == 1; };
  if (!ok(width) || !ok(height)) {
    throw InvalidConfig("maze size " + std::to_string(width) + "x" + std::to_string(height) +
                        " must be odd and within [7, 55]");
  }
  if (episode_cap < 1) throw InvalidConfig("maze episode_cap must be >= 1");
  if (cell_pixels < 1) throw InvalidConfig("maze cell_pixels must be >= 1");
}

MazeGrid open_grid(int width, int height, Cell start, Cell goal) {
  MazeGrid g{width, height, std::vector<std::uint8_t>(static_cast<std::size_t>(width * height), 0), start, goal};
  validate_grid(g);
  return g;
}

MazeGrid generate_maze(const MazeConfig& config, std::uint64_t seed, std::uint64_t episode) {
  config.validate();
  const std::uint64_t layout_seed = config.mode == MazeMode::Deterministic ? seed : mix_seed(seed, episode);
  Rng rng(layout_seed);

  MazeGrid g;
  g.width = config.width;
  g.height = config.height;
  g.walls.assign(static_cast<std::size_t>(g.width * g.height), 1);

  // Rooms sit on odd coordinates; carving removes the wall between two rooms.
  std::vector<Cell> stack{{1, 1}};
  g.walls[index_of(g, {1, 1})] = 0;
  while (!stack.empty()) {
    const Cell c = stack.back();
    std::array<Cell, 4> candidates{};
    std::size_t n = 0;
    for (const Cell d : kMoves) {
      const Cell next{c.x + 2 * d.x, c.y + 2 * d.y};
      if (next.x > 0 && next.y > 0 && next.x < g.width - 1 && next.y < g.height - 1 && g.is_wall(next)) {
        candidates[n++] = next;
      }
    }
    if (n == 0) {
      stack.pop_back();
      continue;
    }
    const Cell next = candidates[rng.uniform(n)];
    g.walls[index_of(g, {(c.x + next.x) / 2, (c.y + next.y) / 2})] = 0;
    g.walls[index_of(g, next)] = 0;
    stack.push_back(next);
  }

  if (config.mode == MazeMode::Deterministic) {
    g.start = {1, 1};
    g.goal = {g.width - 2, g.height - 2};
  } else {
    std::vector<Cell> corridors;
    for (int y = 0; y < g.height; ++y)
      for (int x = 0; x < g.width; ++x)
        if (!g.is_wall({x, y})) corridors.push_back({x, y});
    const auto s = rng.uniform(corridors.size());
    auto t = rng.uniform(corridors.size() - 1);
    if (t >= s) ++t;
    g.start = corridors[s];
    g.goal = corridors[t];
  }
  return g;
}

std::vector<int> bfs_distance_field(const MazeGrid& grid, Cell target) {
  std::vector<int> dist(grid.walls.size(), -1);
  if (!grid.passable(target)) return dist;
  std::deque<Cell> frontier{target};
  dist[index_of(grid, target)] = 0;
  while (!frontier.empty()) {
    const Cell c = frontier.front();
    frontier.pop_front();
    const int d = dist[index_of(grid, c)];
    for (const Cell m : kMoves) {
      const Cell n{c.x + m.x, c.y + m.y};
      if (grid.passable(n) && dist[index_of(grid, n)] < 0) {
        dist[index_of(grid, n)] = d + 1;
        frontier.push_back(n);
      }
    }
  }
  return dist;
}

std::optional<int> bfs_shortest_path(const MazeGrid& grid, Cell from, Cell to) {
  if (!grid.passable(from) || !grid.passable(to)) {
    throw InvalidArgument("bfs_shortest_path: endpoints must be corridor cells");
  }
  const int d = bfs_distance_field(grid, to)[index_of(grid, from)];
  if (d < 0) return std::nullopt;
  return d;
}

std::uint64_t maze_state_space(std::uint64_t width, std::uint64_t height) {
  std::uint64_t cells = 0;
  if (__builtin_mul_overflow(width, height, &cells)) throw InvalidArgument("maze_state_space: w*h overflows");
  if (cells < 2) throw InvalidArgument("maze_state_space: needs at least two cells");
  // C(n, 2) = n(n-1)/2; one of n, n-1 is even so divide first.
  std::uint64_t a = cells, b = cells - 1;
  (a % 2 == 0 ? a : b) /= 2;
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw InvalidArgument("maze_state_space: result overflows 64 bits");
  return out;
}

std::string to_text(const MazeGrid& grid) {
  std::string out;
  out.reserve(static_cast<std::size_t>((grid.width + 1) * grid.height));
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      const Cell c{x, y};
      out += c == grid.start ? 'S' : c == grid.goal ? 'G' : grid.is_wall(c) ? '#' : '.';
    }
    out += '\n';
  }
  return out;
}

MazeGrid parse_maze_text(std::string_view text) {
  MazeGrid g;
  std::optional<Cell> start, goal;
  int y = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (g.width == 0) g.width = static_cast<int>(line.size());
    if (static_cast<int>(line.size()) != g.width) throw ConfigError("ragged maze row", y + 1);
    for (int x = 0; x < g.width; ++x) {
      switch (line[static_cast<std::size_t>(x)]) {
        case '#': g.walls.push_back(1); break;
        case '.': g.walls.push_back(0); break;
        case 'S':
          if (start) throw ConfigError("more than one start", y + 1);
          start = Cell{x, y};
          g.walls.push_back(0);
          break;
        case 'G':
          if (goal) throw ConfigError("more than one goal", y + 1);
          goal = Cell{x, y};
          g.walls.push_back(0);
          break;
        default: throw ConfigError(std::string("unexpected maze character '") + line[x] + "'", y + 1);
      }
    }
    ++y;
  }
  g.height = y;
  if (!start || !goal) throw ConfigError("maze needs exactly one 'S' and one 'G'", 0);
  g.start = *start;
  g.goal = *goal;
  validate_grid(g);
  return g;
}

MazeState make_state(MazeGrid grid) {
  validate_grid(grid);
  const auto opt = bfs_shortest_path(grid, grid.start, grid.goal);
  if (!opt) throw InvalidConfig("goal is unreachable from start");
  MazeState s;
  s.player = grid.start;
  s.optimal_length = *opt;
  s.grid = std::move(grid);
  return s;
}

Outcome maze_step(MazeState& state, MazeAction action) {
  if (state.player == state.grid.goal) throw SteppedTerminalEnv("maze_step: player already on the goal");
  const Cell d = kMoves[static_cast<std::size_t>(action)];
  const Cell next{state.player.x + d.x, state.player.y + d.y};
  if (state.grid.passable(next)) state.player = next;
  ++state.steps_taken;
  Outcome o;
  o.reward = state.steps_taken > static_cast<std::size_t>(state.optimal_length) ? -1.0 : 0.0;
  o.terminal = state.player == state.grid.goal;
  return o;
}

ObservationSpec observation_spec_for(ObservationMode mode, int width, int height, int cell_pixels) {
  const auto w = static_cast<std::size_t>(width), h = static_cast<std::size_t>(height);
  switch (mode) {
    case ObservationMode::HeatmapGray: return {mode, w, h, 1};
    case ObservationMode::HeatmapRGB: return {mode, w, h, 3};
    case ObservationMode::Matrix: return {mode, w, h, 3};
    case ObservationMode::RawImage: {
      const auto px = static_cast<std::size_t>(cell_pixels);
      return {mode, w * px, h * px, 3};
    }
  }
  throw UnsupportedMode("unknown observation mode");
}

ObservationSpec observation_spec_for(const MazeConfig& config) {
  return observation_spec_for(config.observation, config.width, config.height, config.cell_pixels);
}

Tensor maze_observe(const MazeState& state, const ObservationSpec& spec) {
  const MazeGrid& g = state.grid;
  Tensor t(spec.shape());
  switch (spec.mode) {
    case ObservationMode::HeatmapGray:
      for (int y = 0; y < g.height; ++y)
        for (int x = 0; x < g.width; ++x) t.at(y, x, 0) = g.is_wall({x, y}) ? 1.0 : 0.0;
      t.at(g.goal.y, g.goal.x, 0) = 0.3;
      t.at(state.player.y, state.player.x, 0) = 0.6;
      break;
    case ObservationMode::HeatmapRGB:
    case ObservationMode::RawImage: {
      const std::size_t px = spec.width / static_cast<std::size_t>(g.width);
      auto paint = [&](int cx, int cy, double r, double gr, double b) {
        for (std::size_t yy = 0; yy < px; ++yy)
          for (std::size_t xx = 0; xx < px; ++xx) {
            const std::size_t py = static_cast<std::size_t>(cy) * px + yy, pxx = static_cast<std::size_t>(cx) * px + xx;
            t.at(py, pxx, 0) = r;
            t.at(py, pxx, 1) = gr;
            t.at(py, pxx, 2) = b;
          }
      };
      for (int y = 0; y < g.height; ++y)
        for (int x = 0; x < g.width; ++x)
          if (g.is_wall({x, y})) paint(x, y, 1, 1, 1);
      paint(g.goal.x, g.goal.y, 0, 1, 0);
      if (state.player == g.goal) {
        paint(g.goal.x, g.goal.y, 1, 1, 0);
      } else {
        paint(state.player.x, state.player.y, 1, 0, 0);
      }
      break;
    }
    case ObservationMode::Matrix:
      for (int y = 0; y < g.height; ++y)
        for (int x = 0; x < g.width; ++x) t.at(y, x, 0) = g.is_wall({x, y}) ? 1.0 : 0.0;
      t.at(state.player.y, state.player.x, 1) = 1.0;
      t.at(g.goal.y, g.goal.x, 2) = 1.0;
      break;
  }
  return t;
}

namespace {

ActionSpace maze_actions() { return ActionSpace({"Up", "Down", "Left", "Right"}); }

}  // namespace

DeepMazeEnv::DeepMazeEnv(MazeConfig config, std::uint64_t seed)
    : config_(config), seed_(seed), actions_(maze_actions()), spec_(observation_spec_for(config)) {
  config_.validate();
  reset();
}

DeepMazeEnv::DeepMazeEnv(MazeGrid grid, ObservationMode observation, std::size_t episode_cap)
    : fixed_grid_(std::move(grid)), actions_(maze_actions()) {
  config_.width = fixed_grid_->width;
  config_.height = fixed_grid_->height;
  config_.observation = observation;
  config_.episode_cap = episode_cap;
  if (episode_cap < 1) throw InvalidConfig("maze episode_cap must be >= 1");
  spec_ = observation_spec_for(config_);
  state_ = make_state(*fixed_grid_);
  reset();
}

void DeepMazeEnv::on_reset(std::optional<std::uint64_t> seed) {
  bool seed_changed = false;
  if (seed) {
    seed_changed = *seed != seed_;
    seed_ = *seed;
    episode_ = 0;
  } else if (started_) {
    ++episode_;
  }
  const bool regenerate = !started_ || seed_changed || config_.mode == MazeMode::Stochastic;
  started_ = true;

  if (fixed_grid_ || !regenerate) {
    state_.player = state_.grid.start;
    state_.steps_taken = 0;
    return;
  }
  state_ = make_state(generate_maze(config_, seed_, episode_));
}

Outcome DeepMazeEnv::on_step(ActionIndex action, InfoMap* info) {
  Outcome o = maze_step(state_, static_cast<MazeAction>(action));
  if (!o.terminal && state_.steps_taken >= config_.episode_cap) {
    o.terminal = true;
    if (info) info->emplace("truncated", 1.0);
  }
  if (info) {
    info->emplace("steps_taken", static_cast<double>(state_.steps_taken));
    info->emplace("optimal_length", static_cast<double>(state_.optimal_length));
  }
  return o;
}

Tensor DeepMazeEnv::observe() const { return maze_observe(state_, spec_); }

std::string DeepMazeEnv::render_text() const {
  std::string text = to_text(state_.grid);
  const auto row = static_cast<std::size_t>(state_.grid.width + 1);
  text[static_cast<std::size_t>(state_.player.y) * row + static_cast<std::size_t>(state_.player.x)] = 'P';
  return text;
}

}  // namespace rlsuite::maze
