#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rlsuite/core/rng.hpp"
#include "rlsuite/env/environment.hpp"

namespace rlsuite::rts {

inline constexpr long long kMaxStockpile = 1'000'000;  // lumber, gold, oil
inline constexpr int kMaxPopulation = 200;             // food, units

enum class Tile : std::uint8_t { Grass, Forest, GoldMine, Oil, Spawn };
enum class Resource : std::uint8_t { Lumber = 0, Gold = 1, Oil = 2 };

struct RtsResources {
  long long lumber = 0;
  long long gold = 0;
  long long oil = 0;
  int food = 0;
  int units = 0;

  long long& operator[](Resource r) noexcept { return r == Resource::Lumber ? lumber : r == Resource::Gold ? gold : oil; }
  long long operator[](Resource r) const noexcept {
    return r == Resource::Lumber ? lumber : r == Resource::Gold ? gold : oil;
  }
  bool within_limits() const noexcept;
  bool operator==(const RtsResources&) const = default;
};

/// Only resource_count moves in this build; the military fields stay zero.
struct Scoreboard {
  long long kills = 0;
  long long defensive_points = 0;
  long long offensive_points = 0;
  long long resource_count = 0;
  bool operator==(const Scoreboard&) const = default;
};

struct Pos {
  int x = 0;
  int y = 0;
  bool operator==(const Pos&) const = default;
};

struct RtsMap {
  int width = 0;
  int height = 0;
  std::vector<Tile> tiles;
  std::vector<int> stock;  // remaining resource per tile, 0 for non-resource tiles
  std::array<Pos, 2> spawns{};

  bool in_bounds(Pos p) const noexcept { return p.x >= 0 && p.y >= 0 && p.x < width && p.y < height; }
  std::size_t index(Pos p) const noexcept { return static_cast<std::size_t>(p.y * width + p.x); }
  Tile tile(Pos p) const noexcept { return tiles[index(p)]; }
  bool operator==(const RtsMap&) const = default;
};

struct RtsConfig {
  int width = 10;
  int height = 10;
  int harvest_rate = 1;
  int carry_cap = 10;
  std::size_t tick_limit = 600;
  int townhall_gold_cost = 100;
  int townhall_lumber_cost = 50;
  int build_time = 10;
  int food_per_townhall = 5;
  int forest_stock = 50;
  int gold_stock = 500;
  int oil_stock = 500;
  ObservationMode observation = ObservationMode::Matrix;
  bool random_opponent = false;  // otherwise the opponent idles
  /// Plain-text map; empty means generate one from the seed.
  std::string map_text;
  /// When set, the action histogram is written here at terminal.
  std::string histogram_csv;

  void validate() const;
  bool operator==(const RtsConfig&) const = default;
};

/// '.' grass, 'F' forest, 'G' gold mine, 'O' oil, '1'/'2' player spawns.
RtsMap parse_rts_map(std::string_view text, const RtsConfig& config);
std::string to_text(const RtsMap& map);

/// Point-symmetric random map with spawns at (1,1) and (w-2,h-2).
RtsMap generate_rts_map(const RtsConfig& config, std::uint64_t seed);

enum class EntityKind : std::uint8_t { Worker, TownHall };
enum class EntityState : std::uint8_t { Idle, MovingTo, Harvesting, Building, Depositing };

struct RtsEntity {
  std::uint32_t id = 0;
  EntityKind kind = EntityKind::Worker;
  int owner = 0;
  Pos pos;
  EntityState state = EntityState::Idle;
  Pos target;        // MovingTo destination
  Pos harvest_tile;  // remembered resource tile
  bool has_harvest_tile = false;
  int carry = 0;
  Resource carry_kind = Resource::Gold;
  int build_ticks_left = 0;
  bool operator==(const RtsEntity&) const = default;
};

enum class RtsAction : ActionIndex {
  NoOp = 0,
  SelectNextUnit,
  MoveUp,
  MoveDown,
  MoveLeft,
  MoveRight,
  HarvestNearest,
  ReturnToDepot,
  BuildTownHall,
};
inline constexpr std::size_t kRtsActionCount = 9;

ActionSpace rts_action_set();

struct RtsPlayer {
  RtsResources resources;
  Scoreboard score;
  std::array<long long, 3> deposited{};  // per Resource, before clamping
  std::uint32_t selected = 0;             // entity id of the selected worker
  bool has_selection = false;
  std::array<long long, kRtsActionCount> action_histogram{};
  long long invalid_actions = 0;
  bool operator==(const RtsPlayer&) const = default;
};

struct RtsState {
  RtsConfig config;
  RtsMap map;
  std::vector<RtsEntity> entities;
  std::array<RtsPlayer, 2> players;
  std::array<long long, 3> initial_stock{};
  std::size_t tick = 0;
  std::uint32_t next_id = 0;
  bool terminal = false;
  int winner = -1;

  long long remaining_stock(Resource r) const noexcept;
  long long in_transit(Resource r) const noexcept;
  /// deposited == initial - remaining - in transit, for every resource.
  bool ledger_holds() const noexcept;
  bool operator==(const RtsState&) const = default;
};

/// Each player starts with a TownHall on its spawn and one adjacent Worker.
RtsState new_rts_game(const RtsConfig& config, RtsMap map);

struct RtsTickResult {
  std::array<Outcome, 2> outcomes;  // reward = resources deposited this tick
  std::array<bool, 2> invalid{};
  bool terminal = false;
  int winner = -1;
};

/// Apply each player's action to its selected worker, then advance every
/// entity one tick. Invalid actions resolve to NoOp.
RtsTickResult rts_tick(RtsState& state, RtsAction action_p0, RtsAction action_p1);

/// Planes: grass, forest, gold, oil, own units, enemy units, own buildings,
/// enemy buildings, selected unit. Only Matrix mode is supported.
Tensor rts_observe(const RtsState& state, const ObservationSpec& spec, int perspective);
ObservationSpec observation_spec_for(const RtsConfig& config);

/// [lumber, gold, oil, food, units] of the viewer then the opponent, each
/// divided by its upper limit.
std::array<double, 10> rts_aux_vector(const RtsState& state, int perspective);

/// Score as reported in summaries: resource_count / 100.
double rts_score(const RtsPlayer& player) noexcept;

void write_action_histogram_csv(const std::string& path, const RtsState& state);

class DeepRtsLiteEnv final : public Environment {
 public:
  DeepRtsLiteEnv(RtsConfig config, std::uint64_t seed);

  std::string_view kind_name() const noexcept override { return "DeepRtsLite"; }
  const ActionSpace& action_space() const noexcept override { return actions_; }
  const ObservationSpec& observation_spec() const noexcept override { return spec_; }
  Tensor observe() const override;
  std::string render_text() const override;
  std::vector<double> auxiliary() const override;

  const RtsState& state() const noexcept { return state_; }

 protected:
  void on_reset(std::optional<std::uint64_t> seed) override;
  Outcome on_step(ActionIndex action, InfoMap* info) override;

 private:
  RtsConfig config_;
  std::uint64_t seed_;
  std::uint64_t episode_ = 0;
  bool started_ = false;
  ActionSpace actions_;
  ObservationSpec spec_;
  RtsState state_;
  Rng opponent_rng_;
};

}  // namespace rlsuite::rts
