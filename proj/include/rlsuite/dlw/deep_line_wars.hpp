#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rlsuite/core/rng.hpp"
#include "rlsuite/env/environment.hpp"

namespace rlsuite::dlw {

/// Mercenary type. Speed is stored in thousandths of a cell per tick so unit
/// movement stays in exact integer arithmetic.
struct UnitKind {
  std::string name;
  int gold_cost = 0;
  int hp = 1;
  int speed_milli = 250;
  int income_bonus_percent = 10;
  int leak_damage = 1;
  bool operator==(const UnitKind&) const = default;
};

struct TowerKind {
  std::string name;
  int gold_cost = 0;
  int damage = 1;
  int range = 1;     // Chebyshev radius in cells
  int cooldown = 1;  // ticks between shots
  bool operator==(const TowerKind&) const = default;
};

enum class OpponentPolicy { Random, Idle, AlwaysSend };

/// Match rules and catalog. None of the numbers are canonical; they are
/// defaults picked so typical matches finish well inside max_ticks.
struct DlwConfig {
  int width = 15;   // columns; column 0 and width-1 are the two bases
  int height = 10;  // lanes
  int tick_rate = 10;  // ticks per in-game second (informational)
  int income_interval = 10;
  int start_gold = 50;
  int start_health = 50;
  int start_income = 10;
  int bounty_percent = 50;
  std::size_t max_ticks = 3000;
  bool direct_build = false;
  ObservationMode observation = ObservationMode::HeatmapGray;
  int image_width = 800;
  int image_height = 600;
  OpponentPolicy opponent = OpponentPolicy::Random;

  // Normalisation caps for the auxiliary vector (health uses start_health).
  int gold_cap = 1000;
  int lumber_cap = 1000;
  int income_cap = 500;

  std::vector<UnitKind> units;
  std::vector<TowerKind> towers;

  static DlwConfig defaults();
  void validate() const;

  /// Inclusive build-zone column range in a player's own perspective.
  int build_min_col() const noexcept { return 1; }
  int build_max_col() const noexcept { return width / 2 - 1; }

  bool operator==(const DlwConfig&) const = default;
};

/// YAML match config. Top-level keys mirror the DlwConfig fields; `units` and
/// `towers`, when present, replace the default catalog:
///
///   opponent: random            # random | idle | always_send
///   observation: HeatmapGray
///   units:
///     - {name: Footman, gold_cost: 20, hp: 30, speed_milli: 250}
///   towers:
///     - {name: Arrow, gold_cost: 40, damage: 4, range: 1, cooldown: 3}
///
/// Throws ConfigError with the line of the offending key.
DlwConfig parse_dlw_config(const std::string& yaml_text);
DlwConfig load_dlw_config(const std::string& path);

struct Coord {
  int x = 0;
  int y = 0;
  bool operator==(const Coord&) const = default;
};

struct PlayerState {
  int health = 0;
  int gold = 0;
  int lumber = 0;
  int income = 0;
  Coord cursor;  // own perspective

  // gold ledger: gold == initial + passive + bounties - purchases
  long long gold_initial = 0;
  long long gold_passive = 0;
  long long gold_bounties = 0;
  long long gold_purchases = 0;

  int units_bought = 0;
  int towers_built = 0;
  int leaks = 0;  // own units that reached the enemy base
  int kills = 0;
  int invalid_actions = 0;

  bool ledger_holds() const noexcept;
  bool operator==(const PlayerState&) const = default;
};

struct Unit {
  std::uint32_t id = 0;
  int kind = 0;
  int owner = 0;
  int row = 0;
  int progress_milli = 0;  // distance travelled from the owner's base column
  int hp = 0;

  bool operator==(const Unit&) const = default;
};

struct Tower {
  int kind = 0;
  int owner = 0;
  Coord pos;  // absolute board coordinates
  int cooldown_remaining = 0;

  bool operator==(const Tower&) const = default;
};

struct DlwState {
  DlwConfig config;
  std::array<PlayerState, 2> players;
  std::vector<Unit> units;
  std::vector<Tower> towers;
  std::size_t tick = 0;
  std::uint32_t next_unit_id = 0;
  Rng rng;
  bool terminal = false;
  int winner = -1;  // -1 while running or on a draw

  /// Absolute column of a unit.
  int unit_column(const Unit& u) const noexcept;
  /// Convert between a player's perspective and absolute board x.
  int to_absolute_x(int player, int x) const noexcept { return player == 0 ? x : config.width - 1 - x; }

  bool operator==(const DlwState&) const = default;
};

DlwState new_game(DlwConfig config, std::uint64_t seed);

enum class ActionType { NoOp, BuySendUnit, BuildTower, MoveCursor, BuildAt };
enum class Direction { Up, Down, Left, Right };

struct DlwAction {
  ActionType type = ActionType::NoOp;
  int kind = 0;
  Direction direction = Direction::Up;
  Coord at;  // perspective coordinates, BuildAt only
};

std::size_t action_count(const DlwConfig& config) noexcept;
DlwAction decode_action(const DlwConfig& config, ActionIndex index);

/// Flat action enumeration: NoOp, Buy(unit k)..., Build(tower t)..., cursor
/// Up/Down/Left/Right, then optionally BuildAt(t, x, y) for every build cell.
class ActionCodec {
 public:
  explicit ActionCodec(const DlwConfig& config);
  std::size_t count() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  DlwAction decode(ActionIndex index) const { return decode_action(config_, index); }
  ActionIndex encode_buy(int unit_kind) const noexcept { return static_cast<ActionIndex>(1 + unit_kind); }
  ActionIndex encode_build(int tower_kind) const noexcept {
    return static_cast<ActionIndex>(1 + units_ + tower_kind);
  }
  ActionIndex encode_move(Direction d) const noexcept {
    return static_cast<ActionIndex>(1 + units_ + towers_ + static_cast<int>(d));
  }

 private:
  DlwConfig config_;
  int units_;
  int towers_;
  std::vector<std::string> labels_;
};

/// Spend gold on a unit: gold -= cost, income += round(cost * bonus%), unit
/// spawns on a row drawn from the match RNG. Throws InsufficientGold.
const Unit& buy_unit(DlwState& state, int player, int unit_kind);

/// Place a tower at a perspective cell inside the player's build zone.
/// Throws InsufficientGold or InvalidAction (occupied / outside zone).
const Tower& build_tower(DlwState& state, int player, int tower_kind, Coord perspective_cell);

/// Gold awarded to the killer's owner for a unit destroyed by tower fire.
int kill_bounty(const DlwConfig& config, const UnitKind& kind) noexcept;

struct LockstepResult {
  std::array<Outcome, 2> outcomes;  // per player: +1 win, -1 loss, 0 otherwise
  bool terminal = false;
  int winner = -1;
};

/// Apply both actions, then advance one tick. Within a tick the order is
/// purchases, tower construction (and cursor moves), unit movement, tower
/// fire (lowest tower index first), leak damage, income.
LockstepResult dlw_step(DlwState& state, ActionIndex action_p0, ActionIndex action_p1);

/// HeatmapRGB: red friendly towers, green enemy units, teal cursor.
/// HeatmapGray: luma of the RGB heatmap. Matrix: planes {friendly towers,
/// friendly units, enemy towers, enemy units, cursor}. RawImage: rendered
/// board at the configured pixel size. The board is mirrored for player 1 so
/// both players see their own base on the left.
Tensor dlw_observe(const DlwState& state, const ObservationSpec& spec, int perspective);

ObservationSpec observation_spec_for(const DlwConfig& config);

/// [own health, gold, lumber, income, enemy health, gold, lumber, income],
/// each divided by its cap and clamped to [0, 1].
std::array<double, 8> dlw_aux_vector(const DlwState& state, int perspective);

/// A scripted or learned policy for lockstep play.
using Policy = std::function<ActionIndex(const DlwState&, int player)>;

Policy random_policy(const DlwConfig& config, std::uint64_t seed);
Policy idle_policy();
Policy always_send_policy(const DlwConfig& config, int unit_kind = 0);

struct MatchStats {
  int winner = -1;
  std::size_t ticks = 0;
  std::array<int, 2> units_bought{};
  std::array<int, 2> leaks{};
  std::array<int, 2> final_health{};
};

MatchStats play_match(const DlwConfig& config, std::uint64_t seed, const Policy& p0, const Policy& p1);

/// Append one row (header written when the file is new or empty).
void append_match_csv(const std::string& path, std::uint64_t seed, const MatchStats& stats);

/// Single-agent view: the agent plays player 0 against the configured
/// opponent policy. Reward is +1 on a win, -1 on a loss, 0 otherwise.
class DeepLineWarsEnv final : public Environment {
 public:
  DeepLineWarsEnv(DlwConfig config, std::uint64_t seed);

  std::string_view kind_name() const noexcept override { return "DeepLineWars"; }
  const ActionSpace& action_space() const noexcept override { return actions_; }
  const ObservationSpec& observation_spec() const noexcept override { return spec_; }
  Tensor observe() const override;
  std::string render_text() const override;
  std::vector<double> auxiliary() const override;

  const DlwState& state() const noexcept { return state_; }

 protected:
  void on_reset(std::optional<std::uint64_t> seed) override;
  Outcome on_step(ActionIndex action, InfoMap* info) override;

 private:
  DlwConfig config_;
  std::uint64_t seed_;
  std::uint64_t episode_ = 0;
  bool started_ = false;
  ActionCodec codec_;
  ActionSpace actions_;
  ObservationSpec spec_;
  DlwState state_;
  Policy opponent_;
};

}  // namespace rlsuite::dlw
