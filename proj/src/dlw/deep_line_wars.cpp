#include "rlsuite/dlw/deep_line_wars.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "rlsuite/core/errors.hpp"

namespace rlsuite::dlw {
namespace {

constexpr std::array<const char*, 4> kDirectionNames{"Up", "Down", "Left", "Right"};

int round_percent(int value, int percent) noexcept {
  return static_cast<int>(std::lround(static_cast<double>(value) * percent / 100.0));
}

void check_player(int player) {
  if (player != 0 && player != 1) throw InvalidArgument("player must be 0 or 1");
}

}  // namespace

bool PlayerState::ledger_holds() const noexcept {
  return gold == gold_initial + gold_passive + gold_bounties - gold_purchases;
}

DlwConfig DlwConfig::defaults() {
  DlwConfig c;
  c.units = {
      {"Footman", 20, 30, 250, 10, 1},
      {"Runner", 40, 30, 500, 10, 1},
      {"Brute", 80, 120, 200, 10, 1},
  };
  c.towers = {
      {"Arrow", 40, 4, 1, 3},
      {"Cannon", 80, 12, 1, 5},
  };
  return c;
}

void DlwConfig::validate() const {
  if (width < 5 || width % 2 == 0) throw InvalidConfig("dlw width must be odd and >= 5");
  if (height < 1) throw InvalidConfig("dlw height must be >= 1");
  if (income_interval < 1) throw InvalidConfig("dlw income_interval must be >= 1");
  if (start_health < 1) throw InvalidConfig("dlw start_health must be >= 1");
  if (start_gold < 0 || start_income < 0) throw InvalidConfig("dlw start gold/income must be >= 0");
  if (bounty_percent < 0) throw InvalidConfig("dlw bounty_percent must be >= 0");
  if (max_ticks < 1) throw InvalidConfig("dlw max_ticks must be >= 1");
  if (units.empty() || towers.empty()) throw InvalidConfig("dlw catalog needs at least one unit and one tower");
  if (gold_cap < 1 || lumber_cap < 1 || income_cap < 1) throw InvalidConfig("dlw normalisation caps must be >= 1");
  if (image_width < width || image_height < height) throw InvalidConfig("dlw image smaller than the board");
  for (const auto& u : units) {
    if (u.gold_cost < 0 || u.hp < 1 || u.speed_milli < 1 || u.income_bonus_percent < 0 || u.leak_damage < 1) {
      throw InvalidConfig("dlw unit '" + u.name + "' has invalid stats");
    }
  }
  for (const auto& t : towers) {
    if (t.gold_cost < 0 || t.damage < 1 || t.range < 0 || t.cooldown < 1) {
      throw InvalidConfig("dlw tower '" + t.name + "' has invalid stats");
    }
  }
}

int DlwState::unit_column(const Unit& u) const noexcept {
  return to_absolute_x(u.owner, u.progress_milli / 1000);
}

DlwState new_game(DlwConfig config, std::uint64_t seed) {
  config.validate();
  DlwState s;
  s.config = std::move(config);
  s.rng = Rng(seed);
  for (auto& p : s.players) {
    p.health = s.config.start_health;
    p.gold = s.config.start_gold;
    p.gold_initial = s.config.start_gold;
    p.income = s.config.start_income;
    p.cursor = {(s.config.build_min_col() + s.config.build_max_col()) / 2, s.config.height / 2};
  }
  return s;
}

ActionCodec::ActionCodec(const DlwConfig& config)
    : config_(config),
      units_(static_cast<int>(config.units.size())),
      towers_(static_cast<int>(config.towers.size())) {
  const int min_col = config.build_min_col(), max_col = config.build_max_col();
  labels_.emplace_back("NoOp");
  for (const auto& u : config.units) labels_.push_back("Buy" + u.name);
  for (const auto& t : config.towers) labels_.push_back("Build" + t.name);
  for (const char* d : kDirectionNames) labels_.push_back(std::string("Cursor") + d);
  if (config.direct_build) {
    for (const auto& t : config.towers)
      for (int y = 0; y < config.height; ++y)
        for (int x = min_col; x <= max_col; ++x)
          labels_.push_back("Build" + t.name + "@" + std::to_string(x) + "," + std::to_string(y));
  }
}

std::size_t action_count(const DlwConfig& c) noexcept {
  std::size_t n = 1 + c.units.size() + c.towers.size() + 4;
  if (c.direct_build) {
    n += c.towers.size() * static_cast<std::size_t>((c.build_max_col() - c.build_min_col() + 1) * c.height);
  }
  return n;
}

DlwAction decode_action(const DlwConfig& c, ActionIndex index) {
  if (index >= action_count(c)) throw InvalidAction("dlw action " + std::to_string(index) + " out of range");
  const int units = static_cast<int>(c.units.size()), towers = static_cast<int>(c.towers.size());
  int i = static_cast<int>(index);
  if (i == 0) return {};
  i -= 1;
  if (i < units) return {ActionType::BuySendUnit, i, Direction::Up, {}};
  i -= units;
  if (i < towers) return {ActionType::BuildTower, i, Direction::Up, {}};
  i -= towers;
  if (i < 4) return {ActionType::MoveCursor, 0, static_cast<Direction>(i), {}};
  i -= 4;
  const int cols = c.build_max_col() - c.build_min_col() + 1;
  const int per_tower = cols * c.height;
  const int cell = i % per_tower;
  return {ActionType::BuildAt, i / per_tower, Direction::Up, {c.build_min_col() + cell % cols, cell / cols}};
}

const Unit& buy_unit(DlwState& state, int player, int unit_kind) {
  check_player(player);
  const auto& kinds = state.config.units;
  if (unit_kind < 0 || unit_kind >= static_cast<int>(kinds.size())) throw InvalidAction("unknown unit kind");
  const UnitKind& kind = kinds[static_cast<std::size_t>(unit_kind)];
  PlayerState& p = state.players[static_cast<std::size_t>(player)];
  if (p.gold < kind.gold_cost) {
    throw InsufficientGold("need " + std::to_string(kind.gold_cost) + " gold, have " + std::to_string(p.gold));
  }
  p.gold -= kind.gold_cost;
  p.gold_purchases += kind.gold_cost;
  p.income += round_percent(kind.gold_cost, kind.income_bonus_percent);
  ++p.units_bought;
  Unit u;
  u.id = state.next_unit_id++;
  u.kind = unit_kind;
  u.owner = player;
  u.row = static_cast<int>(state.rng.uniform(static_cast<std::uint64_t>(state.config.height)));
  u.progress_milli = 0;
  u.hp = kind.hp;
  state.units.push_back(u);
  return state.units.back();
}

const Tower& build_tower(DlwState& state, int player, int tower_kind, Coord cell) {
  check_player(player);
  const auto& kinds = state.config.towers;
  if (tower_kind < 0 || tower_kind >= static_cast<int>(kinds.size())) throw InvalidAction("unknown tower kind");
  const DlwConfig& c = state.config;
  if (cell.x < c.build_min_col() || cell.x > c.build_max_col() || cell.y < 0 || cell.y >= c.height) {
    throw InvalidAction("tower cell outside the build zone");
  }
  const Coord abs{state.to_absolute_x(player, cell.x), cell.y};
  for (const Tower& t : state.towers) {
    if (t.owner == player && t.pos == abs) throw InvalidAction("cell already has a tower");
  }
  const TowerKind& kind = kinds[static_cast<std::size_t>(tower_kind)];
  PlayerState& p = state.players[static_cast<std::size_t>(player)];
  if (p.gold < kind.gold_cost) {
    throw InsufficientGold("need " + std::to_string(kind.gold_cost) + " gold, have " + std::to_string(p.gold));
  }
  p.gold -= kind.gold_cost;
  p.gold_purchases += kind.gold_cost;
  ++p.towers_built;
  state.towers.push_back({tower_kind, player, abs, 0});
  return state.towers.back();
}

int kill_bounty(const DlwConfig& config, const UnitKind& kind) noexcept {
  return round_percent(kind.gold_cost, config.bounty_percent);
}

namespace {

void apply_purchase(DlwState& s, int player, const DlwAction& a) {
  if (a.type != ActionType::BuySendUnit) return;
  try {
    buy_unit(s, player, a.kind);
  } catch (const InsufficientGold&) {
    ++s.players[static_cast<std::size_t>(player)].invalid_actions;
  }
}

void apply_construction(DlwState& s, int player, const DlwAction& a) {
  PlayerState& p = s.players[static_cast<std::size_t>(player)];
  switch (a.type) {
    case ActionType::BuildTower:
    case ActionType::BuildAt:
      try {
        build_tower(s, player, a.kind, a.type == ActionType::BuildAt ? a.at : p.cursor);
      } catch (const Error&) {
        ++p.invalid_actions;
      }
      break;
    case ActionType::MoveCursor: {
      const DlwConfig& c = s.config;
      switch (a.direction) {
        case Direction::Up: p.cursor.y = std::max(0, p.cursor.y - 1); break;
        case Direction::Down: p.cursor.y = std::min(c.height - 1, p.cursor.y + 1); break;
        case Direction::Left: p.cursor.x = std::max(c.build_min_col(), p.cursor.x - 1); break;
        case Direction::Right: p.cursor.x = std::min(c.build_max_col(), p.cursor.x + 1); break;
      }
      break;
    }
    default: break;
  }
}

void fire_towers(DlwState& s) {
  for (Tower& t : s.towers) {
    if (t.cooldown_remaining > 0) --t.cooldown_remaining;
    if (t.cooldown_remaining > 0) continue;
    Unit* target = nullptr;
    int best_dist = 0;
    for (Unit& u : s.units) {
      if (u.owner == t.owner || u.hp <= 0) continue;
      const int dist = std::max(std::abs(s.unit_column(u) - t.pos.x), std::abs(u.row - t.pos.y));
      if (dist > s.config.towers[static_cast<std::size_t>(t.kind)].range) continue;
      // nearest, then furthest along, then oldest
      if (!target || dist < best_dist ||
          (dist == best_dist && (u.progress_milli > target->progress_milli ||
                                 (u.progress_milli == target->progress_milli && u.id < target->id)))) {
        target = &u;
        best_dist = dist;
      }
    }
    if (!target) continue;
    const TowerKind& kind = s.config.towers[static_cast<std::size_t>(t.kind)];
    t.cooldown_remaining = kind.cooldown;
    target->hp -= kind.damage;
    if (target->hp <= 0) {
      PlayerState& killer = s.players[static_cast<std::size_t>(t.owner)];
      const int bounty = kill_bounty(s.config, s.config.units[static_cast<std::size_t>(target->kind)]);
      killer.gold += bounty;
      killer.gold_bounties += bounty;
      ++killer.kills;
    }
  }
  std::erase_if(s.units, [](const Unit& u) { return u.hp <= 0; });
}

void resolve_leaks(DlwState& s) {
  const int goal = (s.config.width - 1) * 1000;
  std::erase_if(s.units, [&](const Unit& u) {
    if (u.progress_milli < goal) return false;
    PlayerState& victim = s.players[static_cast<std::size_t>(1 - u.owner)];
    victim.health = std::max(0, victim.health - s.config.units[static_cast<std::size_t>(u.kind)].leak_damage);
    ++s.players[static_cast<std::size_t>(u.owner)].leaks;
    return true;
  });
}

}  // namespace

LockstepResult dlw_step(DlwState& s, ActionIndex action_p0, ActionIndex action_p1) {
  if (s.terminal) throw SteppedTerminalEnv("DeepLineWars: step called on a finished match");
  const std::array<DlwAction, 2> actions{decode_action(s.config, action_p0), decode_action(s.config, action_p1)};

  for (int p = 0; p < 2; ++p) apply_purchase(s, p, actions[static_cast<std::size_t>(p)]);
  for (int p = 0; p < 2; ++p) apply_construction(s, p, actions[static_cast<std::size_t>(p)]);

  const int goal = (s.config.width - 1) * 1000;
  for (Unit& u : s.units) {
    u.progress_milli = std::min(goal, u.progress_milli + s.config.units[static_cast<std::size_t>(u.kind)].speed_milli);
  }
  fire_towers(s);
  resolve_leaks(s);

  ++s.tick;
  if (s.tick % static_cast<std::size_t>(s.config.income_interval) == 0) {
    for (auto& p : s.players) {
      p.gold += p.income;
      p.gold_passive += p.income;
    }
  }
  assert(s.players[0].ledger_holds() && s.players[1].ledger_holds());

  LockstepResult r;
  const bool dead0 = s.players[0].health == 0, dead1 = s.players[1].health == 0;
  if (dead0 || dead1 || s.tick >= s.config.max_ticks) {
    s.terminal = true;
    if (dead0 != dead1) s.winner = dead1 ? 0 : 1;
  }
  r.terminal = s.terminal;
  r.winner = s.winner;
  for (int p = 0; p < 2; ++p) {
    auto& o = r.outcomes[static_cast<std::size_t>(p)];
    o.terminal = s.terminal;
    if (s.winner >= 0) o.reward = s.winner == p ? 1.0 : -1.0;
  }
  return r;
}

ObservationSpec observation_spec_for(const DlwConfig& c) {
  const auto w = static_cast<std::size_t>(c.width), h = static_cast<std::size_t>(c.height);
  switch (c.observation) {
    case ObservationMode::RawImage:
      return {c.observation, static_cast<std::size_t>(c.image_width), static_cast<std::size_t>(c.image_height), 3};
    case ObservationMode::Matrix: return {c.observation, w, h, 5};
    case ObservationMode::HeatmapRGB: return {c.observation, w, h, 3};
    case ObservationMode::HeatmapGray: return {c.observation, w, h, 1};
  }
  throw UnsupportedMode("unknown observation mode");
}

namespace {

enum Plane { kOwnTowers = 0, kOwnUnits = 1, kEnemyTowers = 2, kEnemyUnits = 3, kCursor = 4 };

/// Five presence planes in the viewer's perspective.
Tensor role_planes(const DlwState& s, int perspective) {
  const int w = s.config.width, h = s.config.height;
  Tensor planes({static_cast<std::size_t>(h), static_cast<std::size_t>(w), 5});
  auto view_x = [&](int abs_x) { return s.to_absolute_x(perspective, abs_x); };  // mirror is an involution
  for (const Tower& t : s.towers) {
    planes.at(t.pos.y, view_x(t.pos.x), t.owner == perspective ? kOwnTowers : kEnemyTowers) = 1.0;
  }
  for (const Unit& u : s.units) {
    planes.at(u.row, view_x(s.unit_column(u)), u.owner == perspective ? kOwnUnits : kEnemyUnits) = 1.0;
  }
  const Coord cur = s.players[static_cast<std::size_t>(perspective)].cursor;
  planes.at(cur.y, cur.x, kCursor) = 1.0;
  return planes;
}

std::array<double, 3> heat_rgb(const Tensor& planes, std::size_t y, std::size_t x) {
  const double cursor = planes.at(y, x, kCursor);
  return {planes.at(y, x, kOwnTowers), std::max(planes.at(y, x, kEnemyUnits), cursor), cursor};
}

std::array<double, 3> image_rgb(const Tensor& planes, std::size_t y, std::size_t x) {
  // heatmap palette plus blue friendly units and magenta enemy towers
  auto rgb = heat_rgb(planes, y, x);
  rgb[0] = std::max(rgb[0], planes.at(y, x, kEnemyTowers));
  rgb[2] = std::max({rgb[2], planes.at(y, x, kOwnUnits), planes.at(y, x, kEnemyTowers)});
  return rgb;
}

}  // namespace

Tensor dlw_observe(const DlwState& s, const ObservationSpec& spec, int perspective) {
  check_player(perspective);
  const Tensor planes = role_planes(s, perspective);
  if (spec.mode == ObservationMode::Matrix) return planes;

  Tensor out(spec.shape());
  const auto h = static_cast<std::size_t>(s.config.height), w = static_cast<std::size_t>(s.config.width);
  if (spec.mode == ObservationMode::RawImage) {
    for (std::size_t py = 0; py < spec.height; ++py) {
      const std::size_t cy = py * h / spec.height;
      for (std::size_t px = 0; px < spec.width; ++px) {
        const auto rgb = image_rgb(planes, cy, px * w / spec.width);
        for (std::size_t c = 0; c < 3; ++c) out.at(py, px, c) = rgb[c];
      }
    }
    return out;
  }
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const auto rgb = heat_rgb(planes, y, x);
      if (spec.mode == ObservationMode::HeatmapRGB) {
        for (std::size_t c = 0; c < 3; ++c) out.at(y, x, c) = rgb[c];
      } else {
        out.at(y, x, 0) = std::min(1.0, 0.299 * rgb[0] + 0.587 * rgb[1] + 0.114 * rgb[2]);
      }
    }
  }
  return out;
}

std::array<double, 8> dlw_aux_vector(const DlwState& s, int perspective) {
  check_player(perspective);
  auto norm = [](int v, int cap) { return std::clamp(static_cast<double>(v) / cap, 0.0, 1.0); };
  std::array<double, 8> out{};
  for (int side = 0; side < 2; ++side) {
    const PlayerState& p = s.players[static_cast<std::size_t>(side == 0 ? perspective : 1 - perspective)];
    const std::size_t o = static_cast<std::size_t>(side) * 4;
    out[o + 0] = norm(p.health, s.config.start_health);
    out[o + 1] = norm(p.gold, s.config.gold_cap);
    out[o + 2] = norm(p.lumber, s.config.lumber_cap);
    out[o + 3] = norm(p.income, s.config.income_cap);
  }
  return out;
}

Policy random_policy(const DlwConfig& config, std::uint64_t seed) {
  const std::size_t count = action_count(config);
  return [count, rng = Rng(seed)](const DlwState&, int) mutable {
    return static_cast<ActionIndex>(rng.uniform(count));
  };
}

Policy idle_policy() {
  return [](const DlwState&, int) { return ActionIndex{0}; };
}

Policy always_send_policy(const DlwConfig& config, int unit_kind) {
  const ActionIndex a = ActionCodec(config).encode_buy(unit_kind);
  return [a](const DlwState&, int) { return a; };
}

MatchStats play_match(const DlwConfig& config, std::uint64_t seed, const Policy& p0, const Policy& p1) {
  DlwState s = new_game(config, seed);
  while (!s.terminal) dlw_step(s, p0(s, 0), p1(s, 1));
  MatchStats m;
  m.winner = s.winner;
  m.ticks = s.tick;
  for (std::size_t p = 0; p < 2; ++p) {
    m.units_bought[p] = s.players[p].units_bought;
    m.leaks[p] = s.players[p].leaks;
    m.final_health[p] = s.players[p].health;
  }
  return m;
}

void append_match_csv(const std::string& path, std::uint64_t seed, const MatchStats& m) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw InvalidArgument("cannot open " + path + " for append");
  if (fresh) out << "seed,winner,ticks,units_bought_p0,units_bought_p1,leaks_p0,leaks_p1,health_p0,health_p1\n";
  out << seed << ',' << m.winner << ',' << m.ticks << ',' << m.units_bought[0] << ',' << m.units_bought[1] << ','
      << m.leaks[0] << ',' << m.leaks[1] << ',' << m.final_health[0] << ',' << m.final_health[1] << '\n';
}

namespace {

Policy make_opponent(const DlwConfig& c, std::uint64_t seed) {
  switch (c.opponent) {
    case OpponentPolicy::Random: return random_policy(c, seed);
    case OpponentPolicy::Idle: return idle_policy();
    case OpponentPolicy::AlwaysSend: return always_send_policy(c);
  }
  return idle_policy();
}

}  // namespace

DeepLineWarsEnv::DeepLineWarsEnv(DlwConfig config, std::uint64_t seed)
    : config_(std::move(config)),
      seed_(seed),
      codec_((config_.validate(), config_)),
      actions_(codec_.labels()),
      spec_(observation_spec_for(config_)) {
  reset();
}

void DeepLineWarsEnv::on_reset(std::optional<std::uint64_t> seed) {
  if (seed) {
    seed_ = *seed;
    episode_ = 0;
  } else if (started_) {
    ++episode_;
  }
  started_ = true;
  const std::uint64_t match_seed = mix_seed(seed_, episode_);
  state_ = new_game(config_, match_seed);
  opponent_ = make_opponent(config_, mix_seed(match_seed, 1));
}

Outcome DeepLineWarsEnv::on_step(ActionIndex action, InfoMap* info) {
  const ActionIndex opp = opponent_(state_, 1);
  const int invalid_before = state_.players[0].invalid_actions;
  const LockstepResult r = dlw_step(state_, action, opp);
  if (info) {
    info->emplace("tick", static_cast<double>(state_.tick));
    info->emplace("health", state_.players[0].health);
    info->emplace("enemy_health", state_.players[1].health);
    info->emplace("gold", state_.players[0].gold);
    info->emplace("invalid_action", state_.players[0].invalid_actions - invalid_before);
    if (r.terminal) info->emplace("winner", r.winner);
  }
  return r.outcomes[0];
}

Tensor DeepLineWarsEnv::observe() const { return dlw_observe(state_, spec_, 0); }

std::vector<double> DeepLineWarsEnv::auxiliary() const {
  const auto aux = dlw_aux_vector(state_, 0);
  return {aux.begin(), aux.end()};
}

std::string DeepLineWarsEnv::render_text() const {
  const int w = config_.width, h = config_.height;
  std::vector<std::string> rows(static_cast<std::size_t>(h), std::string(static_cast<std::size_t>(w), '.'));
  for (auto& row : rows) row.front() = row.back() = '|';
  for (const Tower& t : state_.towers) rows[t.pos.y][t.pos.x] = t.owner == 0 ? 'T' : 't';
  for (const Unit& u : state_.units) rows[u.row][state_.unit_column(u)] = u.owner == 0 ? 'U' : 'u';
  std::string out;
  for (const auto& row : rows) out += row + '\n';
  out += "p0 hp=" + std::to_string(state_.players[0].health) + " gold=" + std::to_string(state_.players[0].gold) +
         " | p1 hp=" + std::to_string(state_.players[1].health) + " gold=" + std::to_string(state_.players[1].gold) +
         " | tick=" + std::to_string(state_.tick) + '\n';
  return out;
}

}  // namespace rlsuite::dlw
