#include "rlsuite/rts/deep_rts_lite.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rlsuite/core/errors.hpp"
#include "rlsuite/core/rng.hpp"

namespace rlsuite::rts {
namespace {

constexpr std::array<const char*, kRtsActionCount> kActionLabels{
    "NoOp", "SelectNextUnit", "MoveUp", "MoveDown", "MoveLeft", "MoveRight", "HarvestNearest", "ReturnToDepot",
    "BuildTownHall"};

bool is_resource(Tile t) noexcept { return t == Tile::Forest || t == Tile::GoldMine || t == Tile::Oil; }

Resource resource_of(Tile t) noexcept {
  return t == Tile::Forest ? Resource::Lumber : t == Tile::GoldMine ? Resource::Gold : Resource::Oil;
}

int manhattan(Pos a, Pos b) noexcept { return std::abs(a.x - b.x) + std::abs(a.y - b.y); }

int initial_stock_for(Tile t, const RtsConfig& c) noexcept {
  switch (t) {
    case Tile::Forest: return c.forest_stock;
    case Tile::GoldMine: return c.gold_stock;
    case Tile::Oil: return c.oil_stock;
    default: return 0;
  }
}

bool has_building(const RtsState& s, Pos p) noexcept {
  return std::any_of(s.entities.begin(), s.entities.end(),
                     [&](const RtsEntity& e) { return e.kind == EntityKind::TownHall && e.pos == p; });
}

bool passable(const RtsState& s, Pos p) noexcept {
  if (!s.map.in_bounds(p)) return false;
  const Tile t = s.map.tile(p);
  return (t == Tile::Grass || t == Tile::Spawn) && !has_building(s, p);
}

/// One greedy 4-neighbour step toward `target`, sliding along the other axis
/// when the preferred one is blocked. Stops at distance `stop_at`.
void step_toward(const RtsState& s, RtsEntity& e, Pos target, int stop_at) {
  if (manhattan(e.pos, target) <= stop_at) return;
  const int dx = target.x - e.pos.x, dy = target.y - e.pos.y;
  const Pos along_x{e.pos.x + (dx > 0) - (dx < 0), e.pos.y};
  const Pos along_y{e.pos.x, e.pos.y + (dy > 0) - (dy < 0)};
  const bool prefer_x = std::abs(dx) >= std::abs(dy);
  const std::array<Pos, 2> order = prefer_x ? std::array<Pos, 2>{along_x, along_y} : std::array<Pos, 2>{along_y, along_x};
  for (const Pos p : order) {
    if (p == e.pos) continue;
    if (passable(s, p)) {
      e.pos = p;
      return;
    }
  }
}

const RtsEntity* nearest_townhall(const RtsState& s, int owner, Pos from) noexcept {
  const RtsEntity* best = nullptr;
  for (const auto& e : s.entities) {
    if (e.kind != EntityKind::TownHall || e.owner != owner) continue;
    if (!best || manhattan(e.pos, from) < manhattan(best->pos, from)) best = &e;
  }
  return best;
}

std::optional<Pos> nearest_resource(const RtsState& s, Pos from) noexcept {
  std::optional<Pos> best;
  for (int y = 0; y < s.map.height; ++y) {
    for (int x = 0; x < s.map.width; ++x) {
      const Pos p{x, y};
      if (!is_resource(s.map.tile(p)) || s.map.stock[s.map.index(p)] <= 0) continue;
      if (!best || manhattan(p, from) < manhattan(*best, from)) best = p;
    }
  }
  return best;
}

RtsEntity* find_entity(RtsState& s, std::uint32_t id) noexcept {
  for (auto& e : s.entities)
    if (e.id == id) return &e;
  return nullptr;
}

void clamp_resources(RtsResources& r) noexcept {
  r.lumber = std::clamp(r.lumber, 0LL, kMaxStockpile);
  r.gold = std::clamp(r.gold, 0LL, kMaxStockpile);
  r.oil = std::clamp(r.oil, 0LL, kMaxStockpile);
  r.food = std::clamp(r.food, 0, kMaxPopulation);
  r.units = std::clamp(r.units, 0, std::min(r.food, kMaxPopulation));
}

std::optional<Pos> free_neighbour(const RtsState& s, Pos p, int owner) {
  const int sign = owner == 0 ? 1 : -1;
  const std::array<Pos, 4> order{{{p.x + sign, p.y}, {p.x, p.y + sign}, {p.x - sign, p.y}, {p.x, p.y - sign}}};
  for (const Pos n : order)
    if (passable(s, n)) return n;
  return std::nullopt;
}

RtsEntity& spawn(RtsState& s, EntityKind kind, int owner, Pos pos) {
  RtsEntity e;
  e.id = s.next_id++;
  e.kind = kind;
  e.owner = owner;
  e.pos = pos;
  s.entities.push_back(e);
  return s.entities.back();
}

/// Returns false when the action is not applicable and resolves to NoOp.
bool apply_action(RtsState& s, int player, RtsAction action) {
  RtsPlayer& p = s.players[static_cast<std::size_t>(player)];
  ++p.action_histogram[static_cast<std::size_t>(action)];
  if (action == RtsAction::NoOp) return true;

  if (action == RtsAction::SelectNextUnit) {
    std::vector<std::uint32_t> workers;
    for (const auto& e : s.entities)
      if (e.owner == player && e.kind == EntityKind::Worker) workers.push_back(e.id);
    if (workers.empty()) return false;
    auto it = std::upper_bound(workers.begin(), workers.end(), p.selected);
    p.selected = (!p.has_selection || it == workers.end()) ? workers.front() : *it;
    p.has_selection = true;
    return true;
  }

  RtsEntity* w = p.has_selection ? find_entity(s, p.selected) : nullptr;
  if (!w || w->state == EntityState::Building) return false;

  switch (action) {
    case RtsAction::MoveUp:
    case RtsAction::MoveDown:
    case RtsAction::MoveLeft:
    case RtsAction::MoveRight: {
      static constexpr std::array<Pos, 4> d{{{0, -1}, {0, 1}, {-1, 0}, {1, 0}}};
      const Pos delta = d[static_cast<std::size_t>(action) - static_cast<std::size_t>(RtsAction::MoveUp)];
      const Pos dest{w->pos.x + delta.x, w->pos.y + delta.y};
      if (!passable(s, dest)) return false;
      w->state = EntityState::MovingTo;
      w->target = dest;
      w->has_harvest_tile = false;
      return true;
    }
    case RtsAction::HarvestNearest: {
      const auto tile = nearest_resource(s, w->pos);
      if (!tile) return false;
      w->state = EntityState::Harvesting;
      w->harvest_tile = *tile;
      w->has_harvest_tile = true;
      return true;
    }
    case RtsAction::ReturnToDepot:
      if (w->carry == 0 || !nearest_townhall(s, player, w->pos)) return false;
      w->state = EntityState::Depositing;
      return true;
    case RtsAction::BuildTownHall: {
      const Tile t = s.map.tile(w->pos);
      if ((t != Tile::Grass && t != Tile::Spawn) || has_building(s, w->pos)) return false;
      if (p.resources.gold < s.config.townhall_gold_cost || p.resources.lumber < s.config.townhall_lumber_cost) {
        return false;
      }
      p.resources.gold -= s.config.townhall_gold_cost;
      p.resources.lumber -= s.config.townhall_lumber_cost;
      w->state = EntityState::Building;
      w->build_ticks_left = s.config.build_time;
      w->has_harvest_tile = false;
      return true;
    }
    default: return false;
  }
}

void deposit(RtsState& s, RtsEntity& w, std::array<long long, 2>& gained) {
  RtsPlayer& p = s.players[static_cast<std::size_t>(w.owner)];
  p.resources[w.carry_kind] += w.carry;
  p.deposited[static_cast<std::size_t>(w.carry_kind)] += w.carry;
  p.score.resource_count += w.carry;
  gained[static_cast<std::size_t>(w.owner)] += w.carry;
  w.carry = 0;
  clamp_resources(p.resources);
}

void advance_worker(RtsState& s, std::size_t idx, std::array<long long, 2>& gained) {
  RtsEntity& w = s.entities[idx];
  switch (w.state) {
    case EntityState::Idle: break;
    case EntityState::MovingTo:
      step_toward(s, w, w.target, 0);
      if (w.pos == w.target) w.state = EntityState::Idle;
      break;
    case EntityState::Harvesting: {
      const std::size_t ti = s.map.index(w.harvest_tile);
      if (!is_resource(s.map.tiles[ti]) || s.map.stock[ti] <= 0) {
        w.has_harvest_tile = false;
        w.state = w.carry > 0 ? EntityState::Depositing : EntityState::Idle;
        break;
      }
      const Resource kind = resource_of(s.map.tiles[ti]);
      if (w.carry > 0 && w.carry_kind != kind) {
        w.state = EntityState::Depositing;
        break;
      }
      if (manhattan(w.pos, w.harvest_tile) > 1) {
        step_toward(s, w, w.harvest_tile, 1);
        break;
      }
      const int amount = std::min({s.config.harvest_rate, s.config.carry_cap - w.carry, s.map.stock[ti]});
      w.carry_kind = kind;
      w.carry += amount;
      s.map.stock[ti] -= amount;
      if (s.map.stock[ti] == 0) s.map.tiles[ti] = Tile::Grass;
      if (w.carry >= s.config.carry_cap || s.map.stock[ti] == 0) w.state = EntityState::Depositing;
      break;
    }
    case EntityState::Depositing: {
      const RtsEntity* hall = nearest_townhall(s, w.owner, w.pos);
      if (!hall) {
        w.state = EntityState::Idle;
        break;
      }
      if (manhattan(w.pos, hall->pos) > 1) {
        step_toward(s, w, hall->pos, 1);
        break;
      }
      deposit(s, w, gained);
      const bool resume = w.has_harvest_tile && s.map.stock[s.map.index(w.harvest_tile)] > 0;
      w.state = resume ? EntityState::Harvesting : EntityState::Idle;
      if (!resume) w.has_harvest_tile = false;
      break;
    }
    case EntityState::Building:
      if (--w.build_ticks_left > 0) break;
      {
        const Pos site = w.pos;
        const int owner = w.owner;
        w.state = EntityState::Idle;
        RtsPlayer& p = s.players[static_cast<std::size_t>(owner)];
        p.resources.food += s.config.food_per_townhall;
        clamp_resources(p.resources);
        spawn(s, EntityKind::TownHall, owner, site);  // may reallocate; `w` is dead past here
        RtsEntity& worker = s.entities[idx];
        if (const auto out = free_neighbour(s, site, owner)) worker.pos = *out;
      }
      break;
  }
}

}  // namespace

bool RtsResources::within_limits() const noexcept {
  auto in = [](long long v, long long hi) { return v >= 0 && v <= hi; };
  return in(lumber, kMaxStockpile) && in(gold, kMaxStockpile) && in(oil, kMaxStockpile) &&
         in(food, kMaxPopulation) && in(units, kMaxPopulation) && units <= food;
}

void RtsConfig::validate() const {
  if (width < 4 || height < 4) throw InvalidConfig("rts map must be at least 4x4");
  if (harvest_rate < 1 || carry_cap < 1) throw InvalidConfig("rts harvest_rate and carry_cap must be >= 1");
  if (tick_limit < 1) throw InvalidConfig("rts tick_limit must be >= 1");
  if (build_time < 1) throw InvalidConfig("rts build_time must be >= 1");
  if (townhall_gold_cost < 0 || townhall_lumber_cost < 0 || food_per_townhall < 1) {
    throw InvalidConfig("rts town hall costs must be >= 0 and food >= 1");
  }
  if (forest_stock < 1 || gold_stock < 1 || oil_stock < 1) throw InvalidConfig("rts stocks must be >= 1");
}

RtsMap parse_rts_map(std::string_view text, const RtsConfig& config) {
  RtsMap m;
  std::optional<Pos> spawn0, spawn1;
  std::istringstream in{std::string(text)};
  std::string line;
  int y = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (m.width == 0) m.width = static_cast<int>(line.size());
    if (static_cast<int>(line.size()) != m.width) throw ConfigError("ragged map row", y + 1);
    for (int x = 0; x < m.width; ++x) {
      Tile t{};
      switch (line[static_cast<std::size_t>(x)]) {
        case '.': t = Tile::Grass; break;
        case 'F': t = Tile::Forest; break;
        case 'G': t = Tile::GoldMine; break;
        case 'O': t = Tile::Oil; break;
        case '1':
        case '2': {
          auto& slot = line[static_cast<std::size_t>(x)] == '1' ? spawn0 : spawn1;
          if (slot) throw ConfigError("duplicate spawn", y + 1);
          slot = Pos{x, y};
          t = Tile::Spawn;
          break;
        }
        default: throw ConfigError(std::string("unexpected map character '") + line[x] + "'", y + 1);
      }
      m.tiles.push_back(t);
      m.stock.push_back(initial_stock_for(t, config));
    }
    ++y;
  }
  m.height = y;
  if (!spawn0 || !spawn1) throw ConfigError("map needs spawns '1' and '2'", 0);
  m.spawns = {*spawn0, *spawn1};
  return m;
}

std::string to_text(const RtsMap& m) {
  std::string out;
  for (int y = 0; y < m.height; ++y) {
    for (int x = 0; x < m.width; ++x) {
      const Pos p{x, y};
      char c = '.';
      switch (m.tile(p)) {
        case Tile::Grass: c = '.'; break;
        case Tile::Forest: c = 'F'; break;
        case Tile::GoldMine: c = 'G'; break;
        case Tile::Oil: c = 'O'; break;
        case Tile::Spawn: c = p == m.spawns[0] ? '1' : '2'; break;
      }
      out += c;
    }
    out += '\n';
  }
  return out;
}

RtsMap generate_rts_map(const RtsConfig& config, std::uint64_t seed) {
  config.validate();
  Rng rng(seed);
  RtsMap m;
  m.width = config.width;
  m.height = config.height;
  const std::size_t n = static_cast<std::size_t>(m.width * m.height);
  m.tiles.assign(n, Tile::Grass);
  m.spawns = {Pos{1, 1}, Pos{m.width - 2, m.height - 2}};
  auto near_spawn = [&](Pos p) {
    for (const Pos s : m.spawns)
      if (std::abs(p.x - s.x) <= 1 && std::abs(p.y - s.y) <= 1) return true;
    return false;
  };
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    const Pos p{static_cast<int>(i) % m.width, static_cast<int>(i) / m.width};
    const auto roll = rng.uniform(100);
    Tile t = roll < 70 ? Tile::Grass : roll < 82 ? Tile::Forest : roll < 91 ? Tile::GoldMine : Tile::Oil;
    if (near_spawn(p)) t = Tile::Grass;
    m.tiles[i] = t;
    m.tiles[n - 1 - i] = t;
  }
  m.tiles[m.index(m.spawns[0])] = Tile::Spawn;
  m.tiles[m.index(m.spawns[1])] = Tile::Spawn;
  m.stock.resize(n);
  for (std::size_t i = 0; i < n; ++i) m.stock[i] = initial_stock_for(m.tiles[i], config);
  return m;
}

ActionSpace rts_action_set() { return ActionSpace(std::vector<std::string>(kActionLabels.begin(), kActionLabels.end())); }

long long RtsState::remaining_stock(Resource r) const noexcept {
  long long total = 0;
  for (std::size_t i = 0; i < map.tiles.size(); ++i)
    if (is_resource(map.tiles[i]) && resource_of(map.tiles[i]) == r) total += map.stock[i];
  return total;
}

long long RtsState::in_transit(Resource r) const noexcept {
  long long total = 0;
  for (const auto& e : entities)
    if (e.carry > 0 && e.carry_kind == r) total += e.carry;
  return total;
}

bool RtsState::ledger_holds() const noexcept {
  for (const Resource r : {Resource::Lumber, Resource::Gold, Resource::Oil}) {
    const auto k = static_cast<std::size_t>(r);
    const long long deposited = players[0].deposited[k] + players[1].deposited[k];
    if (deposited != initial_stock[k] - remaining_stock(r) - in_transit(r)) return false;
  }
  return true;
}

RtsState new_rts_game(const RtsConfig& config, RtsMap map) {
  config.validate();
  RtsState s;
  s.config = config;
  s.map = std::move(map);
  for (int p = 0; p < 2; ++p) {
    const Pos spawn_at = s.map.spawns[static_cast<std::size_t>(p)];
    spawn(s, EntityKind::TownHall, p, spawn_at);
    const auto worker_at = free_neighbour(s, spawn_at, p);
    if (!worker_at) throw InvalidConfig("no free tile next to spawn " + std::to_string(p + 1));
    const RtsEntity& w = spawn(s, EntityKind::Worker, p, *worker_at);
    RtsPlayer& pl = s.players[static_cast<std::size_t>(p)];
    pl.selected = w.id;
    pl.has_selection = true;
    pl.resources.food = config.food_per_townhall;
    pl.resources.units = 1;
    clamp_resources(pl.resources);
  }
  for (const Resource r : {Resource::Lumber, Resource::Gold, Resource::Oil}) {
    s.initial_stock[static_cast<std::size_t>(r)] = s.remaining_stock(r);
  }
  return s;
}

RtsTickResult rts_tick(RtsState& s, RtsAction action_p0, RtsAction action_p1) {
  if (s.terminal) throw SteppedTerminalEnv("DeepRtsLite: step called on a finished game");
  RtsTickResult r;
  const std::array<RtsAction, 2> actions{action_p0, action_p1};
  for (int p = 0; p < 2; ++p) {
    const auto a = actions[static_cast<std::size_t>(p)];
    if (static_cast<std::size_t>(a) >= kRtsActionCount) throw InvalidAction("rts action out of range");
    if (!apply_action(s, p, a)) {
      r.invalid[static_cast<std::size_t>(p)] = true;
      ++s.players[static_cast<std::size_t>(p)].invalid_actions;
    }
  }
  std::array<long long, 2> gained{};
  const std::size_t existing = s.entities.size();
  for (std::size_t i = 0; i < existing; ++i) {
    if (s.entities[i].kind == EntityKind::Worker) advance_worker(s, i, gained);
  }
  ++s.tick;
  if (s.tick >= s.config.tick_limit) {
    s.terminal = true;
    const long long a = s.players[0].score.resource_count, b = s.players[1].score.resource_count;
    s.winner = a == b ? -1 : (a > b ? 0 : 1);
  }
  r.terminal = s.terminal;
  r.winner = s.winner;
  for (std::size_t p = 0; p < 2; ++p) {
    r.outcomes[p].reward = static_cast<double>(gained[p]);
    r.outcomes[p].terminal = s.terminal;
  }
  return r;
}

ObservationSpec observation_spec_for(const RtsConfig& config) {
  if (config.observation != ObservationMode::Matrix) {
    throw UnsupportedMode("DeepRtsLite does not support " + std::string(to_string(config.observation)) +
                          " observations; use Matrix");
  }
  return {ObservationMode::Matrix, static_cast<std::size_t>(config.width), static_cast<std::size_t>(config.height), 9};
}

Tensor rts_observe(const RtsState& s, const ObservationSpec& spec, int perspective) {
  if (spec.mode != ObservationMode::Matrix) {
    throw UnsupportedMode("DeepRtsLite does not support " + std::string(to_string(spec.mode)) + " observations");
  }
  if (perspective != 0 && perspective != 1) throw InvalidArgument("perspective must be 0 or 1");
  Tensor t({static_cast<std::size_t>(s.map.height), static_cast<std::size_t>(s.map.width), 9});
  for (int y = 0; y < s.map.height; ++y) {
    for (int x = 0; x < s.map.width; ++x) {
      std::size_t plane = 0;
      switch (s.map.tile({x, y})) {
        case Tile::Grass:
        case Tile::Spawn: plane = 0; break;
        case Tile::Forest: plane = 1; break;
        case Tile::GoldMine: plane = 2; break;
        case Tile::Oil: plane = 3; break;
      }
      t.at(y, x, plane) = 1.0;
    }
  }
  const RtsPlayer& me = s.players[static_cast<std::size_t>(perspective)];
  for (const auto& e : s.entities) {
    const bool own = e.owner == perspective;
    const std::size_t plane = e.kind == EntityKind::Worker ? (own ? 4 : 5) : (own ? 6 : 7);
    t.at(e.pos.y, e.pos.x, plane) = 1.0;
    if (own && me.has_selection && e.id == me.selected) t.at(e.pos.y, e.pos.x, 8) = 1.0;
  }
  return t;
}

std::array<double, 10> rts_aux_vector(const RtsState& s, int perspective) {
  std::array<double, 10> out{};
  for (int side = 0; side < 2; ++side) {
    const RtsResources& r = s.players[static_cast<std::size_t>(side == 0 ? perspective : 1 - perspective)].resources;
    const std::size_t o = static_cast<std::size_t>(side) * 5;
    out[o + 0] = static_cast<double>(r.lumber) / kMaxStockpile;
    out[o + 1] = static_cast<double>(r.gold) / kMaxStockpile;
    out[o + 2] = static_cast<double>(r.oil) / kMaxStockpile;
    out[o + 3] = static_cast<double>(r.food) / kMaxPopulation;
    out[o + 4] = static_cast<double>(r.units) / kMaxPopulation;
  }
  return out;
}

double rts_score(const RtsPlayer& player) noexcept { return static_cast<double>(player.score.resource_count) / 100.0; }

void write_action_histogram_csv(const std::string& path, const RtsState& s) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << "player,action,label,count\n";
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t a = 0; a < kRtsActionCount; ++a)
      out << p << ',' << a << ',' << kActionLabels[a] << ',' << s.players[p].action_histogram[a] << '\n';
}

DeepRtsLiteEnv::DeepRtsLiteEnv(RtsConfig config, std::uint64_t seed)
    : config_(std::move(config)), seed_(seed), actions_(rts_action_set()), spec_(observation_spec_for(config_)) {
  config_.validate();
  reset();
}

void DeepRtsLiteEnv::on_reset(std::optional<std::uint64_t> seed) {
  if (seed) {
    seed_ = *seed;
    episode_ = 0;
  } else if (started_) {
    ++episode_;
  }
  started_ = true;
  RtsMap map = config_.map_text.empty() ? generate_rts_map(config_, seed_) : parse_rts_map(config_.map_text, config_);
  if (map.width != config_.width || map.height != config_.height) {
    throw InvalidConfig("rts map is " + std::to_string(map.width) + "x" + std::to_string(map.height) +
                        " but config says " + std::to_string(config_.width) + "x" + std::to_string(config_.height));
  }
  state_ = new_rts_game(config_, std::move(map));
  opponent_rng_ = Rng(mix_seed(seed_, episode_));
}

Outcome DeepRtsLiteEnv::on_step(ActionIndex action, InfoMap* info) {
  const auto opp = config_.random_opponent ? static_cast<RtsAction>(opponent_rng_.uniform(kRtsActionCount))
                                           : RtsAction::NoOp;
  const RtsTickResult r = rts_tick(state_, static_cast<RtsAction>(action), opp);
  if (r.terminal && !config_.histogram_csv.empty()) write_action_histogram_csv(config_.histogram_csv, state_);
  if (info) {
    info->emplace("invalid_action", r.invalid[0] ? 1.0 : 0.0);
    info->emplace("tick", static_cast<double>(state_.tick));
    info->emplace("resource_count", static_cast<double>(state_.players[0].score.resource_count));
    const auto aux = rts_aux_vector(state_, 0);
    for (std::size_t i = 0; i < aux.size(); ++i) info->emplace("aux_" + std::to_string(i), aux[i]);
    if (r.terminal) info->emplace("winner", r.winner);
  }
  return r.outcomes[0];
}

Tensor DeepRtsLiteEnv::observe() const { return rts_observe(state_, spec_, 0); }

std::vector<double> DeepRtsLiteEnv::auxiliary() const {
  const auto aux = rts_aux_vector(state_, 0);
  return {aux.begin(), aux.end()};
}

std::string DeepRtsLiteEnv::render_text() const {
  std::string text = to_text(state_.map);
  const auto row = static_cast<std::size_t>(state_.map.width + 1);
  for (const auto& e : state_.entities) {
    char c = e.kind == EntityKind::TownHall ? 'H' : 'W';
    if (e.owner == 1) c = static_cast<char>(c - 'A' + 'a');
    text[static_cast<std::size_t>(e.pos.y) * row + static_cast<std::size_t>(e.pos.x)] = c;
  }
  const auto& p0 = state_.players[0].resources;
  text += "p0 gold=" + std::to_string(p0.gold) + " lumber=" + std::to_string(p0.lumber) +
          " oil=" + std::to_string(p0.oil) + " tick=" + std::to_string(state_.tick) + '\n';
  return text;
}

}  // namespace rlsuite::rts
