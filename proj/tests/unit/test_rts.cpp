#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numeric>

#include "rlsuite/core/errors.hpp"
#include "rlsuite/core/rng.hpp"
#include "rlsuite/rts/deep_rts_lite.hpp"

using namespace rlsuite;
using namespace rlsuite::rts;

namespace {

// p0 town hall at (0,0), its worker at (1,0) touching both hall and mine.
constexpr const char* kMineMap =
    "1.G...\n"
    "......\n"
    "......\n"
    ".....2\n";

RtsConfig mine_config(int gold_stock) {
  RtsConfig c;
  c.width = 6;
  c.height = 4;
  c.gold_stock = gold_stock;
  c.map_text = kMineMap;
  return c;
}

RtsState mine_game(int gold_stock) {
  const auto c = mine_config(gold_stock);
  return new_rts_game(c, parse_rts_map(c.map_text, c));
}

const RtsEntity& worker_of(const RtsState& s, int owner) {
  for (const auto& e : s.entities)
    if (e.owner == owner && e.kind == EntityKind::Worker) return e;
  throw std::logic_error("no worker");
}

}  // namespace

TEST(RtsMap, ParseAndRoundTrip) {
  const auto c = mine_config(100);
  const auto m = parse_rts_map(kMineMap, c);
  EXPECT_EQ(m.width, 6);
  EXPECT_EQ(m.height, 4);
  EXPECT_EQ(m.spawns[0], (Pos{0, 0}));
  EXPECT_EQ(m.spawns[1], (Pos{5, 3}));
  EXPECT_EQ(m.tile({2, 0}), Tile::GoldMine);
  EXPECT_EQ(m.stock[m.index({2, 0})], 100);
  EXPECT_EQ(to_text(m), kMineMap);
}

TEST(RtsMap, ParseErrors) {
  const RtsConfig c;
  try {
    parse_rts_map("1..\n.X.\n..2\n", c);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_rts_map("1..\n...\n...\n", c), ConfigError);
  EXPECT_THROW(parse_rts_map("1..\n..\n..2\n", c), ConfigError);
}

TEST(RtsMap, GeneratedIsPointSymmetric) {
  RtsConfig c;
  c.width = 16;
  c.height = 12;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto m = generate_rts_map(c, seed);
    EXPECT_EQ(m, generate_rts_map(c, seed));
    const auto n = m.tiles.size();
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ(m.tiles[i], m.tiles[n - 1 - i]);
      ASSERT_EQ(m.stock[i], m.stock[n - 1 - i]);
    }
    EXPECT_EQ(m.spawns[0], (Pos{1, 1}));
    EXPECT_EQ(m.spawns[1], (Pos{14, 10}));
  }
}

TEST(RtsGame, StartingPosition) {
  const auto s = mine_game(100);
  ASSERT_EQ(s.entities.size(), 4u);
  EXPECT_EQ(worker_of(s, 0).pos, (Pos{1, 0}));
  EXPECT_EQ(worker_of(s, 1).pos, (Pos{4, 3}));
  for (const auto& p : s.players) {
    EXPECT_EQ(p.resources.food, 5);
    EXPECT_EQ(p.resources.units, 1);
    EXPECT_TRUE(p.has_selection);
  }
  EXPECT_TRUE(s.ledger_holds());
}

TEST(RtsGame, HarvestCycleDepositsCarryCap) {
  auto s = mine_game(100);
  // Tick 1 orders the harvest and mines 1; ticks 1..10 fill carry_cap = 10;
  // tick 11 deposits at the adjacent hall.
  auto r = rts_tick(s, RtsAction::HarvestNearest, RtsAction::NoOp);
  EXPECT_EQ(worker_of(s, 0).carry, 1);
  for (int t = 2; t <= 10; ++t) r = rts_tick(s, RtsAction::NoOp, RtsAction::NoOp);
  EXPECT_EQ(worker_of(s, 0).carry, 10);
  EXPECT_EQ(worker_of(s, 0).state, EntityState::Depositing);
  EXPECT_EQ(s.players[0].resources.gold, 0);
  r = rts_tick(s, RtsAction::NoOp, RtsAction::NoOp);
  EXPECT_EQ(s.tick, 11u);
  EXPECT_EQ(s.players[0].resources.gold, 10);
  EXPECT_EQ(r.outcomes[0].reward, 10.0);
  EXPECT_EQ(s.players[0].score.resource_count, 10);
  EXPECT_EQ(s.map.stock[s.map.index({2, 0})], 90);
  EXPECT_EQ(worker_of(s, 0).state, EntityState::Harvesting);
  EXPECT_TRUE(s.ledger_holds());
}

TEST(RtsGame, DepletedMineTurnsToGrass) {
  auto s = mine_game(5);
  rts_tick(s, RtsAction::HarvestNearest, RtsAction::NoOp);
  for (int t = 2; t <= 5; ++t) rts_tick(s, RtsAction::NoOp, RtsAction::NoOp);
  EXPECT_EQ(s.map.tile({2, 0}), Tile::Grass);
  EXPECT_EQ(s.map.stock[s.map.index({2, 0})], 0);
  rts_tick(s, RtsAction::NoOp, RtsAction::NoOp);
  EXPECT_EQ(s.players[0].resources.gold, 5);
  EXPECT_EQ(worker_of(s, 0).state, EntityState::Idle);
  // Nothing left to harvest on this map.
  const auto r = rts_tick(s, RtsAction::HarvestNearest, RtsAction::NoOp);
  EXPECT_TRUE(r.invalid[0]);
  EXPECT_TRUE(s.ledger_holds());
}

TEST(RtsGame, WorkerWalksToDistantResource) {
  auto c = mine_config(100);
  c.map_text =
      "1.....\n"
      "......\n"
      "......\n"
      "F....2\n";
  auto s = new_rts_game(c, parse_rts_map(c.map_text, c));
  rts_tick(s, RtsAction::HarvestNearest, RtsAction::NoOp);
  int ticks = 1;
  while (s.players[0].resources.lumber == 0 && ticks < 200) {
    rts_tick(s, RtsAction::NoOp, RtsAction::NoOp);
    ++ticks;
    ASSERT_TRUE(s.ledger_holds());
  }
  EXPECT_EQ(s.players[0].resources.lumber, 10);
}

TEST(RtsGame, InactionIsADraw) {
  auto s = mine_game(100);
  RtsTickResult r;
  while (!s.terminal) r = rts_tick(s, RtsAction::NoOp, RtsAction::NoOp);
  EXPECT_EQ(s.tick, s.config.tick_limit);
  EXPECT_EQ(r.winner, -1);
  EXPECT_EQ(s.players[0].resources, s.players[1].resources);
  EXPECT_THROW(rts_tick(s, RtsAction::NoOp, RtsAction::NoOp), SteppedTerminalEnv);
}

TEST(RtsGame, HigherResourceCountWins) {
  auto c = mine_config(100);
  c.tick_limit = 30;
  auto s = new_rts_game(c, parse_rts_map(c.map_text, c));
  RtsTickResult r = rts_tick(s, RtsAction::HarvestNearest, RtsAction::NoOp);
  while (!s.terminal) r = rts_tick(s, RtsAction::NoOp, RtsAction::NoOp);
  EXPECT_EQ(r.winner, 0);
  EXPECT_GT(rts_score(s.players[0]), 0.0);
}

TEST(RtsGame, InvalidActionsResolveToNoOp) {
  auto s = mine_game(100);
  const RtsState before = s;
  // Worker at (1,0): up is off-map, nothing carried to return, no gold to build.
  for (auto a : {RtsAction::MoveUp, RtsAction::ReturnToDepot, RtsAction::BuildTownHall}) {
    const auto r = rts_tick(s, a, RtsAction::NoOp);
    EXPECT_TRUE(r.invalid[0]);
  }
  EXPECT_EQ(s.players[0].invalid_actions, 3);
  EXPECT_EQ(s.entities, before.entities);
  EXPECT_EQ(s.players[0].resources, before.players[0].resources);
  EXPECT_THROW(rts_tick(s, static_cast<RtsAction>(kRtsActionCount), RtsAction::NoOp), InvalidAction);
}

TEST(RtsGame, MoveIntoBuildingIsInvalid) {
  auto s = mine_game(100);
  EXPECT_TRUE(rts_tick(s, RtsAction::MoveLeft, RtsAction::NoOp).invalid[0]);
  EXPECT_FALSE(rts_tick(s, RtsAction::MoveDown, RtsAction::NoOp).invalid[0]);
  EXPECT_EQ(worker_of(s, 0).pos, (Pos{1, 1}));
}

TEST(RtsGame, SelectNextUnitCycles) {
  auto s = mine_game(100);
  const auto first = s.players[0].selected;
  rts_tick(s, RtsAction::SelectNextUnit, RtsAction::NoOp);
  EXPECT_EQ(s.players[0].selected, first);  // only one worker
}

TEST(RtsGame, BuildTownHallAddsFood) {
  auto s = mine_game(100);
  s.players[0].resources.gold = 100;
  s.players[0].resources.lumber = 50;
  rts_tick(s, RtsAction::MoveDown, RtsAction::NoOp);
  const auto r = rts_tick(s, RtsAction::BuildTownHall, RtsAction::NoOp);
  ASSERT_FALSE(r.invalid[0]);
  EXPECT_EQ(s.players[0].resources.gold, 0);
  EXPECT_EQ(s.players[0].resources.lumber, 0);
  for (int t = 1; t < s.config.build_time; ++t) rts_tick(s, RtsAction::NoOp, RtsAction::NoOp);
  int halls = 0;
  for (const auto& e : s.entities) halls += e.owner == 0 && e.kind == EntityKind::TownHall;
  EXPECT_EQ(halls, 2);
  EXPECT_EQ(s.players[0].resources.food, 10);
  EXPECT_NE(worker_of(s, 0).pos, (Pos{1, 1}));
  EXPECT_EQ(worker_of(s, 0).state, EntityState::Idle);
}

TEST(RtsGame, DepositClampsAtStockpileLimit) {
  auto s = mine_game(100);
  s.players[0].resources.gold = kMaxStockpile - 3;
  rts_tick(s, RtsAction::HarvestNearest, RtsAction::NoOp);
  for (int t = 2; t <= 11; ++t) rts_tick(s, RtsAction::NoOp, RtsAction::NoOp);
  EXPECT_EQ(s.players[0].resources.gold, kMaxStockpile);
  EXPECT_EQ(s.players[0].deposited[static_cast<std::size_t>(Resource::Gold)], 10);
  EXPECT_TRUE(s.ledger_holds());
}

TEST(RtsGame, HistogramCountsEveryAction) {
  auto s = mine_game(100);
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    rts_tick(s, static_cast<RtsAction>(rng.uniform(kRtsActionCount)), RtsAction::NoOp);
  }
  const auto& h = s.players[0].action_histogram;
  EXPECT_EQ(std::accumulate(h.begin(), h.end(), 0LL), 200);
  EXPECT_EQ(s.players[1].action_histogram[0], 200);
}

TEST(RtsFuzz, ClampsAndLedgerHoldEveryTick) {
  RtsConfig c;
  c.tick_limit = 2000;
  c.random_opponent = true;
  DeepRtsLiteEnv env(c, 17);
  Rng rng(99);
  for (int i = 0; i < 20000; ++i) {
    const auto r = env.step(static_cast<ActionIndex>(rng.uniform(kRtsActionCount)));
    const auto& s = env.state();
    ASSERT_TRUE(s.players[0].resources.within_limits());
    ASSERT_TRUE(s.players[1].resources.within_limits());
    ASSERT_TRUE(s.ledger_holds());
    if (r.terminal) env.reset();
  }
}

TEST(RtsObserve, PlanesAndSelection) {
  const auto s = mine_game(100);
  const auto spec = observation_spec_for(s.config);
  const Tensor t = rts_observe(s, spec, 0);
  EXPECT_EQ(t.shape(), (Shape{4, 6, 9}));
  EXPECT_EQ(t.at(0, 2, 2), 1.0);  // gold
  EXPECT_EQ(t.at(0, 1, 4), 1.0);  // own worker
  EXPECT_EQ(t.at(0, 1, 8), 1.0);  // selected
  EXPECT_EQ(t.at(0, 0, 6), 1.0);  // own hall
  EXPECT_EQ(t.at(3, 4, 5), 1.0);  // enemy worker
  EXPECT_EQ(t.at(3, 5, 7), 1.0);  // enemy hall
  const Tensor other = rts_observe(s, spec, 1);
  EXPECT_EQ(other.at(3, 5, 6), 1.0);
  EXPECT_EQ(other.at(0, 1, 8), 0.0);
}

TEST(RtsObserve, OnlyMatrixSupported) {
  for (auto mode : {ObservationMode::RawImage, ObservationMode::HeatmapRGB, ObservationMode::HeatmapGray}) {
    RtsConfig c;
    c.observation = mode;
    EXPECT_THROW(observation_spec_for(c), UnsupportedMode);
    EXPECT_THROW(DeepRtsLiteEnv(c, 1), UnsupportedMode);
  }
}

TEST(RtsAux, NormalisedByLimits) {
  const auto s = mine_game(100);
  const auto aux = rts_aux_vector(s, 0);
  EXPECT_DOUBLE_EQ(aux[3], 5.0 / kMaxPopulation);
  EXPECT_DOUBLE_EQ(aux[4], 1.0 / kMaxPopulation);
  EXPECT_DOUBLE_EQ(aux[1], 0.0);
}

TEST(DeepRtsLiteEnv, ExposesNineActionsAndInfo) {
  DeepRtsLiteEnv env(mine_config(100), 1);
  EXPECT_EQ(env.action_space().count(), 9u);
  const auto r = env.step(static_cast<ActionIndex>(RtsAction::MoveUp));
  EXPECT_EQ(r.info.at("invalid_action"), 1.0);
  EXPECT_EQ(r.info.at("tick"), 1.0);
  EXPECT_EQ(env.auxiliary().size(), 10u);
}

TEST(DeepRtsLiteEnv, SameSeedSameTrajectory) {
  RtsConfig c;
  c.random_opponent = true;
  DeepRtsLiteEnv a(c, 5), b(c, 5);
  Rng ra(1), rb(1);
  for (int i = 0; i < 500; ++i) {
    const auto x = a.step(static_cast<ActionIndex>(ra.uniform(9)));
    const auto y = b.step(static_cast<ActionIndex>(rb.uniform(9)));
    ASSERT_EQ(x.observation, y.observation);
    ASSERT_EQ(x.reward, y.reward);
    if (x.terminal) break;
  }
  EXPECT_EQ(a.state(), b.state());
}

TEST(DeepRtsLiteEnv, MapSizeMustMatchConfig) {
  auto c = mine_config(100);
  c.width = 10;
  EXPECT_THROW(DeepRtsLiteEnv(c, 1), InvalidConfig);
}

TEST(DeepRtsLiteEnv, HistogramWrittenAtTerminal) {
  const auto path = std::filesystem::temp_directory_path() / "rlsuite_rts_hist.csv";
  std::filesystem::remove(path);
  auto c = mine_config(100);
  c.tick_limit = 5;
  c.histogram_csv = path.string();
  DeepRtsLiteEnv env(c, 1);
  StepResult r;
  do r = env.step(0);
  while (!r.terminal);
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 1 + 2 * kRtsActionCount);
  EXPECT_EQ(lines[1], "0,0,NoOp,5");
  std::filesystem::remove(path);
}
