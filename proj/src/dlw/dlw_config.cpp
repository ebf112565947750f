#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>

#include "rlsuite/core/errors.hpp"
#include "rlsuite/dlw/deep_line_wars.hpp"

namespace rlsuite::dlw {
namespace {

int line_of(const YAML::Node& n) { return n.Mark().line >= 0 ? n.Mark().line + 1 : 0; }

template <typename T>
T read(const YAML::Node& n, const std::string& field) {
  try {
    return n.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(field + ": wrong type", line_of(n));
  }
}

UnitKind parse_unit(const YAML::Node& n) {
  if (!n.IsMap()) throw ConfigError("units: each entry must be a mapping", line_of(n));
  UnitKind u;
  for (const auto& kv : n) {
    const auto key = kv.first.as<std::string>();
    const std::string field = "units." + key;
    if (key == "name") u.name = read<std::string>(kv.second, field);
    else if (key == "gold_cost") u.gold_cost = read<int>(kv.second, field);
    else if (key == "hp") u.hp = read<int>(kv.second, field);
    else if (key == "speed_milli") u.speed_milli = read<int>(kv.second, field);
    else if (key == "income_bonus_percent") u.income_bonus_percent = read<int>(kv.second, field);
    else if (key == "leak_damage") u.leak_damage = read<int>(kv.second, field);
    else throw ConfigError("unknown key '" + field + "'", line_of(kv.first));
  }
  return u;
}

TowerKind parse_tower(const YAML::Node& n) {
  if (!n.IsMap()) throw ConfigError("towers: each entry must be a mapping", line_of(n));
  TowerKind t;
  for (const auto& kv : n) {
    const auto key = kv.first.as<std::string>();
    const std::string field = "towers." + key;
    if (key == "name") t.name = read<std::string>(kv.second, field);
    else if (key == "gold_cost") t.gold_cost = read<int>(kv.second, field);
    else if (key == "damage") t.damage = read<int>(kv.second, field);
    else if (key == "range") t.range = read<int>(kv.second, field);
    else if (key == "cooldown") t.cooldown = read<int>(kv.second, field);
    else throw ConfigError("unknown key '" + field + "'", line_of(kv.first));
  }
  return t;
}

}  // namespace

DlwConfig parse_dlw_config(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError(e.msg, e.mark.line + 1);
  }
  DlwConfig c = DlwConfig::defaults();
  if (!root || root.IsNull()) return c;
  if (!root.IsMap()) throw ConfigError("dlw config must be a mapping", line_of(root));

  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    const YAML::Node& v = kv.second;
    if (key == "width") c.width = read<int>(v, key);
    else if (key == "height") c.height = read<int>(v, key);
    else if (key == "tick_rate") c.tick_rate = read<int>(v, key);
    else if (key == "income_interval") c.income_interval = read<int>(v, key);
    else if (key == "start_gold") c.start_gold = read<int>(v, key);
    else if (key == "start_health") c.start_health = read<int>(v, key);
    else if (key == "start_income") c.start_income = read<int>(v, key);
    else if (key == "bounty_percent") c.bounty_percent = read<int>(v, key);
    else if (key == "max_ticks") c.max_ticks = read<std::size_t>(v, key);
    else if (key == "direct_build") c.direct_build = read<bool>(v, key);
    else if (key == "image_width") c.image_width = read<int>(v, key);
    else if (key == "image_height") c.image_height = read<int>(v, key);
    else if (key == "gold_cap") c.gold_cap = read<int>(v, key);
    else if (key == "lumber_cap") c.lumber_cap = read<int>(v, key);
    else if (key == "income_cap") c.income_cap = read<int>(v, key);
    else if (key == "observation") {
      try {
        c.observation = parse_observation_mode(read<std::string>(v, key));
      } catch (const InvalidConfig& e) {
        throw ConfigError(e.what(), line_of(v));
      }
    } else if (key == "opponent") {
      const auto name = read<std::string>(v, key);
      if (name == "random") c.opponent = OpponentPolicy::Random;
      else if (name == "idle") c.opponent = OpponentPolicy::Idle;
      else if (name == "always_send") c.opponent = OpponentPolicy::AlwaysSend;
      else throw ConfigError("opponent: expected random, idle or always_send", line_of(v));
    } else if (key == "units" || key == "towers") {
      if (!v.IsSequence()) throw ConfigError(key + ": expected a list", line_of(v));
      if (key == "units") {
        c.units.clear();
        for (const auto& item : v) c.units.push_back(parse_unit(item));
      } else {
        c.towers.clear();
        for (const auto& item : v) c.towers.push_back(parse_tower(item));
      }
    } else {
      throw ConfigError("unknown key '" + key + "'", line_of(kv.first));
    }
  }
  try {
    c.validate();
  } catch (const InvalidConfig& e) {
    throw ConfigError(e.what(), 0);
  }
  return c;
}

DlwConfig load_dlw_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open dlw config '" + path + "'", 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_dlw_config(buf.str());
}

}  // namespace rlsuite::dlw
