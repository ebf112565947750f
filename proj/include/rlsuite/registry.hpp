#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rlsuite/dlw/deep_line_wars.hpp"
#include "rlsuite/env/environment.hpp"
#include "rlsuite/maze/deep_maze.hpp"
#include "rlsuite/rts/deep_rts_lite.hpp"

namespace rlsuite {

enum class EnvKind { DeepMaze, DeepLineWars, DeepRtsLite };

std::string_view to_string(EnvKind kind) noexcept;

using EnvConfig = std::variant<maze::MazeConfig, dlw::DlwConfig, rts::RtsConfig>;

/// A named, seeded environment configuration. Ids follow "Kind-Variant-WxH".
struct Scenario {
  std::string id;
  EnvConfig config;
  std::uint64_t seed = 0;

  EnvKind kind() const noexcept { return static_cast<EnvKind>(config.index()); }
  /// Fresh environment; `seed` overrides the scenario seed.
  std::unique_ptr<Environment> make(std::optional<std::uint64_t> seed = std::nullopt) const;
};

class Registry {
 public:
  /// Throws DuplicateId.
  void add(Scenario scenario);
  /// Throws UnknownScenario.
  const Scenario& get(std::string_view id) const;
  bool contains(std::string_view id) const;
  /// Sorted lexicographically.
  std::vector<std::string> ids() const;
  std::size_t size() const noexcept { return scenarios_.size(); }

  std::unique_ptr<Environment> make(std::string_view id, std::optional<std::uint64_t> seed = std::nullopt) const;

 private:
  std::map<std::string, Scenario, std::less<>> scenarios_;
};

inline Registry& register_scenario(Registry& registry, Scenario scenario) {
  registry.add(std::move(scenario));
  return registry;
}

/// Every built-in scenario:
///   DeepMaze-{Deterministic,Stochastic}-NxN for N in 7, 9, 11, 15, 21, 25, 35, 45, 55
///   DeepLineWars-{RawImage,Matrix,HeatmapRGB,HeatmapGray}-15x10
///   DeepRtsLite-Matrix-10x10
Registry build_default_registry();
const Registry& default_registry();

}  // namespace rlsuite
