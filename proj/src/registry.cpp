#include "rlsuite/registry.hpp"

#include "rlsuite/core/errors.hpp"

namespace rlsuite {

std::string_view to_string(EnvKind kind) noexcept {
  switch (kind) {
    case EnvKind::DeepMaze: return "DeepMaze";
    case EnvKind::DeepLineWars: return "DeepLineWars";
    case EnvKind::DeepRtsLite: return "DeepRtsLite";
  }
  return "?";
}

std::unique_ptr<Environment> Scenario::make(std::optional<std::uint64_t> seed_override) const {
  const std::uint64_t s = seed_override.value_or(seed);
  return std::visit(
      [s](const auto& cfg) -> std::unique_ptr<Environment> {
        using T = std::decay_t<decltype(cfg)>;
        if constexpr (std::is_same_v<T, maze::MazeConfig>) return std::make_unique<maze::DeepMazeEnv>(cfg, s);
        if constexpr (std::is_same_v<T, dlw::DlwConfig>) return std::make_unique<dlw::DeepLineWarsEnv>(cfg, s);
        if constexpr (std::is_same_v<T, rts::RtsConfig>) return std::make_unique<rts::DeepRtsLiteEnv>(cfg, s);
      },
      config);
}

void Registry::add(Scenario scenario) {
  if (scenarios_.count(scenario.id)) throw DuplicateId("scenario '" + scenario.id + "' is already registered");
  std::string id = scenario.id;
  scenarios_.emplace(std::move(id), std::move(scenario));
}

const Scenario& Registry::get(std::string_view id) const {
  const auto it = scenarios_.find(id);
  if (it == scenarios_.end()) throw UnknownScenario("unknown scenario '" + std::string(id) + "'");
  return it->second;
}

bool Registry::contains(std::string_view id) const { return scenarios_.find(id) != scenarios_.end(); }

std::vector<std::string> Registry::ids() const {
  std::vector<std::string> out;
  out.reserve(scenarios_.size());
  for (const auto& [id, _] : scenarios_) out.push_back(id);
  return out;
}

std::unique_ptr<Environment> Registry::make(std::string_view id, std::optional<std::uint64_t> seed) const {
  return get(id).make(seed);
}

Registry build_default_registry() {
  Registry r;
  for (const int n : {7, 9, 11, 15, 21, 25, 35, 45, 55}) {
    for (const auto mode : {maze::MazeMode::Deterministic, maze::MazeMode::Stochastic}) {
      maze::MazeConfig c;
      c.width = n;
      c.height = n;
      c.mode = mode;
      const std::string variant = mode == maze::MazeMode::Deterministic ? "Deterministic" : "Stochastic";
      const std::string size = std::to_string(n) + "x" + std::to_string(n);
      r.add({"DeepMaze-" + variant + "-" + size, c, 0});
    }
  }
  for (const auto mode : {ObservationMode::RawImage, ObservationMode::Matrix, ObservationMode::HeatmapRGB,
                          ObservationMode::HeatmapGray}) {
    dlw::DlwConfig c = dlw::DlwConfig::defaults();
    c.observation = mode;
    r.add({"DeepLineWars-" + std::string(to_string(mode)) + "-" + std::to_string(c.width) + "x" +
               std::to_string(c.height),
           c, 0});
  }
  rts::RtsConfig rc;
  r.add({"DeepRtsLite-Matrix-" + std::to_string(rc.width) + "x" + std::to_string(rc.height), rc, 0});
  return r;
}

const Registry& default_registry() {
  static const Registry registry = build_default_registry();
  return registry;
}

}  // namespace rlsuite
