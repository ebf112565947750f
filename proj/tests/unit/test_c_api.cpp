#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "rlsuite/c_api.h"
#include "rlsuite/registry.hpp"

using namespace rlsuite;

TEST(CApi, ScenarioListMatchesRegistry) {
  const auto ids = default_registry().ids();
  ASSERT_EQ(rls_scenario_count(), ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) EXPECT_EQ(rls_scenario_id(i), ids[i]);
  EXPECT_EQ(rls_scenario_id(ids.size()), nullptr);
}

TEST(CApi, UnknownScenario) {
  EXPECT_EQ(rls_make("NoSuch-X-1x1", 0, 0), nullptr);
  EXPECT_NE(std::string(rls_last_error()).find("NoSuch"), std::string::npos);
}

TEST(CApi, TrajectoryMatchesNative) {
  for (const char* id : {"DeepMaze-Stochastic-9x9", "DeepLineWars-Matrix-15x10", "DeepRtsLite-Matrix-10x10"}) {
    rls_env* env = rls_make(id, 5, 1);
    ASSERT_NE(env, nullptr) << rls_last_error();
    auto native = default_registry().make(id, 5);

    rls_observation_spec spec{};
    ASSERT_EQ(rls_observation_spec_get(env, &spec), RLS_OK);
    EXPECT_EQ(spec.size, native->observation_spec().data_size());
    EXPECT_EQ(spec.mode, static_cast<int>(native->observation_spec().mode));
    EXPECT_EQ(rls_action_count(env), native->action_space().count());

    std::vector<double> obs(spec.size);
    ASSERT_EQ(rls_reset(env, 11, 1, obs.data(), obs.size()), RLS_OK);
    EXPECT_EQ(obs, native->reset(11).values()) << id;

    Rng rng(2);
    for (int t = 0; t < 300; ++t) {
      const auto a = static_cast<std::uint32_t>(native->sample_action(rng));
      const StepResult r = native->step(a);
      double reward = 0.0;
      int terminal = 0;
      ASSERT_EQ(rls_step(env, a, obs.data(), obs.size(), &reward, &terminal), RLS_OK);
      ASSERT_EQ(obs, r.observation.values()) << id << " step " << t;
      ASSERT_EQ(reward, r.reward);
      ASSERT_EQ(terminal != 0, r.terminal);
      ASSERT_EQ(rls_info_count(env), r.info.size());
      std::size_t k = 0;
      for (const auto& [key, value] : r.info) {
        const char* ckey = nullptr;
        double cvalue = 0.0;
        ASSERT_EQ(rls_info_entry(env, k++, &ckey, &cvalue), RLS_OK);
        ASSERT_EQ(key, ckey);
        ASSERT_EQ(value, cvalue);
      }
      if (r.terminal) break;
    }
    rls_destroy(env);
  }
}

TEST(CApi, ErrorCodes) {
  rls_env* env = rls_make("DeepMaze-Deterministic-7x7", 1, 1);
  ASSERT_NE(env, nullptr);
  rls_observation_spec spec{};
  rls_observation_spec_get(env, &spec);
  std::vector<double> obs(spec.size);
  double reward = 0.0;
  int terminal = 0;
  EXPECT_EQ(rls_step(env, 99, obs.data(), obs.size(), &reward, &terminal), RLS_E_INVALID_ACTION);
  EXPECT_EQ(rls_step(env, 0, obs.data(), 3, &reward, &terminal), RLS_E_BUFFER_TOO_SMALL);
  EXPECT_EQ(rls_reset(env, 0, 0, obs.data(), 0), RLS_E_BUFFER_TOO_SMALL);
  EXPECT_EQ(rls_reset(env, 0, 0, nullptr, obs.size()), RLS_E_INVALID_ARGUMENT);
  EXPECT_EQ(rls_observation_spec_get(nullptr, &spec), RLS_E_INVALID_ARGUMENT);

  Rng rng(1);
  do {
    ASSERT_EQ(rls_step(env, static_cast<std::uint32_t>(rng.uniform(4)), obs.data(), obs.size(), &reward, &terminal),
              RLS_OK);
  } while (!terminal);
  EXPECT_EQ(rls_step(env, 0, obs.data(), obs.size(), &reward, &terminal), RLS_E_STEPPED_TERMINAL);
  rls_destroy(env);
}

TEST(CApi, RenderAndAuxiliary) {
  rls_env* env = rls_make("DeepLineWars-HeatmapGray-15x10", 0, 0);
  ASSERT_NE(env, nullptr);
  const std::size_t full = rls_render_text(env, nullptr, 0);
  std::string text(full + 1, '\0');
  EXPECT_EQ(rls_render_text(env, text.data(), text.size()), full);
  EXPECT_EQ(text.find("p0 hp="), text.find('|') + 16 * 10);
  char small[4];
  rls_render_text(env, small, sizeof small);
  EXPECT_EQ(std::string(small), text.substr(0, 3));

  double aux[16];
  EXPECT_EQ(rls_auxiliary(env, aux, 16), 8u);
  EXPECT_DOUBLE_EQ(aux[0], 1.0);
  rls_destroy(env);
}
