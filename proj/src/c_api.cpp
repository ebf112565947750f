#include "rlsuite/c_api.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "rlsuite/core/errors.hpp"
#include "rlsuite/registry.hpp"

struct rls_env {
  std::unique_ptr<rlsuite::Environment> env;
  std::vector<std::pair<std::string, double>> info;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const rlsuite::UnknownScenario& e) {
    return fail(RLS_E_UNKNOWN_SCENARIO, e.what());
  } catch (const rlsuite::InvalidAction& e) {
    return fail(RLS_E_INVALID_ACTION, e.what());
  } catch (const rlsuite::SteppedTerminalEnv& e) {
    return fail(RLS_E_STEPPED_TERMINAL, e.what());
  } catch (const rlsuite::InvalidArgument& e) {
    return fail(RLS_E_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(RLS_E_INTERNAL, e.what());
  }
}

// Checked before the environment moves so a bad buffer leaves it untouched.
int check_buffer(const rls_env* env, const double* obs, std::size_t len) {
  if (!obs) return fail(RLS_E_INVALID_ARGUMENT, "observation buffer is null");
  const std::size_t need = env->env->observation_spec().data_size();
  if (len < need) return fail(RLS_E_BUFFER_TOO_SMALL, "observation needs " + std::to_string(need) + " doubles");
  return RLS_OK;
}

int copy_observation(const rlsuite::Tensor& t, double* obs) {
  std::copy(t.data().begin(), t.data().end(), obs);
  return RLS_OK;
}

}  // namespace

extern "C" {

const char* rls_last_error(void) { return g_last_error.c_str(); }

size_t rls_scenario_count(void) { return rlsuite::default_registry().size(); }

const char* rls_scenario_id(size_t index) {
  static const std::vector<std::string> ids = rlsuite::default_registry().ids();
  if (index >= ids.size()) {
    fail(RLS_E_INVALID_ARGUMENT, "scenario index out of range");
    return nullptr;
  }
  return ids[index].c_str();
}

rls_env* rls_make(const char* scenario_id, uint64_t seed, int has_seed) {
  if (!scenario_id) {
    fail(RLS_E_INVALID_ARGUMENT, "scenario id is null");
    return nullptr;
  }
  auto handle = std::make_unique<rls_env>();
  const int rc = guarded([&] {
    handle->env = rlsuite::default_registry().make(scenario_id, has_seed ? std::optional(seed) : std::nullopt);
    return RLS_OK;
  });
  return rc == RLS_OK ? handle.release() : nullptr;
}

void rls_destroy(rls_env* env) { delete env; }

size_t rls_action_count(const rls_env* env) { return env ? env->env->action_space().count() : 0; }

int rls_observation_spec_get(const rls_env* env, rls_observation_spec* out) {
  if (!env || !out) return fail(RLS_E_INVALID_ARGUMENT, "null argument");
  const auto& s = env->env->observation_spec();
  out->mode = static_cast<int>(s.mode);
  out->width = s.width;
  out->height = s.height;
  out->channels = s.channels;
  out->size = s.data_size();
  return RLS_OK;
}

int rls_reset(rls_env* env, uint64_t seed, int has_seed, double* obs, size_t obs_len) {
  if (!env) return fail(RLS_E_INVALID_ARGUMENT, "null environment");
  if (const int rc = check_buffer(env, obs, obs_len); rc != RLS_OK) return rc;
  return guarded([&] {
    env->info.clear();
    const auto t = env->env->reset(has_seed ? std::optional(seed) : std::nullopt);
    return copy_observation(t, obs);
  });
}

int rls_step(rls_env* env, uint32_t action, double* obs, size_t obs_len, double* reward, int* terminal) {
  if (!env) return fail(RLS_E_INVALID_ARGUMENT, "null environment");
  if (const int rc = check_buffer(env, obs, obs_len); rc != RLS_OK) return rc;
  return guarded([&] {
    auto r = env->env->step(action);
    env->info.assign(r.info.begin(), r.info.end());
    if (reward) *reward = r.reward;
    if (terminal) *terminal = r.terminal ? 1 : 0;
    return copy_observation(r.observation, obs);
  });
}

size_t rls_info_count(const rls_env* env) { return env ? env->info.size() : 0; }

int rls_info_entry(const rls_env* env, size_t index, const char** key, double* value) {
  if (!env || !key || !value) return fail(RLS_E_INVALID_ARGUMENT, "null argument");
  if (index >= env->info.size()) return fail(RLS_E_INVALID_ARGUMENT, "info index out of range");
  *key = env->info[index].first.c_str();
  *value = env->info[index].second;
  return RLS_OK;
}

size_t rls_render_text(const rls_env* env, char* buffer, size_t len) {
  if (!env) return 0;
  const std::string text = env->env->render_text();
  if (buffer && len > 0) {
    const std::size_t n = std::min(text.size(), len - 1);
    std::memcpy(buffer, text.data(), n);
    buffer[n] = '\0';
  }
  return text.size();
}

size_t rls_auxiliary(const rls_env* env, double* out, size_t len) {
  if (!env) return 0;
  const auto aux = env->env->auxiliary();
  if (out) std::copy_n(aux.begin(), std::min(aux.size(), len), out);
  return aux.size();
}

}  // extern "C"
