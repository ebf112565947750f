/* Plain C interface over the scenario registry, for language bindings.
 *
 * Functions returning int use 0 for success and a negative RLS_E* code on
 * failure; rls_last_error() then describes the failure (per thread). */
#ifndef RLSUITE_C_API_H
#define RLSUITE_C_API_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  RLS_OK = 0,
  RLS_E_UNKNOWN_SCENARIO = -1,
  RLS_E_INVALID_ACTION = -2,
  RLS_E_STEPPED_TERMINAL = -3,
  RLS_E_BUFFER_TOO_SMALL = -4,
  RLS_E_INVALID_ARGUMENT = -5,
  RLS_E_INTERNAL = -6
};

/* Matches ObservationMode: 0 RawImage, 1 Matrix, 2 HeatmapRGB, 3 HeatmapGray. */
typedef struct rls_observation_spec {
  int mode;
  size_t width;
  size_t height;
  size_t channels;
  size_t size; /* height * width * channels doubles, (H, W, C) row-major */
} rls_observation_spec;

typedef struct rls_env rls_env;

const char* rls_last_error(void);

/* Registered ids in sorted order; the pointer stays valid for the process. */
size_t rls_scenario_count(void);
const char* rls_scenario_id(size_t index);

/* NULL on failure. has_seed = 0 keeps the scenario's own seed. */
rls_env* rls_make(const char* scenario_id, uint64_t seed, int has_seed);
void rls_destroy(rls_env* env);

size_t rls_action_count(const rls_env* env);
int rls_observation_spec_get(const rls_env* env, rls_observation_spec* out);

/* obs must hold spec.size doubles. */
int rls_reset(rls_env* env, uint64_t seed, int has_seed, double* obs, size_t obs_len);
int rls_step(rls_env* env, uint32_t action, double* obs, size_t obs_len, double* reward, int* terminal);

/* Diagnostics from the last step, sorted by key. */
size_t rls_info_count(const rls_env* env);
int rls_info_entry(const rls_env* env, size_t index, const char** key, double* value);

/* Copies up to len-1 chars plus NUL; returns the full text length. */
size_t rls_render_text(const rls_env* env, char* buffer, size_t len);
/* Copies up to len values; returns the full vector length. */
size_t rls_auxiliary(const rls_env* env, double* out, size_t len);

#ifdef __cplusplus
}
#endif

#endif /* RLSUITE_C_API_H */
