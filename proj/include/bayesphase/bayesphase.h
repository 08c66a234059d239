// Copyright 2026 The bayesphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the bayesphase library.
 *
 * Every fallible call returns a bp_status; on failure a human-readable
 * message is available from bp_last_error() on the calling thread. Objects
 * are opaque handles created by bp_*_create-style functions and released by
 * the matching bp_*_free. Strings handed out by *_to_json / *_csv functions
 * are owned by the caller and released with bp_string_free.
 *
 * Angles are radians, information is nats, grid sizes are powers of two
 * >= 64.
 */
#ifndef BAYESPHASE_H
#define BAYESPHASE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BAYESPHASE_BUILDING)
#    define BP_API __declspec(dllexport)
#  else
#    define BP_API __declspec(dllimport)
#  endif
#else
#  define BP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bp_status {
  BP_OK = 0,
  BP_ERR_INVALID_STATE = 1,
  BP_ERR_INDEX = 2,
  BP_ERR_CONFIG = 3,
  BP_ERR_DEGENERATE_POSTERIOR = 4,
  BP_ERR_UNDEFINED_ASYMPTOTE = 5,
  BP_ERR_GUARD = 6,
  BP_ERR_IO = 7,
  BP_ERR_PARSE = 8,
  BP_ERR_NULL_ARGUMENT = 9,
  BP_ERR_INTERNAL = 10
} bp_status;

BP_API const char* bp_version(void);
BP_API const char* bp_status_name(bp_status status);
/* Message of the last failed call on this thread; "" if none. */
BP_API const char* bp_last_error(void);
BP_API void bp_string_free(char* str);

/* ---- states ---------------------------------------------------------- */

typedef struct bp_state bp_state;

/* `re_im` holds 2*count doubles: re_0, im_0, re_1, im_1, ... */
BP_API bp_status bp_state_from_amplitudes(const double* re_im, size_t count, bp_state** out);
BP_API bp_status bp_state_fock(int n, int max_photon, bp_state** out);
BP_API bp_status bp_state_sine(int max_photon, bp_state** out);
BP_API bp_status bp_state_random(int max_photon, uint64_t seed, bp_state** out);
BP_API bp_status bp_state_from_json(const char* text, bp_state** out);
BP_API bp_status bp_state_load(const char* path, bp_state** out);
BP_API bp_status bp_state_to_json(const bp_state* state, char** out);
BP_API int bp_state_max_photon(const bp_state* state);
/* Copies max_photon+1 amplitudes into re_im (capacity `count` amplitudes). */
BP_API bp_status bp_state_amplitudes(const bp_state* state, double* re_im, size_t count);
BP_API void bp_state_free(bp_state* state);

/* ---- canonical measurement ------------------------------------------- */

BP_API bp_status bp_likelihood_density(const bp_state* state, double delta, double* out);

typedef struct bp_record bp_record;

BP_API bp_status bp_sample_outcomes(const bp_state* state, double true_phase, size_t count,
                                    uint32_t grid_size, uint64_t seed, bp_record** out);
BP_API size_t bp_record_size(const bp_record* record);
BP_API bp_status bp_record_outcomes(const bp_record* record, double* out, size_t count);
BP_API bp_status bp_record_to_json(const bp_record* record, char** out);
BP_API void bp_record_free(bp_record* record);

/* ---- information ----------------------------------------------------- */

typedef struct bp_info_report {
  double entropy;
  double mutual_information;
  double fisher_information;
  double mean_resultant_length;
  double mean_direction;
  double circular_variance;
  double holevo_variance; /* +inf when the resultant length vanishes */
} bp_info_report;

BP_API bp_status bp_information_report(const bp_state* state, uint32_t grid_size,
                                       bp_info_report* out);
/* bits != 0 converts entropy and information to bits. */
BP_API bp_status bp_information_report_to_json(const bp_info_report* report, int bits,
                                               char** out);
BP_API bp_status bp_mutual_information(const bp_state* state, uint32_t grid_size, double* out);
BP_API bp_status bp_fisher_information(const bp_state* state, uint32_t grid_size, double* out);

/* ---- single-mode optimizer ------------------------------------------- */

typedef struct bp_optimizer_config {
  int max_photon;
  uint32_t grid_size;
  int starts;
  double step_init;
  double convergence_tol;
  int max_iters;
  uint64_t seed;
} bp_optimizer_config;

/* Defaults: grid 4096, 16 starts, step 0.1, tol 1e-10, 10^4 iterations. */
BP_API void bp_optimizer_config_init(bp_optimizer_config* config);

typedef struct bp_optimization bp_optimization;

BP_API bp_status bp_optimize(const bp_optimizer_config* config, bp_optimization** out);
BP_API double bp_optimization_information(const bp_optimization* result);
BP_API int bp_optimization_converged(const bp_optimization* result);
BP_API bp_status bp_optimization_state(const bp_optimization* result, bp_state** out);
BP_API bp_status bp_optimization_to_json(const bp_optimization* result, char** out);
BP_API void bp_optimization_free(bp_optimization* result);

typedef struct bp_sweep bp_sweep;

/* config->max_photon is ignored; N runs over 0..n_max. */
BP_API bp_status bp_bound_sweep(int n_max, const bp_optimizer_config* config, bp_sweep** out);
BP_API size_t bp_sweep_size(const bp_sweep* sweep);
BP_API bp_status bp_sweep_entry(const bp_sweep* sweep, size_t index, int* max_photon,
                                double* information, int* converged);
BP_API bp_status bp_sweep_to_csv(const bp_sweep* sweep, char** out);
BP_API void bp_sweep_free(bp_sweep* sweep);

/* ---- multi-mode bounds ----------------------------------------------- */

typedef struct bp_bound_report {
  int modes;
  double mc_information;
  double mc_stderr;
  int mc_trials;
  double chain_upper_bound;
  int has_asymptote;
  double asymptotic_value; /* valid only when has_asymptote */
  double fisher;
  double single_info;
} bp_bound_report;

BP_API bp_status bp_chain_upper_bound(const bp_state* state, int modes, uint32_t grid_size,
                                      double* out);
BP_API bp_status bp_asymptotic_information(double fisher, int modes, double* out);
/* BP_ERR_GUARD when modes > grid_size / 16. */
BP_API bp_status bp_check_mode_guard(int modes, uint32_t grid_size);
BP_API bp_status bp_bound_report_compute(const bp_state* state, int modes, int trials,
                                         uint32_t grid_size, uint64_t seed,
                                         bp_bound_report* out);
BP_API bp_status bp_bound_report_to_json(const bp_bound_report* report, char** out);
/* Guards every entry of `modes` before computing anything. */
BP_API bp_status bp_bound_curve_csv(const bp_state* state, const int* modes, size_t count,
                                    int trials, uint32_t grid_size, uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* BAYESPHASE_H */
