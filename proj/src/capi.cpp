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

#include "bayesphase/bayesphase.h"

#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "bayesphase/circular.hpp"
#include "bayesphase/errors.hpp"
#include "bayesphase/measurement.hpp"
#include "bayesphase/multimode.hpp"
#include "bayesphase/optimizer.hpp"
#include "bayesphase/serialize.hpp"
#include "bayesphase/state.hpp"

using namespace bayesphase;

struct bp_state {
  StateVector value;
};

struct bp_record {
  MeasurementRecord value;
};

struct bp_optimization {
  OptimizationResult value;
};

struct bp_sweep {
  std::vector<SweepEntry> value;
};

namespace {

thread_local std::string last_error;

bp_status to_status(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidState: return BP_ERR_INVALID_STATE;
    case ErrorKind::Index: return BP_ERR_INDEX;
    case ErrorKind::Configuration: return BP_ERR_CONFIG;
    case ErrorKind::DegeneratePosterior: return BP_ERR_DEGENERATE_POSTERIOR;
    case ErrorKind::UndefinedAsymptote: return BP_ERR_UNDEFINED_ASYMPTOTE;
    case ErrorKind::Guard: return BP_ERR_GUARD;
    case ErrorKind::Io: return BP_ERR_IO;
    case ErrorKind::Parse: return BP_ERR_PARSE;
  }
  return BP_ERR_INTERNAL;
}

bp_status fail(bp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `fn`, translating every exception into a status code.
template <typename Fn>
bp_status guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    fn();
    return BP_OK;
  } catch (const Error& e) {
    return fail(to_status(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BP_ERR_INTERNAL, "unknown error");
  }
}

template <typename... Ptrs>
bool any_null(const Ptrs*... ptrs) {
  return ((ptrs == nullptr) || ...);
}

#define BP_REQUIRE(...)                                                  \
  do {                                                                   \
    if (any_null(__VA_ARGS__)) return fail(BP_ERR_NULL_ARGUMENT, "null argument"); \
  } while (0)

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

BoundReport from_c(const bp_bound_report& r) {
  BoundReport out;
  out.modes = r.modes;
  out.mc_information = r.mc_information;
  out.mc_stderr = r.mc_stderr;
  out.mc_trials = r.mc_trials;
  out.chain_upper_bound = r.chain_upper_bound;
  if (r.has_asymptote) out.asymptotic_value = r.asymptotic_value;
  out.fisher = r.fisher;
  out.single_info = r.single_info;
  return out;
}

bp_bound_report to_c(const BoundReport& r) {
  return {r.modes,
          r.mc_information,
          r.mc_stderr,
          r.mc_trials,
          r.chain_upper_bound,
          r.asymptotic_value.has_value() ? 1 : 0,
          r.asymptotic_value.value_or(std::numeric_limits<double>::quiet_NaN()),
          r.fisher,
          r.single_info};
}

OptimizerConfig from_c(const bp_optimizer_config& c) {
  OptimizerConfig out;
  out.max_photon = c.max_photon;
  out.grid_size = c.grid_size;
  out.starts = c.starts;
  out.step_init = c.step_init;
  out.convergence_tol = c.convergence_tol;
  out.max_iters = c.max_iters;
  out.seed = c.seed;
  return out;
}

}  // namespace

extern "C" {

const char* bp_version(void) { return "1.0.0"; }

const char* bp_status_name(bp_status status) {
  switch (status) {
    case BP_OK: return "ok";
    case BP_ERR_INVALID_STATE: return "invalid-state";
    case BP_ERR_INDEX: return "index";
    case BP_ERR_CONFIG: return "configuration";
    case BP_ERR_DEGENERATE_POSTERIOR: return "degenerate-posterior";
    case BP_ERR_UNDEFINED_ASYMPTOTE: return "undefined-asymptote";
    case BP_ERR_GUARD: return "guard";
    case BP_ERR_IO: return "io";
    case BP_ERR_PARSE: return "parse";
    case BP_ERR_NULL_ARGUMENT: return "null-argument";
    case BP_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* bp_last_error(void) { return last_error.c_str(); }

void bp_string_free(char* str) { delete[] str; }

// ---- states

bp_status bp_state_from_amplitudes(const double* re_im, size_t count, bp_state** out) {
  BP_REQUIRE(re_im, out);
  return guarded([&] {
    std::vector<Amplitude> raw(count);
    for (size_t n = 0; n < count; ++n) raw[n] = Amplitude(re_im[2 * n], re_im[2 * n + 1]);
    *out = new bp_state{normalize(raw)};
  });
}

bp_status bp_state_fock(int n, int max_photon, bp_state** out) {
  BP_REQUIRE(out);
  return guarded([&] { *out = new bp_state{fock_state(n, max_photon)}; });
}

bp_status bp_state_sine(int max_photon, bp_state** out) {
  BP_REQUIRE(out);
  return guarded([&] { *out = new bp_state{sine_state(max_photon)}; });
}

bp_status bp_state_random(int max_photon, uint64_t seed, bp_state** out) {
  BP_REQUIRE(out);
  return guarded([&] { *out = new bp_state{random_state(max_photon, seed)}; });
}

bp_status bp_state_from_json(const char* text, bp_state** out) {
  BP_REQUIRE(text, out);
  return guarded([&] { *out = new bp_state{state_from_json(text)}; });
}

bp_status bp_state_load(const char* path, bp_state** out) {
  BP_REQUIRE(path, out);
  return guarded([&] { *out = new bp_state{load_state_file(path)}; });
}

bp_status bp_state_to_json(const bp_state* state, char** out) {
  BP_REQUIRE(state, out);
  return guarded([&] { *out = duplicate(state_to_json(state->value)); });
}

int bp_state_max_photon(const bp_state* state) {
  return state ? state->value.max_photon() : -1;
}

bp_status bp_state_amplitudes(const bp_state* state, double* re_im, size_t count) {
  BP_REQUIRE(state, re_im);
  if (count < state->value.size()) {
    return fail(BP_ERR_CONFIG, "buffer holds " + std::to_string(count) + " amplitudes, need " +
                                   std::to_string(state->value.size()));
  }
  for (size_t n = 0; n < state->value.size(); ++n) {
    re_im[2 * n] = state->value[n].real();
    re_im[2 * n + 1] = state->value[n].imag();
  }
  return BP_OK;
}

void bp_state_free(bp_state* state) { delete state; }

// ---- canonical measurement

bp_status bp_likelihood_density(const bp_state* state, double delta, double* out) {
  BP_REQUIRE(state, out);
  return guarded([&] { *out = likelihood_density(state->value, delta); });
}

bp_status bp_sample_outcomes(const bp_state* state, double true_phase, size_t count,
                             uint32_t grid_size, uint64_t seed, bp_record** out) {
  BP_REQUIRE(state, out);
  return guarded([&] {
    *out = new bp_record{sample_outcomes(state->value, true_phase, count, seed, grid_size)};
  });
}

size_t bp_record_size(const bp_record* record) {
  return record ? record->value.outcomes.size() : 0;
}

bp_status bp_record_outcomes(const bp_record* record, double* out, size_t count) {
  BP_REQUIRE(record, out);
  const auto& v = record->value.outcomes;
  if (count < v.size()) return fail(BP_ERR_CONFIG, "output buffer too small");
  std::copy(v.begin(), v.end(), out);
  return BP_OK;
}

bp_status bp_record_to_json(const bp_record* record, char** out) {
  BP_REQUIRE(record, out);
  return guarded([&] { *out = duplicate(record_to_json(record->value)); });
}

void bp_record_free(bp_record* record) { delete record; }

// ---- information

bp_status bp_information_report(const bp_state* state, uint32_t grid_size, bp_info_report* out) {
  BP_REQUIRE(state, out);
  return guarded([&] {
    const auto r = information_report(state->value, grid_size);
    *out = {r.entropy,         r.mutual_information,    r.fisher_information,
            r.mean_resultant_length, r.mean_direction, r.circular_variance,
            r.holevo_variance};
  });
}

bp_status bp_information_report_to_json(const bp_info_report* report, int bits, char** out) {
  BP_REQUIRE(report, out);
  return guarded([&] {
    InformationReport r;
    r.entropy = report->entropy;
    r.mutual_information = report->mutual_information;
    r.fisher_information = report->fisher_information;
    r.mean_resultant_length = report->mean_resultant_length;
    r.mean_direction = report->mean_direction;
    r.circular_variance = report->circular_variance;
    r.holevo_variance = report->holevo_variance;
    *out = duplicate(information_report_to_json(r, bits != 0));
  });
}

bp_status bp_mutual_information(const bp_state* state, uint32_t grid_size, double* out) {
  BP_REQUIRE(state, out);
  return guarded([&] { *out = mutual_information_single(state->value, grid_size); });
}

bp_status bp_fisher_information(const bp_state* state, uint32_t grid_size, double* out) {
  BP_REQUIRE(state, out);
  return guarded([&] { *out = fisher_information(state->value, grid_size); });
}

// ---- optimizer

void bp_optimizer_config_init(bp_optimizer_config* config) {
  if (!config) return;
  const OptimizerConfig d;
  *config = {d.max_photon, static_cast<uint32_t>(d.grid_size), d.starts, d.step_init,
             d.convergence_tol, d.max_iters, d.seed};
}

bp_status bp_optimize(const bp_optimizer_config* config, bp_optimization** out) {
  BP_REQUIRE(config, out);
  return guarded([&] { *out = new bp_optimization{optimize_state(from_c(*config))}; });
}

double bp_optimization_information(const bp_optimization* result) {
  return result ? result->value.best_information : std::numeric_limits<double>::quiet_NaN();
}

int bp_optimization_converged(const bp_optimization* result) {
  return result && result->value.converged ? 1 : 0;
}

bp_status bp_optimization_state(const bp_optimization* result, bp_state** out) {
  BP_REQUIRE(result, out);
  return guarded([&] { *out = new bp_state{result->value.best_state}; });
}

bp_status bp_optimization_to_json(const bp_optimization* result, char** out) {
  BP_REQUIRE(result, out);
  return guarded([&] { *out = duplicate(optimization_result_to_json(result->value)); });
}

void bp_optimization_free(bp_optimization* result) { delete result; }

bp_status bp_bound_sweep(int n_max, const bp_optimizer_config* config, bp_sweep** out) {
  BP_REQUIRE(config, out);
  return guarded([&] { *out = new bp_sweep{bound_sweep(n_max, from_c(*config))}; });
}

size_t bp_sweep_size(const bp_sweep* sweep) { return sweep ? sweep->value.size() : 0; }

bp_status bp_sweep_entry(const bp_sweep* sweep, size_t index, int* max_photon,
                         double* information, int* converged) {
  BP_REQUIRE(sweep);
  if (index >= sweep->value.size()) {
    return fail(BP_ERR_INDEX, "sweep index " + std::to_string(index) + " out of range");
  }
  const auto& e = sweep->value[index];
  if (max_photon) *max_photon = e.max_photon;
  if (information) *information = e.information;
  if (converged) *converged = e.converged ? 1 : 0;
  return BP_OK;
}

bp_status bp_sweep_to_csv(const bp_sweep* sweep, char** out) {
  BP_REQUIRE(sweep, out);
  return guarded([&] { *out = duplicate(sweep_to_csv(sweep->value)); });
}

void bp_sweep_free(bp_sweep* sweep) { delete sweep; }

// ---- multi-mode bounds

bp_status bp_chain_upper_bound(const bp_state* state, int modes, uint32_t grid_size,
                               double* out) {
  BP_REQUIRE(state, out);
  return guarded([&] { *out = chain_upper_bound(state->value, modes, grid_size); });
}

bp_status bp_asymptotic_information(double fisher, int modes, double* out) {
  BP_REQUIRE(out);
  return guarded([&] { *out = asymptotic_information(fisher, modes); });
}

bp_status bp_check_mode_guard(int modes, uint32_t grid_size) {
  return guarded([&] { check_mode_guard(modes, grid_size); });
}

bp_status bp_bound_report_compute(const bp_state* state, int modes, int trials,
                                  uint32_t grid_size, uint64_t seed, bp_bound_report* out) {
  BP_REQUIRE(state, out);
  return guarded(
      [&] { *out = to_c(bound_report(state->value, modes, trials, grid_size, seed)); });
}

bp_status bp_bound_report_to_json(const bp_bound_report* report, char** out) {
  BP_REQUIRE(report, out);
  return guarded([&] { *out = duplicate(bound_report_to_json(from_c(*report))); });
}

bp_status bp_bound_curve_csv(const bp_state* state, const int* modes, size_t count, int trials,
                             uint32_t grid_size, uint64_t seed, char** out) {
  BP_REQUIRE(state, modes, out);
  return guarded([&] {
    const auto reports = bound_curve(state->value, std::span<const int>(modes, count), trials,
                                     grid_size, seed);
    *out = duplicate(bound_curve_to_csv(reports));
  });
}

}  // extern "C"
