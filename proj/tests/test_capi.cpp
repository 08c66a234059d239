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

#include <doctest.h>

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "bayesphase/bayesphase.h"

namespace {

struct StateHandle {
  bp_state* ptr = nullptr;
  ~StateHandle() { bp_state_free(ptr); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  bp_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("state handles") {
  StateHandle s;
  const double amps[] = {1.0, 0.0, 0.0, 1.0};
  REQUIRE(bp_state_from_amplitudes(amps, 2, &s.ptr) == BP_OK);
  CHECK(bp_state_max_photon(s.ptr) == 1);
  double out[4];
  REQUIRE(bp_state_amplitudes(s.ptr, out, 2) == BP_OK);
  CHECK(std::abs(out[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(out[3] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(bp_state_amplitudes(s.ptr, out, 1) == BP_ERR_CONFIG);

  StateHandle back;
  char* json = nullptr;
  REQUIRE(bp_state_to_json(s.ptr, &json) == BP_OK);
  REQUIRE(bp_state_from_json(json, &back.ptr) == BP_OK);
  bp_string_free(json);
  double again[4];
  bp_state_amplitudes(back.ptr, again, 2);
  for (int i = 0; i < 4; ++i) CHECK(again[i] == out[i]);
}

TEST_CASE("status codes and messages") {
  bp_state* s = nullptr;
  const double zeros[] = {0.0, 0.0};
  CHECK(bp_state_from_amplitudes(zeros, 1, &s) == BP_ERR_INVALID_STATE);
  CHECK(s == nullptr);
  CHECK(std::string(bp_last_error()).find("zero") != std::string::npos);

  CHECK(bp_state_fock(5, 2, &s) == BP_ERR_INDEX);
  CHECK(bp_state_from_json("{", &s) == BP_ERR_PARSE);
  CHECK(bp_state_load("/nonexistent/state.json", &s) == BP_ERR_IO);
  CHECK(std::string(bp_last_error()).find("/nonexistent/state.json") != std::string::npos);
  CHECK(bp_state_sine(1, nullptr) == BP_ERR_NULL_ARGUMENT);

  double v = 0.0;
  CHECK(bp_asymptotic_information(0.0, 4, &v) == BP_ERR_UNDEFINED_ASYMPTOTE);
  CHECK(bp_check_mode_guard(300, 4096) == BP_ERR_GUARD);
  CHECK(bp_check_mode_guard(256, 4096) == BP_OK);
  CHECK(std::string(bp_last_error()).empty());
  CHECK(std::string(bp_status_name(BP_ERR_GUARD)) == "guard");

  StateHandle ok;
  REQUIRE(bp_state_sine(2, &ok.ptr) == BP_OK);
  CHECK(bp_mutual_information(ok.ptr, 100, &v) == BP_ERR_CONFIG);
}

TEST_CASE("information through the C interface") {
  StateHandle s;
  REQUIRE(bp_state_sine(1, &s.ptr) == BP_OK);
  bp_info_report r;
  REQUIRE(bp_information_report(s.ptr, 4096, &r) == BP_OK);
  CHECK(std::abs(r.mutual_information - (1.0 - std::log(2.0))) < 1e-8);
  CHECK(std::abs(r.fisher_information - 1.0) < 1e-8);
  CHECK(std::abs(r.holevo_variance - 3.0) < 1e-9);

  double p = 0.0;
  REQUIRE(bp_likelihood_density(s.ptr, 0.0, &p) == BP_OK);
  CHECK(std::abs(p - 1.0 / M_PI) < 1e-15);

  StateHandle fock;
  REQUIRE(bp_state_fock(1, 3, &fock.ptr) == BP_OK);
  REQUIRE(bp_information_report(fock.ptr, 1024, &r) == BP_OK);
  char* json = nullptr;
  REQUIRE(bp_information_report_to_json(&r, 0, &json) == BP_OK);
  CHECK(take(json).find("\"holevo_variance\": \"inf\"") != std::string::npos);
}

TEST_CASE("optimizer through the C interface") {
  bp_optimizer_config c;
  bp_optimizer_config_init(&c);
  CHECK(c.grid_size == 4096);
  CHECK(c.starts == 16);
  CHECK(c.max_iters == 10000);
  c.max_photon = 1;
  c.starts = 4;
  bp_optimization* r = nullptr;
  REQUIRE(bp_optimize(&c, &r) == BP_OK);
  CHECK(std::abs(bp_optimization_information(r) - (1.0 - std::log(2.0))) < 1e-6);
  CHECK(bp_optimization_converged(r) == 1);
  StateHandle best;
  REQUIRE(bp_optimization_state(r, &best.ptr) == BP_OK);
  CHECK(bp_state_max_photon(best.ptr) == 1);
  char* json = nullptr;
  REQUIRE(bp_optimization_to_json(r, &json) == BP_OK);
  CHECK(take(json).find("\"information_nats\"") != std::string::npos);
  bp_optimization_free(r);

  c.starts = 0;
  CHECK(bp_optimize(&c, &r) == BP_ERR_CONFIG);

  c.starts = 2;
  bp_sweep* sweep = nullptr;
  REQUIRE(bp_bound_sweep(2, &c, &sweep) == BP_OK);
  REQUIRE(bp_sweep_size(sweep) == 3);
  int n = -1, converged = 0;
  double info = 0.0;
  REQUIRE(bp_sweep_entry(sweep, 2, &n, &info, &converged) == BP_OK);
  CHECK(n == 2);
  CHECK(info > 0.6);
  CHECK(bp_sweep_entry(sweep, 3, &n, &info, &converged) == BP_ERR_INDEX);
  char* csv = nullptr;
  REQUIRE(bp_sweep_to_csv(sweep, &csv) == BP_OK);
  CHECK(take(csv).rfind("N,information_nats,converged\n0,", 0) == 0);
  bp_sweep_free(sweep);
}

TEST_CASE("simulation and bounds through the C interface") {
  StateHandle s;
  REQUIRE(bp_state_sine(1, &s.ptr) == BP_OK);
  bp_record* rec = nullptr;
  REQUIRE(bp_sample_outcomes(s.ptr, 1.0, 100, 4096, 3, &rec) == BP_OK);
  CHECK(bp_record_size(rec) == 100);
  std::vector<double> outcomes(100);
  REQUIRE(bp_record_outcomes(rec, outcomes.data(), outcomes.size()) == BP_OK);
  for (double x : outcomes) CHECK((x >= 0.0 && x < 2 * M_PI));
  bp_record_free(rec);

  double chain = 0.0;
  REQUIRE(bp_chain_upper_bound(s.ptr, 2, 4096, &chain) == BP_OK);
  CHECK(std::abs(chain - 2 * (1 - std::log(2.0))) < 1e-8);

  bp_bound_report r;
  REQUIRE(bp_bound_report_compute(s.ptr, 4, 50, 4096, 1, &r) == BP_OK);
  CHECK(r.modes == 4);
  CHECK(r.has_asymptote == 1);
  CHECK(r.mc_trials == 50);
  char* json = nullptr;
  REQUIRE(bp_bound_report_to_json(&r, &json) == BP_OK);
  CHECK(take(json).find("\"chain_upper_bound\"") != std::string::npos);

  const int modes[] = {1, 4};
  char* csv = nullptr;
  REQUIRE(bp_bound_curve_csv(s.ptr, modes, 2, 20, 4096, 1, &csv) == BP_OK);
  const std::string text = take(csv);
  CHECK(text.rfind("M,mc_information,mc_stderr,chain_bound,asymptote\n1,", 0) == 0);
  const int too_many[] = {1, 1000};
  CHECK(bp_bound_curve_csv(s.ptr, too_many, 2, 20, 4096, 1, &csv) == BP_ERR_GUARD);
}
