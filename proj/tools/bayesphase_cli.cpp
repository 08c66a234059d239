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

// Command-line driver over the bayesphase C interface.
//
//   bayesphase info      --state FILE [--grid G] [--bits] [--out FILE]
//   bayesphase optimize  --max-photon N [--grid G] [--starts S] [--seed K] [--out FILE]
//   bayesphase sweep     --n-max N [--grid G] [--starts S] [--seed K] [--out FILE]
//   bayesphase simulate  --state FILE --true-phase RAD --shots K [--seed K] [--out FILE]
//   bayesphase bounds    --state FILE --modes-list 1,4,16 [--trials T] [--seed K] [--out FILE]
//
// Exit codes: 0 success, 2 input error, 3 output produced but unconverged.

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

#include "bayesphase/bayesphase.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnconverged = 3;

struct InputError {
  std::string message;
};

struct CString {
  char* ptr = nullptr;
  ~CString() { bp_string_free(ptr); }
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using StatePtr = std::unique_ptr<bp_state, Deleter<bp_state, bp_state_free>>;

// Throws InputError (or exits 1 on internal failures) on a non-OK status.
void check(bp_status status, const std::string& context) {
  if (status == BP_OK) return;
  std::string message = context + ": " + bp_last_error();
  if (status == BP_ERR_GUARD) {
    message += " (the number of modes may not exceed grid/16; pass a larger --grid)";
  }
  if (status == BP_ERR_INTERNAL) {
    std::cerr << "bayesphase: internal error: " << message << "\n";
    std::exit(kExitInternal);
  }
  throw InputError{message};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError{"cannot open output file '" + out_path + "'"};
  out << text;
  if (!out.flush()) throw InputError{"failed writing '" + out_path + "'"};
}

StatePtr load_state(const std::string& path) {
  bp_state* raw = nullptr;
  check(bp_state_load(path.c_str(), &raw), "--state");
  return StatePtr(raw);
}

double parse_radians(const std::string& text) {
  if (text.find("deg") != std::string::npos || text.find("\xC2\xB0") != std::string::npos) {
    throw InputError{"--true-phase: angles are radians only; degrees are not accepted ('" +
                     text + "')"};
  }
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw InputError{"--true-phase: expected a finite number of radians, got '" + text + "'"};
  }
  return value;
}

struct OptimizeFlags {
  int max_photon = -1;
  int n_max = -1;
  std::uint32_t grid = 4096;
  int starts = 16;
  std::uint64_t seed = 0;
  double step_init = 0.1;
  double tol = 1e-10;
  int max_iters = 10000;
  std::string out;

  bp_optimizer_config config() const {
    bp_optimizer_config c;
    bp_optimizer_config_init(&c);
    c.max_photon = max_photon;
    c.grid_size = grid;
    c.starts = starts;
    c.seed = seed;
    c.step_init = step_init;
    c.convergence_tol = tol;
    c.max_iters = max_iters;
    return c;
  }
};

void add_optimizer_flags(CLI::App* cmd, OptimizeFlags& f) {
  cmd->add_option("--grid", f.grid, "Quadrature grid size (power of two >= 64)")
      ->capture_default_str();
  cmd->add_option("--starts", f.starts, "Number of random starts")->capture_default_str();
  cmd->add_option("--seed", f.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--step-init", f.step_init, "Initial ascent step")->capture_default_str();
  cmd->add_option("--tol", f.tol, "Convergence tolerance on objective gain")
      ->capture_default_str();
  cmd->add_option("--max-iters", f.max_iters, "Iteration cap per start")->capture_default_str();
  cmd->add_option("--out", f.out, "Output file (default: stdout)");
}

int run_info(const std::string& state_path, std::uint32_t grid, bool bits,
             const std::string& out) {
  const StatePtr state = load_state(state_path);
  bp_info_report report;
  check(bp_information_report(state.get(), grid, &report), "info");
  CString json;
  check(bp_information_report_to_json(&report, bits ? 1 : 0, &json.ptr), "info");
  emit(json.ptr, out);
  return kExitOk;
}

int run_optimize(const OptimizeFlags& f) {
  const bp_optimizer_config config = f.config();
  bp_optimization* raw = nullptr;
  check(bp_optimize(&config, &raw), "optimize");
  std::unique_ptr<bp_optimization, Deleter<bp_optimization, bp_optimization_free>> result(raw);
  CString json;
  check(bp_optimization_to_json(result.get(), &json.ptr), "optimize");
  emit(json.ptr, f.out);
  if (!bp_optimization_converged(result.get())) {
    std::cerr << "bayesphase: best start did not converge within --max-iters\n";
    return kExitUnconverged;
  }
  return kExitOk;
}

int run_sweep(const OptimizeFlags& f) {
  const bp_optimizer_config config = f.config();
  bp_sweep* raw = nullptr;
  check(bp_bound_sweep(f.n_max, &config, &raw), "sweep");
  std::unique_ptr<bp_sweep, Deleter<bp_sweep, bp_sweep_free>> sweep(raw);
  CString csv;
  check(bp_sweep_to_csv(sweep.get(), &csv.ptr), "sweep");
  emit(csv.ptr, f.out);
  bool all_converged = true;
  for (std::size_t i = 0; i < bp_sweep_size(sweep.get()); ++i) {
    int converged = 0;
    check(bp_sweep_entry(sweep.get(), i, nullptr, nullptr, &converged), "sweep");
    if (!converged) {
      all_converged = false;
      std::cerr << "bayesphase: N = " << i << " did not converge\n";
    }
  }
  return all_converged ? kExitOk : kExitUnconverged;
}

int run_simulate(const std::string& state_path, const std::string& phase_text, long long shots,
                 std::uint64_t seed, std::uint32_t grid, const std::string& out) {
  const double phase = parse_radians(phase_text);
  if (shots < 1) throw InputError{"--shots must be >= 1"};
  const StatePtr state = load_state(state_path);
  bp_record* raw = nullptr;
  check(bp_sample_outcomes(state.get(), phase, static_cast<std::size_t>(shots), grid, seed, &raw),
        "simulate");
  std::unique_ptr<bp_record, Deleter<bp_record, bp_record_free>> record(raw);
  CString json;
  check(bp_record_to_json(record.get(), &json.ptr), "simulate");
  emit(json.ptr, out);
  return kExitOk;
}

int run_bounds(const std::string& state_path, const std::vector<int>& modes, int trials,
               std::uint64_t seed, std::uint32_t grid, const std::string& out) {
  if (modes.empty()) throw InputError{"--modes-list must name at least one M"};
  for (int m : modes) check(bp_check_mode_guard(m, grid), "--modes-list");
  const StatePtr state = load_state(state_path);
  CString csv;
  check(bp_bound_curve_csv(state.get(), modes.data(), modes.size(), trials, grid, seed,
                           &csv.ptr),
        "bounds");
  emit(csv.ptr, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian canonical phase measurement: information, optimal states, bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bp_version()));

  std::string state_path;
  std::string out;
  std::uint32_t grid = 4096;
  std::uint64_t seed = 0;

  bool bits = false;
  auto* info = app.add_subcommand("info", "Information report for a state");
  info->add_option("--state", state_path, "State JSON file")->required();
  info->add_option("--grid", grid, "Quadrature grid size")->capture_default_str();
  info->add_flag("--bits", bits, "Report entropy and information in bits");
  info->add_option("--out", out, "Output file (default: stdout)");

  OptimizeFlags opt;
  auto* optimize = app.add_subcommand("optimize", "Maximize single-shot information for cutoff N");
  optimize->add_option("--max-photon", opt.max_photon, "Photon-number cutoff N")->required();
  add_optimizer_flags(optimize, opt);

  auto* sweep = app.add_subcommand("sweep", "Single-mode bound I_opt(N) for N = 0..n-max (CSV)");
  sweep->add_option("--n-max", opt.n_max, "Largest cutoff")->required();
  add_optimizer_flags(sweep, opt);

  std::string phase_text;
  long long shots = 0;
  auto* simulate = app.add_subcommand("simulate", "Sample canonical phase outcomes (JSON)");
  simulate->add_option("--state", state_path, "State JSON file")->required();
  simulate->add_option("--true-phase", phase_text, "True phase in radians")->required();
  simulate->add_option("--shots", shots, "Number of outcomes")->required();
  simulate->add_option("--seed", seed, "RNG seed")->capture_default_str();
  simulate->add_option("--grid", grid, "Sampling grid size")->capture_default_str();
  simulate->add_option("--out", out, "Output file (default: stdout)");

  std::vector<int> modes;
  int trials = 500;
  auto* bounds = app.add_subcommand("bounds", "Multi-mode information curve (CSV)");
  bounds->add_option("--state", state_path, "State JSON file")->required();
  bounds->add_option("--modes-list", modes, "Comma-separated list of M")
      ->required()
      ->delimiter(',');
  bounds->add_option("--trials", trials, "Monte Carlo trials per M")->capture_default_str();
  bounds->add_option("--seed", seed, "RNG seed")->capture_default_str();
  bounds->add_option("--grid", grid, "Posterior grid size")->capture_default_str();
  bounds->add_option("--out", out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "bayesphase: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  try {
    if (*info) return run_info(state_path, grid, bits, out);
    if (*optimize) return run_optimize(opt);
    if (*sweep) return run_sweep(opt);
    if (*simulate) return run_simulate(state_path, phase_text, shots, seed, grid, out);
    if (*bounds) return run_bounds(state_path, modes, trials, seed, grid, out);
  } catch (const InputError& e) {
    std::cerr << "bayesphase: " << e.message << "\n";
    return kExitInput;
  }
  return kExitInput;
}
