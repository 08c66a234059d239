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

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "bayesphase/circular.hpp"
#include "bayesphase/measurement.hpp"
#include "bayesphase/multimode.hpp"
#include "bayesphase/optimizer.hpp"
#include "bayesphase/state.hpp"

// JSON and CSV forms of the library's values. All numbers are written with
// 17 significant digits; +inf is written as the string "inf".
namespace bayesphase {

/// {"max_photon": N, "amplitudes": [[re, im], ...]}
std::string state_to_json(const StateVector& state);

/// Accepts a state object, or any object whose "state" member is one (so
/// optimizer results can be fed back as states). Normalizes the amplitudes.
/// Throws ErrorKind::Parse naming the offending field, or
/// ErrorKind::InvalidState for all-zero / non-finite amplitudes.
StateVector state_from_json(std::string_view text);

/// Throws ErrorKind::Io naming the path when the file cannot be read.
StateVector load_state_file(const std::filesystem::path& path);

std::string record_to_json(const MeasurementRecord& record);

/// `bits` converts entropy and information to bits; Fisher information and
/// moments are unit-free and unchanged.
std::string information_report_to_json(const InformationReport& report, bool bits = false);

std::string optimization_result_to_json(const OptimizationResult& result);

/// Header "N,information_nats,converged".
std::string sweep_to_csv(std::span<const SweepEntry> entries);

std::string bound_report_to_json(const BoundReport& report);

/// Header "M,mc_information,mc_stderr,chain_bound,asymptote"; the asymptote
/// column is empty when undefined.
std::string bound_curve_to_csv(std::span<const BoundReport> reports);

/// %.17g
std::string format_double(double x);

}  // namespace bayesphase
