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

#include "bayesphase/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bayesphase/errors.hpp"

namespace bayesphase {

namespace {

// Hand-rolled emitter: nlohmann::json prints shortest round-trip digits,
// while the output contract is a fixed 17 significant digits.
std::string number(double x) {
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  if (std::isnan(x)) return "\"nan\"";
  return format_double(x);
}

std::string boolean(bool b) { return b ? "true" : "false"; }

class ObjectWriter {
 public:
  explicit ObjectWriter(int indent = 2) : indent_(indent) {}

  ObjectWriter& field(std::string_view key, std::string_view raw_value) {
    out_ += first_ ? "{\n" : ",\n";
    first_ = false;
    out_.append(static_cast<std::size_t>(indent_), ' ');
    out_ += '"';
    out_ += key;
    out_ += "\": ";
    out_ += raw_value;
    return *this;
  }

  std::string finish() {
    if (first_) return "{}";
    out_ += '\n';
    out_.append(static_cast<std::size_t>(indent_ - 2), ' ');
    out_ += '}';
    return out_;
  }

 private:
  int indent_;
  bool first_ = true;
  std::string out_;
};

template <typename Range, typename Fn>
std::string array(const Range& items, Fn&& fmt) {
  std::string out = "[";
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += ", ";
    first = false;
    out += fmt(item);
  }
  return out + "]";
}

std::string state_object(const StateVector& state, int indent) {
  return ObjectWriter(indent)
      .field("max_photon", std::to_string(state.max_photon()))
      .field("amplitudes", array(state.amplitudes(),
                                 [](const Amplitude& c) {
                                   return "[" + number(c.real()) + ", " +
                                          number(c.imag()) + "]";
                                 }))
      .finish();
}

[[noreturn]] void parse_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::Parse, "state field '" + field + "': " + what);
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string state_to_json(const StateVector& state) { return state_object(state, 2) + "\n"; }

StateVector state_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_error("<root>", "expected an object");
  if (doc.contains("state") && doc["state"].is_object()) doc = doc["state"];

  if (!doc.contains("amplitudes")) parse_error("amplitudes", "missing");
  const auto& amps = doc["amplitudes"];
  if (!amps.is_array() || amps.empty()) parse_error("amplitudes", "expected a non-empty array");

  std::vector<Amplitude> raw;
  raw.reserve(amps.size());
  for (std::size_t n = 0; n < amps.size(); ++n) {
    const auto& pair = amps[n];
    const std::string field = "amplitudes[" + std::to_string(n) + "]";
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      parse_error(field, "expected [re, im] with numeric entries");
    }
    raw.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }

  if (!doc.contains("max_photon")) parse_error("max_photon", "missing");
  const auto& n_field = doc["max_photon"];
  if (!n_field.is_number_integer() || n_field.get<long long>() < 0) {
    parse_error("max_photon", "expected a nonnegative integer");
  }
  if (static_cast<std::size_t>(n_field.get<long long>()) + 1 != raw.size()) {
    parse_error("max_photon", "is " + std::to_string(n_field.get<long long>()) + " but " +
                                  std::to_string(raw.size()) + " amplitudes were given");
  }
  return normalize(raw);
}

StateVector load_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read state file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return state_from_json(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

std::string record_to_json(const MeasurementRecord& record) {
  return ObjectWriter()
             .field("true_phase", number(record.true_phase))
             .field("outcomes", array(record.outcomes, number))
             .field("seed", std::to_string(record.seed))
             .finish() +
         "\n";
}

std::string information_report_to_json(const InformationReport& r, bool bits) {
  const double scale = bits ? 1.0 / std::log(2.0) : 1.0;
  return ObjectWriter()
             .field("units", bits ? "\"bits\"" : "\"nats\"")
             .field("entropy", number(r.entropy * scale))
             .field("mutual_information", number(r.mutual_information * scale))
             .field("fisher_information", number(r.fisher_information))
             .field("mean_resultant_length", number(r.mean_resultant_length))
             .field("mean_direction", number(r.mean_direction))
             .field("circular_variance", number(r.circular_variance))
             .field("holevo_variance", number(r.holevo_variance))
             .finish() +
         "\n";
}

std::string optimization_result_to_json(const OptimizationResult& r) {
  return ObjectWriter()
             .field("max_photon", std::to_string(r.best_state.max_photon()))
             .field("information_nats", number(r.best_information))
             .field("state", state_object(r.best_state, 4))
             .field("per_start", array(r.per_start_values, number))
             .field("iterations", array(r.iterations_used,
                                        [](int i) { return std::to_string(i); }))
             .field("best_start", std::to_string(r.best_start))
             .field("converged", boolean(r.converged))
             .finish() +
         "\n";
}

std::string sweep_to_csv(std::span<const SweepEntry> entries) {
  std::string out = "N,information_nats,converged\n";
  for (const auto& e : entries) {
    out += std::to_string(e.max_photon) + "," + format_double(e.information) + "," +
           boolean(e.converged) + "\n";
  }
  return out;
}

std::string bound_report_to_json(const BoundReport& r) {
  return ObjectWriter()
             .field("modes", std::to_string(r.modes))
             .field("mc_information", number(r.mc_information))
             .field("mc_stderr", number(r.mc_stderr))
             .field("mc_trials", std::to_string(r.mc_trials))
             .field("chain_upper_bound", number(r.chain_upper_bound))
             .field("asymptotic_value",
                    r.asymptotic_value ? number(*r.asymptotic_value) : "null")
             .field("fisher", number(r.fisher))
             .field("single_info", number(r.single_info))
             .finish() +
         "\n";
}

std::string bound_curve_to_csv(std::span<const BoundReport> reports) {
  std::string out = "M,mc_information,mc_stderr,chain_bound,asymptote\n";
  for (const auto& r : reports) {
    out += std::to_string(r.modes) + "," + format_double(r.mc_information) + "," +
           format_double(r.mc_stderr) + "," + format_double(r.chain_upper_bound) + "," +
           (r.asymptotic_value ? format_double(*r.asymptotic_value) : "") + "\n";
  }
  return out;
}

}  // namespace bayesphase
