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

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracle.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class Workdir {
 public:
  Workdir() {
    dir_ = fs::temp_directory_path() / ("bayesphase-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~Workdir() { fs::remove_all(dir_); }
  fs::path operator/(const std::string& name) const { return dir_ / name; }

  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name, std::ios::binary) << text;
    return dir_ / name;
  }

  Result run(const std::string& args) const {
    const auto out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
    const std::string cmd = std::string(BAYESPHASE_CLI) + " " + args + " >" + out.string() +
                            " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
  }

 private:
  fs::path dir_;
};

const char* kTwoLevel = R"({"max_photon": 1, "amplitudes": [[1, 0], [1, 0]]})";
const char* kFock = R"({"max_photon": 4, "amplitudes": [[0, 0], [0, 0], [1, 0], [0, 0], [0, 0]]})";

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("info") {
  Workdir w;
  const auto two = w.write("two.json", kTwoLevel);
  auto r = w.run("info --state " + two.string());
  REQUIRE(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(std::abs(doc["mutual_information"].get<double>() - 0.3068528) < 1e-6);
  CHECK(std::abs(doc["fisher_information"].get<double>() - 1.0) < 1e-6);

  r = w.run("info --state " + w.write("fock.json", kFock).string());
  REQUIRE(r.exit_code == 0);
  doc = nlohmann::json::parse(r.out);
  CHECK(std::abs(doc["mutual_information"].get<double>()) < 1e-12);
  CHECK(doc["holevo_variance"] == "inf");

  r = w.run("info --state " + two.string() + " --bits --out " + (w / "bits.json").string());
  REQUIRE(r.exit_code == 0);
  doc = nlohmann::json::parse(slurp(w / "bits.json"));
  CHECK(doc["units"] == "bits");
  CHECK(std::abs(doc["mutual_information"].get<double>() - 0.3068528 / std::log(2.0)) < 1e-6);
}

TEST_CASE("input errors exit with status 2") {
  Workdir w;
  const auto missing = (w / "missing.json").string();
  auto r = w.run("info --state " + missing);
  CHECK(r.exit_code == 2);
  CHECK(r.err.find(missing) != std::string::npos);

  r = w.run("info --state " + w.write("zero.json", R"({"max_photon": 0, "amplitudes": [[0, 0]]})").string());
  CHECK(r.exit_code == 2);
  r = w.run("info --state " + w.write("bad.json", R"({"max_photon": 3, "amplitudes": [[1, 0]]})").string());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("max_photon") != std::string::npos);
  r = w.run("info --state " + w.write("junk.json", "not json at all").string());
  CHECK(r.exit_code == 2);

  r = w.run("info --state x.json --frobnicate");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  r = w.run("");
  CHECK(r.exit_code == 2);
  r = w.run("optimize --max-photon -1");
  CHECK(r.exit_code == 2);
  r = w.run("optimize --max-photon 1 --grid 100");
  CHECK(r.exit_code == 2);
}

TEST_CASE("optimize") {
  Workdir w;
  auto r = w.run("optimize --max-photon 1 --seed 4");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(std::abs(doc["information_nats"].get<double>() - 0.306853) < 1e-6);
  CHECK(doc["converged"] == true);

  r = w.run("optimize --max-photon 0");
  REQUIRE(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["information_nats"].get<double>() == 0.0);

  // Byte-identical output for a fixed seed.
  const auto a = w / "a.json", b = w / "b.json";
  REQUIRE(w.run("optimize --max-photon 3 --seed 11 --out " + a.string()).exit_code == 0);
  REQUIRE(w.run("optimize --max-photon 3 --seed 11 --out " + b.string()).exit_code == 0);
  CHECK(slurp(a) == slurp(b));

  // The written result feeds back into --state unchanged.
  r = w.run("info --state " + a.string());
  REQUIRE(r.exit_code == 0);
  CHECK(std::abs(nlohmann::json::parse(r.out)["mutual_information"].get<double>() -
                 nlohmann::json::parse(slurp(a))["information_nats"].get<double>()) < 1e-12);

  // Unconverged: result still written, exit 3.
  const auto c = w / "c.json";
  r = w.run("optimize --max-photon 5 --max-iters 1 --out " + c.string());
  CHECK(r.exit_code == 3);
  CHECK(nlohmann::json::parse(slurp(c))["converged"] == false);
}

TEST_CASE("sweep") {
  Workdir w;
  const auto out = w / "sweep.csv";
  const auto r = w.run("sweep --n-max 4 --starts 4 --seed 2 --out " + out.string());
  REQUIRE(r.exit_code == 0);
  const auto rows = csv_rows(slurp(out));
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == std::vector<std::string>{"N", "information_nats", "converged"});
  double previous = -1.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::stoi(rows[i][0]) == static_cast<int>(i - 1));
    const double v = std::stod(rows[i][1]);
    CHECK(v >= previous - 1e-8);
    previous = v;
  }
  REQUIRE(w.run("sweep --n-max 4 --starts 4 --seed 2 --out " + (w / "again.csv").string()).exit_code == 0);
  CHECK(slurp(out) == slurp(w / "again.csv"));
}

TEST_CASE("simulate") {
  Workdir w;
  const auto fock = w.write("fock.json", kFock);
  const auto out = w / "sim.json";
  auto r = w.run("simulate --state " + fock.string() +
                 " --true-phase 0 --shots 100000 --seed 5 --out " + out.string());
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc["seed"] == 5);
  const auto outcomes = doc["outcomes"].get<std::vector<double>>();
  REQUIRE(outcomes.size() == 100000);
  CHECK(oracle::ks_uniform(outcomes) < 1.95 / std::sqrt(1e5));

  REQUIRE(w.run("simulate --state " + fock.string() +
                " --true-phase 0 --shots 100000 --seed 5 --out " + (w / "again.json").string())
              .exit_code == 0);
  CHECK(slurp(out) == slurp(w / "again.json"));

  r = w.run("simulate --state " + fock.string() + " --true-phase 90deg --shots 10");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("radians") != std::string::npos);
  r = w.run("simulate --state " + fock.string() + " --true-phase abc --shots 10");
  CHECK(r.exit_code == 2);
  r = w.run("simulate --state " + fock.string() + " --true-phase 1 --shots 0");
  CHECK(r.exit_code == 2);
}

TEST_CASE("bounds") {
  Workdir w;
  const auto two = w.write("two.json", kTwoLevel);
  const auto out = w / "bounds.csv";
  auto r = w.run("bounds --state " + two.string() +
                 " --modes-list 1,4,16,64 --trials 200 --seed 8 --out " + out.string());
  REQUIRE(r.exit_code == 0);
  const auto rows = csv_rows(slurp(out));
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::vector<std::string>{"M", "mc_information", "mc_stderr", "chain_bound",
                                            "asymptote"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 5);
    const double mc = std::stod(rows[i][1]), se = std::stod(rows[i][2]),
                 chain = std::stod(rows[i][3]);
    CHECK(mc <= chain + 3 * se);
    CHECK_FALSE(rows[i][4].empty());
  }
  REQUIRE(w.run("bounds --state " + two.string() +
                " --modes-list 1,4,16,64 --trials 200 --seed 8 --out " + (w / "again.csv").string())
              .exit_code == 0);
  CHECK(slurp(out) == slurp(w / "again.csv"));

  r = w.run("bounds --state " + two.string() + " --modes-list 4,300 --trials 10");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("grid") != std::string::npos);

  r = w.run("bounds --state " + w.write("fock.json", kFock).string() +
            " --modes-list 2 --trials 10");
  REQUIRE(r.exit_code == 0);
  const auto fock_rows = csv_rows(r.out);
  REQUIRE(fock_rows.size() == 2);
  CHECK(fock_rows[1][4].empty());
}
