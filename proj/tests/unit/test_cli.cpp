// Copyright 2026 The geoqm Authors
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
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "geoqm_cli/run.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "geoqm");
  std::ostringstream out, err;
  const int code = geoqm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header = nullptr) {
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("structure dumps the su(3) structure constant f_123 = 1") {
  const auto r = invoke({"structure", "--algebra", "u3", "--table", "C"});
  REQUIRE(r.code == geoqm::cli::kExitOk);
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  CHECK(header == "mu,nu,rho,value");
  bool found = false;
  for (const auto& row : rows)
    if (row[0] == 1 && row[1] == 2 && row[2] == 3) {
      found = true;
      CHECK(row[3] == doctest::Approx(1.0).epsilon(1e-12));
    }
  CHECK(found);
}

TEST_CASE("witness locus follows c^2 = -4 + 16a - 12a^2") {
  const auto r = invoke({"witness", "locus", "--steps", "100"});
  REQUIRE(r.code == geoqm::cli::kExitOk);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 100);
  for (const auto& row : rows) {
    CHECK(row[0] == row[1]);
    CHECK(std::abs(row[2] - row[3]) < 1e-6);
    CHECK(std::abs(row[3] - std::sqrt(-4 + 16 * row[0] - 12 * row[0] * row[0])) < 1e-12);
  }
}

TEST_CASE("check --all reports success as JSON") {
  const auto r = invoke({"check", "--all"});
  CHECK(r.code == geoqm::cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"].get<bool>());
  CHECK(j["tool"] == "geoqm");
  CHECK(j["invariants"].size() == 16);
  CHECK(j["config"]["seed"] == 20260101);
}

TEST_CASE("check --module restricts the suite") {
  const auto r = invoke({"check", "--module", "witness"});
  REQUIRE(r.code == geoqm::cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& inv : j["invariants"]) CHECK(inv["module"] == "witness");
  CHECK(invoke({"check", "--module", "nonsense"}).code == geoqm::cli::kExitUsage);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"--no-such-flag"}).code == geoqm::cli::kExitUsage);
  CHECK(invoke({"frobnicate"}).code == geoqm::cli::kExitUsage);
  CHECK(invoke({"structure", "--algebra", "u7"}).code == geoqm::cli::kExitUsage);
  CHECK(invoke({"--help"}).code == geoqm::cli::kExitOk);
  const auto bad = invoke({"wigner", "--n", "100"});
  CHECK(bad.code == geoqm::cli::kExitValidation);
  CHECK(bad.err.find("power of two") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs with the same seed") {
  const auto a = invoke({"--seed", "7", "tensors", "--verify-fields", "--points", "3"});
  const auto b = invoke({"--seed", "7", "tensors", "--verify-fields", "--points", "3"});
  REQUIRE(a.code == geoqm::cli::kExitOk);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
  const auto c = invoke({"--seed", "8", "tensors", "--verify-fields", "--points", "3"});
  CHECK(a.out != c.out);
}

TEST_CASE("config file supplies defaults and flags override it") {
  const std::string path = "cli_test_config.toml";
  {
    std::ofstream f(path);
    f << "seed = 99\nhbar = 0.5\n";
  }
  auto r = invoke({"--config", path, "check", "--module", "kahler"});
  REQUIRE(r.code == geoqm::cli::kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["config"]["seed"] == 99);
  CHECK(j["config"]["hbar"].get<double>() == 0.5);

  r = invoke({"--config", path, "--seed", "5", "check", "--module", "kahler"});
  REQUIRE(r.code == geoqm::cli::kExitOk);
  j = nlohmann::json::parse(r.out);
  CHECK(j["config"]["seed"] == 5);
  std::remove(path.c_str());
}

TEST_CASE("--out writes to a file instead of stdout") {
  const std::string path = "cli_test_locus.csv";
  const auto r = invoke({"--out", path, "witness", "locus", "--steps", "5"});
  REQUIRE(r.code == geoqm::cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(parse_csv(ss.str()).size() == 5);
  std::remove(path.c_str());
}

TEST_CASE("wigner of the default Gaussian is positive with unit mass") {
  const auto r = invoke({"wigner", "--n", "64"});
  REQUIRE(r.code == geoqm::cli::kExitOk);
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  CHECK(header == "q,p,W");
  REQUIRE(rows.size() == 64 * 64);
  const double dq = rows[64][0] - rows[0][0];
  const double dp = rows[1][1] - rows[0][1];
  double mass = 0.0, lowest = 0.0;
  for (const auto& row : rows) {
    mass += row[2];
    lowest = std::min(lowest, row[2]);
  }
  mass *= std::abs(dq * dp) / (2 * M_PI);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(lowest > -1e-12);
}

TEST_CASE("moyal --stationary residuals are small") {
  const auto r = invoke({"moyal", "--stationary"});
  REQUIRE(r.code == geoqm::cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["stationary"].size() == 2);
  for (const auto& s : j["stationary"]) CHECK(s["residual"].get<double>() < 1e-5);
}
