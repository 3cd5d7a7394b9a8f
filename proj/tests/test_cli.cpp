// Copyright 2026 The spindla authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "spindla/cli.hpp"

using namespace spindla;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string("/tmp/spindla_cli_") + name;
  std::ofstream f(path);
  f << text;
  return path;
}

}  // namespace

TEST_CASE("analyze prints a report and encodes the verdict in the exit code") {
  CliRun ok = run({"analyze", "--nc", "1", "--np", "3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("dla_dim=78") != std::string::npos);
  CHECK(ok.out.find("subspace_controllable: yes") != std::string::npos);
  CliRun neg = run({"analyze", "--nc", "2", "--np", "2"});
  CHECK(neg.code == 1);
  CHECK(neg.out.find("deficient") != std::string::npos);
}

TEST_CASE("analyze --json emits the fixed schema") {
  CliRun r = run({"analyze", "--nc", "2", "--np", "2", "--json"});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dla_dim"] == 86);
  CHECK(j["blocks"].size() == 4);
  CHECK(j["subspace_controllable"] == false);
  CliRun small = run({"analyze", "--nc", "1", "--np", "1", "--json"});
  CHECK(small.code == 0);
  auto js = nlohmann::json::parse(small.out);
  CHECK(js["dla_dim"] == 15);
  CHECK(js["blocks"][0]["verdict"] == "su");
  CHECK(js["blocks"][0]["m"] == 4);
}

TEST_CASE("analyze rejects invalid sizes with a usage error") {
  CHECK(run({"analyze", "--nc", "3", "--np", "2"}).code == 2);
  CHECK(run({"analyze", "--nc", "1", "--np", "0"}).code == 2);
  CHECK(run({"analyze", "--nc", "2", "--np", "9"}).code == 2);
}

TEST_CASE("verify runs the selected suite") {
  CliRun r = run({"verify", "--suite", "identities", "--max-n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("operator_identities") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CliRun j = run({"verify", "--suite", "identities", "--max-n", "3", "--json"});
  CHECK(j.code == 0);
  auto arr = nlohmann::json::parse(j.out);
  REQUIRE(arr.is_array());
  for (const auto& item : arr) {
    CHECK(item["passed"] == true);
    CHECK(item["residual"].get<double>() < 1e-10);
  }
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("dims prints the table with the completeness row") {
  CliRun r = run({"dims", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(2,1)") != std::string::npos);
  CHECK(r.out.find("largest = 4") != std::string::npos);
  CHECK(r.out.find("= 2^n") != std::string::npos);
  CliRun j = run({"dims", "--n", "10", "--json"});
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["largest"] == 11);
  CHECK(parsed["complete"] == true);
  bool found = false;
  for (const auto& row : parsed["rows"]) {
    if (row["shape"] == "(7,3)") {
      CHECK(row["dim"] == 5);
      found = true;
    }
  }
  CHECK(found);
  CHECK(run({"dims"}).code == 2);  // --n is required
}

TEST_CASE("closure reads operator files") {
  std::string x = write_temp("x.txt", "0 1 XI\n");
  std::string y = write_temp("y.txt", "0 1 YI\n");
  CliRun r = run({"closure", "--input", x, "--input", y});
  CHECK(r.code == 0);
  CHECK(r.out.find("dim: 3") != std::string::npos);
  CHECK(r.out.find("closed: yes") != std::string::npos);
  std::string bad = write_temp("bad.txt", "0 1 XQ\n");
  CliRun rb = run({"closure", "--input", bad});
  CHECK(rb.code == 2);
  CHECK(rb.err.find("line 1") != std::string::npos);
  CHECK(run({"closure", "--input", "/tmp/spindla_cli_missing.txt"}).code == 2);
  CHECK(run({"closure"}).code == 2);
  std::remove(x.c_str());
  std::remove(y.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"analyze", "--bogus-flag"}).code == 2);
  CliRun h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("analyze") != std::string::npos);
}
