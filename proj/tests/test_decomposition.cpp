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

#include <algorithm>

#include "spindla/decomposition.hpp"

using namespace spindla;

namespace {

std::vector<int> block_dims(const std::vector<InvariantSubspace>& subs) {
  std::vector<int> out;
  for (const auto& s : subs) out.push_back(s.m);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST_CASE("invariant subspaces tile the Hilbert space") {
  for (auto [nc, np] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
    RegisterSpec reg(nc, np);
    auto subs = invariant_subspaces(reg);
    long total = 0;
    for (const auto& s : subs) {
      CHECK(s.basis.cols() == s.m);
      CHECK((s.basis.adjoint() * s.basis -
             Eigen::MatrixXcd::Identity(s.m, s.m))
                .norm() < 1e-10);
      total += s.m;
    }
    CHECK(total == (1L << reg.n()));
  }
}

TEST_CASE("block multiplicities for the documented examples") {
  CHECK(block_dims(invariant_subspaces(RegisterSpec(1, 3))) ==
        std::vector<int>{8, 4, 4});
  CHECK(block_dims(invariant_subspaces(RegisterSpec(2, 2))) ==
        std::vector<int>{9, 3, 3, 1});
}

TEST_CASE("largest block grows linearly in np") {
  for (int np = 2; np <= 4; ++np) {
    auto s1 = block_dims(invariant_subspaces(RegisterSpec(1, np)));
    CHECK(s1.front() == 2 * (np + 1));
    if (2 + np <= 6) {
      auto s2 = block_dims(invariant_subspaces(RegisterSpec(2, np)));
      CHECK(s2.front() == 3 * (np + 1));
    }
  }
}

TEST_CASE("subspaces do not depend on the symmetrizer seed") {
  for (uint64_t seed : {1ull, 7ull, 42ull}) {
    auto subs = invariant_subspaces(RegisterSpec(2, 2), seed);
    CHECK(block_dims(subs) == std::vector<int>{9, 3, 3, 1});
  }
}

TEST_CASE("restrict_to reports leakage and rejects asymmetric operators") {
  RegisterSpec reg(1, 2);
  auto subs = invariant_subspaces(reg);
  // The P-region Heisenberg invariant is scalar on each block (Schur): the
  // P factor of every block is one irreducible subspace.
  Operator j = cplx{0, 1} * build_J(Region::P, reg);
  for (const auto& s : subs) {
    double leak = -1;
    Eigen::MatrixXcd block = restrict_to(j, s, &leak);
    CHECK(leak < 1e-10);
    cplx lambda = block.trace() / static_cast<double>(s.m);
    CHECK((block - lambda * Eigen::MatrixXcd::Identity(s.m, s.m)).norm() <
          1e-8);
  }
  Operator local = Operator::from_word(reg, PauliWord::from_string("IXI"),
                                       cplx{0, 1});
  CHECK_THROWS_AS(restrict_to(local, subs.front()), ValidationError);
}

TEST_CASE("analyze certifies the nc=1 cases") {
  for (int np : {1, 2, 3}) {
    ControllabilityReport r = analyze(ModelParams{RegisterSpec(1, np)});
    CHECK(r.subspace_controllable);
    for (const BlockReport& b : r.blocks) {
      CHECK(b.controllable());
      CHECK(b.leakage < 1e-8);
      if (b.m > 1) {
        CHECK(b.verdict == "su");
        CHECK(b.restricted_dim == b.m * b.m - 1);
        CHECK(!b.has_identity);
      }
    }
  }
}

TEST_CASE("analyze finds the deficient nc=2 blocks") {
  ControllabilityReport r = analyze(ModelParams{RegisterSpec(2, 2)});
  CHECK(r.dla_dim == 86);
  CHECK(!r.subspace_controllable);
  std::map<std::string, int> verdicts;
  for (const BlockReport& b : r.blocks) ++verdicts[b.verdict];
  CHECK(verdicts == std::map<std::string, int>{
                        {"su", 1}, {"deficient", 2}, {"trivial", 1}});
  for (const BlockReport& b : r.blocks) {
    if (b.verdict == "deficient") {
      CHECK(b.m == 3);
      CHECK(b.restricted_dim == 3);
    }
  }
}

TEST_CASE("degenerate gyromagnetic ratio is flagged") {
  ControllabilityReport r =
      analyze(ModelParams{RegisterSpec(1, 1), 1.5, -1.5});
  CHECK(r.outside_assumption);
  CHECK(!analyze(ModelParams{RegisterSpec(1, 1)}).outside_assumption);
}

TEST_CASE("JSON report has the fixed schema") {
  ControllabilityReport r = analyze(ModelParams{RegisterSpec(1, 2)});
  nlohmann::ordered_json j = report_to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"nc", "np", "gamma", "dla_dim",
                                         "blocks", "subspace_controllable"});
  CHECK(j["nc"] == 1);
  CHECK(j["np"] == 2);
  CHECK(j["gamma"] == nlohmann::ordered_json::array({1.0, 2.0}));
  CHECK(j["dla_dim"] == 38);
  CHECK(j["subspace_controllable"] == true);
  const auto& b0 = j["blocks"][0];
  std::vector<std::string> bkeys;
  for (auto it = b0.begin(); it != b0.end(); ++it) bkeys.push_back(it.key());
  CHECK(bkeys == std::vector<std::string>{"shape_c", "idx_c", "shape_p",
                                          "idx_p", "m", "restricted_dim",
                                          "verdict", "leakage"});
  // Round-trips through a strict parse.
  CHECK(nlohmann::json::parse(j.dump()) == nlohmann::json::parse(j.dump(2)));
  // Degenerate gamma adds the flag key at the end.
  nlohmann::ordered_json jd = report_to_json(
      analyze(ModelParams{RegisterSpec(1, 1), 2.0, 2.0}));
  CHECK(jd.contains("outside_assumption"));
  CHECK(jd["outside_assumption"] == true);
}

TEST_CASE("block verdict pattern is seed independent") {
  auto pattern = [](uint64_t seed) {
    std::vector<std::string> v;
    for (const BlockReport& b :
         analyze(ModelParams{RegisterSpec(2, 2)}, seed).blocks) {
      v.push_back(b.shape_c.str() + b.shape_p.str() + ":" + b.verdict);
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(pattern(1) == pattern(42));
  CHECK(pattern(7) == pattern(42));
}
