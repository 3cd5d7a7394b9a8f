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

#include <map>
#include <numeric>

#include "spindla/dense.hpp"
#include "spindla/symgroup.hpp"

using namespace spindla;

namespace {

// Partition counts by the standard two-variable recurrence, as an
// implementation-independent oracle.
long partition_count(int n, int largest) {
  if (n == 0) return 1;
  if (n < 0 || largest == 0) return 0;
  return partition_count(n - largest, largest) + partition_count(n, largest - 1);
}

}  // namespace

TEST_CASE("partition enumeration matches the counting recurrence") {
  for (int n = 1; n <= 9; ++n) {
    auto parts = partitions(n);
    CHECK(static_cast<long>(parts.size()) == partition_count(n, n));
    for (const Partition& p : parts) {
      CHECK(p.valid());
      CHECK(p.n() == n);
    }
    // Reverse-lexicographic: (n) first, all-ones last.
    CHECK(parts.front().rows == std::vector<int>{n});
    CHECK(parts.back().rows == std::vector<int>(n, 1));
  }
}

TEST_CASE("standard tableaux count equals n!/hook product") {
  for (int n = 1; n <= 6; ++n) {
    long total_sq = 0;
    for (const Partition& shape : partitions(n)) {
      auto tabs = standard_tableaux(shape);
      CHECK(static_cast<long>(tabs.size()) == tableau_count(shape));
      CHECK(tableau_count(shape) == factorial(n) / hook_length(shape));
      total_sq += tableau_count(shape) * tableau_count(shape);
    }
    // Sum of squares of irrep dimensions is the group order.
    CHECK(total_sq == factorial(n));
  }
}

TEST_CASE("qubit subspace dimensions") {
  CHECK(subspace_dim(Partition{3}) == 4);
  CHECK(subspace_dim(Partition{2, 1}) == 2);
  CHECK(subspace_dim(Partition{1, 1, 1}) == 0);
  CHECK(subspace_dim(Partition{7, 3}) == 5);  // n - 2k + 1 with n=10, k=3
  for (int n = 2; n <= 8; ++n) {
    long total = 0;
    int largest = 0;
    for (const Partition& shape : partitions(n)) {
      total += tableau_count(shape) * subspace_dim(shape);
      largest = std::max(largest, subspace_dim(shape));
    }
    CHECK(total == (1L << n));
    CHECK(largest == n + 1);
  }
}

TEST_CASE("characters satisfy first orthogonality") {
  for (int n = 2; n <= 5; ++n) {
    auto parts = partitions(n);
    // Count elements per cycle type.
    std::map<Partition, long> class_size;
    for (const auto& perm : all_permutations(n)) ++class_size[cycle_type(perm)];
    for (const Partition& a : parts) {
      for (const Partition& b : parts) {
        long s = 0;
        for (const auto& [type, size] : class_size) {
          s += size * character(a, type) * character(b, type);
        }
        CHECK(s == (a == b ? factorial(n) : 0));
      }
    }
  }
}

TEST_CASE("perm_unitary conjugation matches permute() on words") {
  RegisterSpec reg(1, 2);
  Operator a = Operator::from_word(reg, PauliWord::from_string("XYZ"));
  for (const auto& perm : all_permutations(3)) {
    Eigen::MatrixXd u = perm_unitary(perm, 3);
    CHECK((u * u.transpose() - Eigen::MatrixXd::Identity(8, 8)).norm() <
          1e-12);
    Eigen::MatrixXcd lhs = u * to_matrix(a) * u.transpose();
    // permute() only moves letters within a region, so compare on the
    // permutations fixing site 0 (the C site of the (1,2) register).
    std::vector<int> pc = {0};
    std::vector<int> pp = {perm[1] - 1, perm[2] - 1};
    if (perm[0] == 0) {
      Operator b = permute(a, pc, pp);
      CHECK((lhs - to_matrix(b)).norm() < 1e-12);
    }
  }
}

TEST_CASE("symmetrizers satisfy the four axioms, n = 2..5") {
  for (int n = 2; n <= 5; ++n) {
    auto projs = gys_projectors(n, 42);
    int dim = 1 << n;
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
    double worst = 0;
    for (std::size_t i = 0; i < projs.size(); ++i) {
      const auto& pi = projs[i].matrix;
      sum += pi;
      worst = std::max(worst, (pi - pi.adjoint()).norm());
      worst = std::max(worst, (pi * pi - pi).norm());
      CHECK(std::lround(pi.trace().real()) == projs[i].rank);
      for (std::size_t j = i + 1; j < projs.size(); ++j) {
        worst = std::max(worst, (pi * projs[j].matrix).norm());
      }
    }
    worst = std::max(worst,
                     (sum - Eigen::MatrixXcd::Identity(dim, dim)).norm());
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("symmetrizer ranks follow the dimension formula") {
  std::map<int, std::vector<int>> expected = {
      {2, {3, 1}}, {3, {4, 2, 2}}, {4, {5, 3, 3, 3, 1, 1}}};
  for (const auto& [n, ranks] : expected) {
    auto projs = gys_projectors(n, 42);
    REQUIRE(projs.size() == ranks.size());
    for (std::size_t i = 0; i < projs.size(); ++i) {
      CHECK(projs[i].rank == ranks[i]);
      CHECK(projs[i].rank == subspace_dim(projs[i].shape));
    }
  }
}

TEST_CASE("symmetrizers commute with the group action to primitivity") {
  int n = 3;
  auto projs = gys_projectors(n, 42);
  for (const auto& perm : all_permutations(n)) {
    Eigen::MatrixXd u = perm_unitary(perm, n);
    for (const auto& p : projs) {
      // Pi U Pi is proportional to Pi.
      Eigen::MatrixXcd pup = p.matrix * u * p.matrix;
      cplx lambda = pup.trace() / static_cast<double>(p.rank);
      CHECK((pup - lambda * p.matrix).norm() < 1e-8);
    }
  }
}

TEST_CASE("tensor product of symmetrizers keeps the axioms") {
  auto pc = gys_projectors(2, 42);
  auto pp = gys_projectors(2, 42);
  GysProjector t = tensor_gys(pc[0], pp[1]);
  CHECK(t.rank == pc[0].rank * pp[1].rank);
  const auto& m = t.matrix;
  CHECK((m - m.adjoint()).norm() < 1e-10);
  CHECK((m * m - m).norm() < 1e-10);
  CHECK(std::lround(m.trace().real()) == t.rank);
}
