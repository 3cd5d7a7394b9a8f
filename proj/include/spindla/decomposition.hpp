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

#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "spindla/closure.hpp"
#include "spindla/model.hpp"
#include "spindla/symgroup.hpp"

#include "json.hpp"

namespace spindla {

/// Im(Pi_j^C (x) Pi_k^P): one invariant subspace of the joint register,
/// labeled by the shapes and isotypic indices of the two factor
/// symmetrizers.
struct InvariantSubspace {
  Eigen::MatrixXcd basis;  // 2^n x m, orthonormal columns
  int m = 0;
  Partition shape_c;
  int idx_c = 0;
  Partition shape_p;
  int idx_p = 0;
};

struct BlockReport {
  Partition shape_c;
  int idx_c = 0;
  Partition shape_p;
  int idx_p = 0;
  int m = 0;
  int restricted_dim = 0;
  bool has_identity = false;
  std::string verdict;  // "su", "u", "deficient", "trivial"
  double leakage = 0.0;

  bool controllable() const {
    return verdict == "su" || verdict == "u" || verdict == "trivial";
  }
};

struct ControllabilityReport {
  RegisterSpec reg;
  double gamma_c = 0.0;
  double gamma_p = 0.0;
  int dla_dim = 0;
  std::vector<BlockReport> blocks;
  bool subspace_controllable = false;
  bool outside_assumption = false;  // |gamma_c| == |gamma_p|
};

/// One subspace per pair of factor symmetrizers, in deterministic label
/// order. Errors from the symmetrizer construction propagate.
std::vector<InvariantSubspace> invariant_subspaces(const RegisterSpec& reg,
                                                   uint64_t seed = 42);

/// B+ A B for the subspace basis B. The off-block remainder ||(1-BB+)AB|| is
/// written to *leakage when given; above 1e-6 it throws, since that means A
/// does not respect the symmetry decomposition.
Eigen::MatrixXcd restrict_to(const Operator& a, const InvariantSubspace& sub,
                             double* leakage = nullptr);

/// Restricts every basis element and classifies the block action: "su" when
/// the traceless parts span su(m) and the block commutant is scalars, "u"
/// when the identity direction is also present, "trivial" for m = 1,
/// "deficient" otherwise.
BlockReport classify_block(const LieBasis& dla, const InvariantSubspace& sub);

/// Full pipeline: model generators, closure, symmetrizer subspaces, block
/// classification. Controllable overall iff every block is.
ControllabilityReport analyze(const ModelParams& p, uint64_t seed = 42);

/// Fixed-key-order JSON rendering of the report.
nlohmann::ordered_json report_to_json(const ControllabilityReport& report);

}  // namespace spindla
