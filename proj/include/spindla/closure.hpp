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

#include <map>
#include <memory>
#include <vector>

#include "spindla/pauli.hpp"

namespace spindla {

struct ClosureOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {
class SpanData;
}

/// Ordered orthonormal basis of skew-Hermitian operators spanning a Lie
/// algebra. Elements are pairwise orthogonal under Tr(AB+) and unit norm.
/// depth[i] counts the brackets used to produce element i (generators are 0).
struct LieBasis {
  RegisterSpec reg;
  std::vector<Operator> elements;
  std::vector<int> depths;

  int dim() const { return static_cast<int>(elements.size()); }
  std::map<int, int> depth_histogram() const;

  // Internal coordinate representation, shared with contains/span_equal for
  // speed. Treat as opaque.
  std::shared_ptr<const detail::SpanData> span;
};

/// Lie algebra generated by a set of skew-Hermitian operators. Orthogonalizes
/// the generators, then repeatedly brackets (new, all) pairs, appending each
/// normalized residual whose relative norm exceeds 1e-9, until no pair adds an
/// element. max_dim < 0 means 4^n.
LieBasis closure(const std::vector<Operator>& generators, int max_dim = -1);

/// Orthogonalized span of a list of operators, without any bracketing.
LieBasis orthogonalized_span(const std::vector<Operator>& elems);

/// True iff A's residual after projection onto span(basis) has norm below
/// tol * norm(A).
bool contains(const LieBasis& basis, const Operator& a, double tol = 1e-8);

/// Norm of A's residual after projection onto span(basis).
double span_residual(const LieBasis& basis, const Operator& a);

/// Equal dimensions and mutual containment of all elements.
bool span_equal(const LieBasis& b1, const LieBasis& b2);

/// Every basis element is invariant under all transpositions of S_nc x S_np.
bool commutes_with_group(const LieBasis& basis, const RegisterSpec& reg);

/// Max residual of [e_i, e_j] against the span over all pairs. Quadratic in
/// dim; intended for tests.
double bracket_closure_residual(const LieBasis& basis);

/// True iff A is unchanged by every transposition of the group (full S_n when
/// full_sn, else S_nc x S_np of A's register).
bool is_symmetric(const Operator& a, bool full_sn);

}  // namespace spindla
