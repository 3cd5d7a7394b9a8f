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

#include <cstdint>
#include <string>
#include <vector>

#include "spindla/pauli.hpp"

namespace spindla {

struct GysError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Weakly decreasing positive integers summing to n.
struct Partition {
  std::vector<int> rows;

  Partition() = default;
  Partition(std::initializer_list<int> r) : rows(r) {}
  explicit Partition(std::vector<int> r) : rows(std::move(r)) {}

  int n() const;
  bool valid() const;
  std::string str() const;  // "(2,1)"

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return rows < o.rows; }
};

/// All partitions of n in reverse-lexicographic order, (n) first.
std::vector<Partition> partitions(int n);

struct StandardTableau {
  Partition shape;
  std::vector<std::vector<int>> filling;  // rows, entries 1..n
};

/// All standard Young tableaux of the shape (strictly increasing rows and
/// columns).
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

/// Product over boxes of (arm + leg + 1).
long hook_length(const Partition& shape);

/// Number of standard tableaux, n! / hook_length.
long tableau_count(const Partition& shape);

/// Dimension of the invariant subspace attached to one tableau of this shape
/// on a qubit register: prod over boxes (2 - row + col) / hook_length. Zero
/// whenever the shape has more than two rows.
int subspace_dim(const Partition& shape);

long factorial(int n);

/// All permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> all_permutations(int n);

/// Cycle type of a permutation as a partition (descending part lengths).
Partition cycle_type(const std::vector<int>& perm);

/// Irreducible character of S_n via the Murnaghan-Nakayama rule.
long character(const Partition& shape, const Partition& cycle_type);

/// 2^n x 2^n orthogonal matrix permuting tensor factors: the letter at
/// position i moves to position perm[i], matching pauli permute() under
/// conjugation.
Eigen::MatrixXd perm_unitary(const std::vector<int>& perm, int n);

/// Hermitian idempotent from the symmetric-group algebra whose image is one
/// invariant subspace; label indexes it within its isotypic component.
struct GysProjector {
  Eigen::MatrixXcd matrix;
  Partition shape;
  int rank = 0;
  int label = 0;
};

/// One projector per standard tableau of every shape with nonzero subspace
/// dimension; satisfies completeness, orthogonality, primitivity and
/// hermiticity to 1e-10. Construction: character-based isotypic projectors
/// split along the eigenspaces of a seeded generic Hermitian group-algebra
/// element (retries with fresh seeds if eigenvalue clusters collide).
std::vector<GysProjector> gys_projectors(int n, uint64_t seed = 42);

/// Kronecker product of two symmetrizers; the four axioms are inherited and
/// ranks multiply. The shape/label metadata of the factors is dropped.
GysProjector tensor_gys(const GysProjector& proj_c, const GysProjector& proj_p);

}  // namespace spindla
