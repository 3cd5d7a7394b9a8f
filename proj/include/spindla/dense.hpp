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

#include "spindla/pauli.hpp"

namespace spindla {

/// 2x2 matrix of a single Pauli letter (0=I,1=X,2=Y,3=Z), in the convention
/// sigma_y = [[0, i], [-i, 0]] so that sigma_x sigma_y = -i sigma_z.
Eigen::Matrix2cd pauli_matrix(int letter);

/// Dense 2^n x 2^n matrix of a word (Kronecker product of its letters).
Eigen::MatrixXcd word_matrix(const PauliWord& w);

/// Dense materialization of an Operator.
Eigen::MatrixXcd to_matrix(const Operator& a);

}  // namespace spindla
