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

#include "spindla/dense.hpp"

namespace spindla {

Eigen::Matrix2cd pauli_matrix(int letter) {
  Eigen::Matrix2cd m;
  const cplx i{0, 1};
  switch (letter) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, i, -i, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw DimensionError("pauli_matrix: bad letter");
  }
  return m;
}

Eigen::MatrixXcd word_matrix(const PauliWord& w) {
  // A word's matrix is diagonal-free structure: entry (r, c) is nonzero iff
  // c = r ^ xmask where xmask flips the bits at X/Y sites. Building it
  // entrywise avoids repeated Kronecker products.
  const int n = w.n;
  const long dim = 1L << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  long xmask = 0;
  for (int pos = 0; pos < n; ++pos) {
    int l = w.letter(pos);
    if (l == 1 || l == 2) xmask |= 1L << (n - 1 - pos);
  }
  for (long col = 0; col < dim; ++col) {
    long row = col ^ xmask;
    cplx entry{1, 0};
    for (int pos = 0; pos < n; ++pos) {
      int l = w.letter(pos);
      int bit_c = static_cast<int>((col >> (n - 1 - pos)) & 1);
      switch (l) {
        case 0: break;
        case 1: break;  // X contributes 1
        case 2:
          // sigma_y with our sign convention: <0|sigma_y|1> = i, <1|sigma_y|0> = -i.
          entry *= bit_c ? cplx{0, 1} : cplx{0, -1};
          break;
        case 3:
          if (bit_c) entry = -entry;
          break;
      }
    }
    m(row, col) = entry;
  }
  return m;
}

Eigen::MatrixXcd to_matrix(const Operator& a) {
  const long dim = 1L << a.reg().n();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [w, c] : a.terms()) m += c * word_matrix(w);
  return m;
}

}  // namespace spindla
