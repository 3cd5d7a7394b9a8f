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
#include <string>
#include <vector>

#include "spindla/closure.hpp"
#include "spindla/pauli.hpp"

namespace spindla {

/// Central-spin model: every C spin couples to every P spin via a zz
/// interaction; both sets see common x and y control fields scaled by their
/// gyromagnetic factors.
struct ModelParams {
  RegisterSpec reg;
  double gamma_c = 1.0;
  double gamma_p = 2.0;

  ModelParams() = default;
  ModelParams(RegisterSpec r, double gc = 1.0, double gp = 2.0);

  /// |gamma_c| == |gamma_p| voids the reduction to independent local
  /// controls; analysis still runs but results are outside the supported
  /// regime.
  bool gamma_degenerate() const;
};

/// The three skew-Hermitian generators: drift i Sz_C Sz_P and the two
/// control directions i(gamma_c S_a^C + gamma_p S_a^P), a = x, y.
std::vector<Operator> model_generators(const ModelParams& p);

/// Re-labels an operator on a small register onto the C or P sites of reg,
/// identity elsewhere. The small register must have reg.region_size(r) sites.
Operator embed(const Operator& a, const RegisterSpec& reg, Region r);

/// The five skew quadratic invariants i{I_xy, I_xz, I_yz, I_xx-I_yy,
/// I_yy-I_zz} over the region. All zero when the region has fewer than two
/// sites.
std::vector<Operator> i0_basis(Region r, const RegisterSpec& reg);

/// Closure of i{S_x, S_y, S_z, I_xx-I_yy, I_yy-I_zz} on an n-site register.
/// Dimension binomial(n+3,3) - 2 for n >= 2, and 3 for n = 1.
LieBasis build_L_basis(int n);

/// Closure of {iI_zz, iS_x, iS_y, iS_z} with i*identity appended: the full
/// commutant of S_n in u(2^n), dimension binomial(n+3,3).
LieBasis build_LG_basis(int n);

/// The span the structure theory predicts for the dynamical Lie algebra,
/// assembled from explicit generator lists and orthogonalized, not closed
/// under bracket. Supports nc = 1 (np >= 1) and nc = 2 (np >= 2).
LieBasis build_predicted_dla(const ModelParams& p);

/// Superalgebra bound: (skew L_C (x) commutant_C) + (commutant_C (x) skew
/// L_P) as an orthogonalized span.
LieBasis build_super_algebra(const RegisterSpec& reg);

/// Named spans of operators known to sit inside the dynamical Lie algebra,
/// keyed "A_C", "A_P", "B", "D1", "D2", plus "E1" for nc = 1 and "I0C_I0P",
/// "uJ_I0P", "L_L", "uJ_L", "L_uJ" for nc = 2.
std::map<std::string, std::vector<Operator>> build_structural_spaces(
    const ModelParams& p);

}  // namespace spindla
