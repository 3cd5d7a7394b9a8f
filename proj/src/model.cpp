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

#include "spindla/model.hpp"

#include <cmath>

namespace spindla {

namespace {

const cplx kI{0.0, 1.0};

// i(H_a H_b) for skew a = iH_a, b = iH_b acting on disjoint sites.
Operator skew_tensor(const Operator& a, const Operator& b) {
  return cplx{0.0, -1.0} * multiply(a, b);
}

// The six symmetrized quadratic words I_xx, I_xy, I_xz, I_yy, I_yz, I_zz.
std::vector<Operator> quad_hermitian(Region r, const RegisterSpec& reg) {
  std::vector<Operator> out;
  const Axis ax[3] = {Axis::X, Axis::Y, Axis::Z};
  for (int a = 0; a < 3; ++a) {
    for (int b = a; b < 3; ++b) {
      out.push_back(build_I({ax[a], ax[b]}, r, reg));
    }
  }
  return out;
}

// Traceless quadratic invariants as Hermitian operators: I_xy, I_xz, I_yz,
// I_xx - I_yy, I_yy - I_zz.
std::vector<Operator> i0_hermitian(Region r, const RegisterSpec& reg) {
  const Axis x = Axis::X, y = Axis::Y, z = Axis::Z;
  return {build_I({x, y}, r, reg), build_I({x, z}, r, reg),
          build_I({y, z}, r, reg),
          build_I({x, x}, r, reg) - build_I({y, y}, r, reg),
          build_I({y, y}, r, reg) - build_I({z, z}, r, reg)};
}

std::vector<Operator> embed_all(const std::vector<Operator>& elems,
                                const RegisterSpec& reg, Region r) {
  std::vector<Operator> out;
  out.reserve(elems.size());
  for (const Operator& e : elems) out.push_back(embed(e, reg, r));
  return out;
}

}  // namespace

ModelParams::ModelParams(RegisterSpec r, double gc, double gp)
    : reg(r), gamma_c(gc), gamma_p(gp) {
  if (reg.nc < 1 || reg.np < 1) {
    throw ValidationError("ModelParams: both regions need at least one spin");
  }
  if (!std::isfinite(gc) || !std::isfinite(gp) || gc == 0.0 || gp == 0.0) {
    throw ValidationError("ModelParams: gamma factors must be finite nonzero");
  }
}

bool ModelParams::gamma_degenerate() const {
  return std::abs(std::abs(gamma_c) - std::abs(gamma_p)) == 0.0;
}

std::vector<Operator> model_generators(const ModelParams& p) {
  const RegisterSpec& reg = p.reg;
  Operator drift =
      kI * multiply(build_S(Axis::Z, Region::C, reg),
                    build_S(Axis::Z, Region::P, reg));
  Operator cx = kI * (p.gamma_c * build_S(Axis::X, Region::C, reg) +
                      p.gamma_p * build_S(Axis::X, Region::P, reg));
  Operator cy = kI * (p.gamma_c * build_S(Axis::Y, Region::C, reg) +
                      p.gamma_p * build_S(Axis::Y, Region::P, reg));
  return {drift, cx, cy};
}

Operator embed(const Operator& a, const RegisterSpec& reg, Region r) {
  const int size = reg.region_size(r);
  if (a.reg().n() != size) {
    throw DimensionError("embed: operator size does not match target region");
  }
  const int offset = (r == Region::P) ? reg.nc : 0;
  Operator out(reg);
  for (const auto& [w, c] : a.terms()) {
    PauliWord big = PauliWord::identity(reg.n());
    for (int i = 0; i < size; ++i) {
      big = big.with_letter(offset + i, w.letter(i));
    }
    out.add_term(big, c);
  }
  return out;
}

std::vector<Operator> i0_basis(Region r, const RegisterSpec& reg) {
  std::vector<Operator> out;
  for (const Operator& h : i0_hermitian(r, reg)) out.push_back(kI * h);
  return out;
}

LieBasis build_L_basis(int n) {
  if (n < 1) throw DimensionError("build_L_basis: n must be >= 1");
  RegisterSpec reg(1, n - 1);
  const Axis x = Axis::X, y = Axis::Y, z = Axis::Z;
  std::vector<Operator> gens = {kI * build_S(x, Region::All, reg),
                                kI * build_S(y, Region::All, reg),
                                kI * build_S(z, Region::All, reg)};
  if (n >= 2) {
    // The quadratic invariants need at least two sites.
    gens.push_back(kI * (build_I({x, x}, Region::All, reg) -
                         build_I({y, y}, Region::All, reg)));
    gens.push_back(kI * (build_I({y, y}, Region::All, reg) -
                         build_I({z, z}, Region::All, reg)));
  }
  return closure(gens);
}

LieBasis build_LG_basis(int n) {
  if (n < 1) throw DimensionError("build_LG_basis: n must be >= 1");
  RegisterSpec reg(1, n - 1);
  // One symmetrized word per letter multiset: exactly the commutant of S_n,
  // binomial(n+3,3) directions. (The bracket closure of {iI_zz, iS_xyz} plus
  // i*identity spans the same thing for n <= 3 but comes up short from n = 4
  // on, where the commutant's center outgrows span{i1, iJ}.)
  std::vector<Operator> elems = {kI * Operator::identity(reg)};
  const Axis ax[3] = {Axis::X, Axis::Y, Axis::Z};
  std::vector<Axis> pattern;
  for (int k = 1; k <= n; ++k) {
    // multisets of size k over {x,y,z} as non-decreasing index strings
    std::vector<int> idx(k, 0);
    while (true) {
      pattern.clear();
      for (int i : idx) pattern.push_back(ax[i]);
      elems.push_back(kI * build_I(pattern, Region::All, reg));
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == 2) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int q = pos + 1; q < k; ++q) idx[q] = idx[pos];
    }
  }
  return orthogonalized_span(elems);
}

LieBasis build_predicted_dla(const ModelParams& p) {
  const RegisterSpec& reg = p.reg;
  const int nc = reg.nc, np = reg.np;
  if (nc > 2 || np < nc) {
    throw ValidationError(
        "build_predicted_dla: supported sizes are nc in {1,2}, np >= nc");
  }
  const int n = reg.n();

  if (nc == 1 && np == 1) {
    // Full su(4): every non-identity word.
    std::vector<Operator> elems;
    for (uint32_t key = 1; key < 16; ++key) {
      elems.push_back(
          Operator::from_word(reg, PauliWord{key, static_cast<uint8_t>(n)}, kI));
    }
    return orthogonalized_span(elems);
  }

  std::vector<Operator> elems;
  const std::vector<Operator> l_p =
      embed_all(build_L_basis(np).elements, reg, Region::P);
  const std::vector<Operator> lg_p =
      embed_all(build_LG_basis(np).elements, reg, Region::P);

  if (nc == 1) {
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
      Operator sigma =
          Operator::from_word(reg, PauliWord::single(n, 0, a), 1.0);
      for (const Operator& g : lg_p) elems.push_back(multiply(sigma, g));
    }
    for (const Operator& l : l_p) elems.push_back(l);
    return orthogonalized_span(elems);
  }

  const std::vector<Operator> l_c =
      embed_all(build_L_basis(nc).elements, reg, Region::C);
  Operator u_c = Operator::identity(reg) +
                 cplx{1.0 / 3.0, 0.0} * build_J(Region::C, reg);
  if (np == 2) {
    Operator u_p = Operator::identity(reg) +
                   cplx{1.0 / 3.0, 0.0} * build_J(Region::P, reg);
    for (const Operator& a : l_c) {
      for (const Operator& b : l_p) elems.push_back(skew_tensor(a, b));
    }
    for (const Operator& b : l_p) elems.push_back(multiply(u_c, b));
    for (const Operator& a : l_c) elems.push_back(multiply(a, u_p));
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
      elems.push_back(kI * build_S(a, Region::C, reg));
      elems.push_back(kI * build_S(a, Region::P, reg));
    }
  } else {
    for (const Operator& a : l_c) {
      for (const Operator& g : lg_p) elems.push_back(skew_tensor(a, g));
    }
    for (const Operator& b : l_p) elems.push_back(multiply(u_c, b));
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
      elems.push_back(kI * build_S(a, Region::P, reg));
    }
  }
  return orthogonalized_span(elems);
}

LieBasis build_super_algebra(const RegisterSpec& reg) {
  const std::vector<Operator> l_c =
      embed_all(build_L_basis(reg.nc).elements, reg, Region::C);
  const std::vector<Operator> lg_c =
      embed_all(build_LG_basis(reg.nc).elements, reg, Region::C);
  const std::vector<Operator> l_p =
      embed_all(build_L_basis(reg.np).elements, reg, Region::P);
  const std::vector<Operator> lg_p =
      embed_all(build_LG_basis(reg.np).elements, reg, Region::P);
  std::vector<Operator> elems;
  for (const Operator& a : l_c) {
    for (const Operator& g : lg_p) elems.push_back(skew_tensor(a, g));
  }
  for (const Operator& g : lg_c) {
    for (const Operator& b : l_p) elems.push_back(skew_tensor(g, b));
  }
  return orthogonalized_span(elems);
}

std::map<std::string, std::vector<Operator>> build_structural_spaces(
    const ModelParams& p) {
  const RegisterSpec& reg = p.reg;
  const int nc = reg.nc, np = reg.np;
  if (nc > 2) {
    throw ValidationError("build_structural_spaces: nc must be 1 or 2");
  }
  std::map<std::string, std::vector<Operator>> out;

  std::vector<Operator> s_c, s_p;
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    s_c.push_back(build_S(a, Region::C, reg));
    s_p.push_back(build_S(a, Region::P, reg));
  }
  for (const Operator& s : s_c) out["A_C"].push_back(kI * s);
  for (const Operator& s : s_p) out["A_P"].push_back(kI * s);

  for (const Operator& a : s_c) {
    for (const Operator& b : s_p) out["B"].push_back(kI * multiply(a, b));
  }

  out["D1"] = {};
  if (np >= 2) {
    for (const Operator& a : s_c) {
      for (const Operator& q : quad_hermitian(Region::P, reg)) {
        out["D1"].push_back(kI * multiply(a, q));
      }
    }
  }
  out["D2"] = {};
  if (nc >= 2) {
    for (const Operator& q : quad_hermitian(Region::C, reg)) {
      for (const Operator& b : s_p) {
        out["D2"].push_back(kI * multiply(q, b));
      }
    }
  }

  if (nc == 1) {
    out["E1"] = (np >= 2) ? i0_basis(Region::P, reg) : std::vector<Operator>{};
    return out;
  }

  const std::vector<Operator> i0c = i0_hermitian(Region::C, reg);
  const std::vector<Operator> i0p = i0_hermitian(Region::P, reg);
  Operator u_c = Operator::identity(reg) +
                 cplx{1.0 / 3.0, 0.0} * build_J(Region::C, reg);
  for (const Operator& a : i0c) {
    for (const Operator& b : i0p) {
      out["I0C_I0P"].push_back(kI * multiply(a, b));
    }
  }
  for (const Operator& b : i0p) out["uJ_I0P"].push_back(kI * multiply(u_c, b));

  const std::vector<Operator> l_c =
      embed_all(build_L_basis(nc).elements, reg, Region::C);
  const std::vector<Operator> l_p =
      embed_all(build_L_basis(np).elements, reg, Region::P);
  for (const Operator& a : l_c) {
    for (const Operator& b : l_p) out["L_L"].push_back(skew_tensor(a, b));
  }
  for (const Operator& b : l_p) out["uJ_L"].push_back(multiply(u_c, b));
  Operator u_p = Operator::identity(reg) +
                 cplx{2.0 / (3.0 * np), 0.0} * build_J(Region::P, reg);
  for (const Operator& a : l_c) out["L_uJ"].push_back(multiply(a, u_p));
  return out;
}

}  // namespace spindla
