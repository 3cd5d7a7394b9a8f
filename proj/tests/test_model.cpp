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

#include "spindla/model.hpp"

using namespace spindla;

namespace {

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("model generators are the drift plus two controls") {
  ModelParams p{RegisterSpec(2, 3)};
  auto gens = model_generators(p);
  REQUIRE(gens.size() == 3);
  for (const Operator& g : gens) CHECK(g.is_skew_hermitian());
  // Drift couples every C site to every P site.
  CHECK(gens[0].term_count() == 6);
  CHECK(gens[0].coeff(PauliWord::from_string("ZIZII")) == cplx{0, 1});
  // Controls weight the two regions by their gyromagnetic factors.
  CHECK(gens[1].coeff(PauliWord::from_string("XIIII")) == cplx{0, 1});
  CHECK(gens[1].coeff(PauliWord::from_string("IIXII")) == cplx{0, 2});
  CHECK(ModelParams(RegisterSpec(1, 1), 2.0, -2.0).gamma_degenerate());
  CHECK(!ModelParams(RegisterSpec(1, 1), 1.0, 2.0).gamma_degenerate());
}

TEST_CASE("embed relabels a small-register operator into one region") {
  RegisterSpec big(2, 2);
  RegisterSpec small(1, 1);
  Operator a = Operator::from_word(small, PauliWord::from_string("XY"),
                                   cplx{0, 1});
  Operator c = embed(a, big, Region::C);
  CHECK(c.coeff(PauliWord::from_string("XYII")) == cplx{0, 1});
  Operator p = embed(a, big, Region::P);
  CHECK(p.coeff(PauliWord::from_string("IIXY")) == cplx{0, 1});
  CHECK_THROWS_AS(embed(a, RegisterSpec(1, 2), Region::C), DimensionError);
}

TEST_CASE("collective-algebra basis dimensions, n = 1..5") {
  std::vector<int> l_dims = {3, 8, 18, 32, 53};
  for (int n = 1; n <= 5; ++n) {
    CHECK(build_L_basis(n).dim() == l_dims[n - 1]);
    CHECK(build_LG_basis(n).dim() == binom(n + 3, 3));
  }
}

TEST_CASE("commutant basis commutes with all transpositions") {
  for (int n = 2; n <= 4; ++n) {
    LieBasis lg = build_LG_basis(n);
    CHECK(commutes_with_group(lg, lg.reg));
    for (const Operator& e : lg.elements) CHECK(is_symmetric(e, true));
  }
}

TEST_CASE("model closure dimensions match the frozen grid") {
  std::map<std::pair<int, int>, int> dims = {
      {{1, 1}, 15}, {{1, 2}, 38}, {{1, 3}, 78}, {{1, 4}, 137},
      {{2, 2}, 86}, {{2, 3}, 181}};
  for (const auto& [key, d] : dims) {
    ModelParams p{RegisterSpec(key.first, key.second)};
    CHECK(closure(model_generators(p)).dim() == d);
  }
}

TEST_CASE("predicted assembly spans the computed closure") {
  for (auto [nc, np] : {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
    ModelParams p{RegisterSpec(nc, np)};
    LieBasis dla = closure(model_generators(p));
    LieBasis predicted = build_predicted_dla(p);
    CHECK(predicted.dim() == dla.dim());
    CHECK(span_equal(predicted, dla));
  }
}

TEST_CASE("closure does not depend on the gyromagnetic values") {
  for (auto [gc, gp] : {std::pair{0.5, 3.0}, {-1.0, 0.25}}) {
    ModelParams p{RegisterSpec(1, 2), gc, gp};
    LieBasis b = closure(model_generators(p));
    CHECK(b.dim() == 38);
    CHECK(span_equal(b, build_predicted_dla(ModelParams{RegisterSpec(1, 2)})));
  }
}

TEST_CASE("super-algebra strictly contains the nc=2 closure") {
  for (int np : {2, 3}) {
    RegisterSpec reg(2, np);
    LieBasis super = build_super_algebra(reg);
    LieBasis dla = closure(model_generators(ModelParams{reg}));
    CHECK(super.dim() > dla.dim());
    for (const Operator& e : dla.elements) CHECK(contains(super, e));
  }
}

TEST_CASE("structural spaces sit inside the closure") {
  for (auto [nc, np] : {std::pair{1, 2}, {2, 2}}) {
    ModelParams p{RegisterSpec(nc, np)};
    LieBasis dla = closure(model_generators(p));
    auto spaces = build_structural_spaces(p);
    CHECK(!spaces.empty());
    for (const auto& [name, elems] : spaces) {
      for (const Operator& e : elems) CHECK(contains(dla, e));
    }
  }
}

TEST_CASE("quadratic invariant basis") {
  RegisterSpec reg(1, 3);
  auto i0 = i0_basis(Region::All, reg);
  REQUIRE(i0.size() == 5);
  for (const Operator& e : i0) {
    CHECK(e.is_skew_hermitian());
    CHECK(std::abs(inner_product(e, cplx{0, 1} * build_J(Region::All, reg))) <
          1e-12);
  }
  CHECK(orthogonalized_span(i0).dim() == 5);
}
