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

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spindla {

using cplx = std::complex<double>;

/// Coefficients smaller than this are dropped after every algebraic operation.
inline constexpr double kPruneTol = 1e-14;

/// Size cap for the total register; SPINDLA_MAX_QUBITS overrides.
int max_qubits();

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Axis : int { X = 1, Y = 2, Z = 3 };

enum class Region { C, P, All };

/// Register layout: positions 0..nc-1 are the central spins (set C),
/// positions nc..n-1 the peripheral spins (set P).
struct RegisterSpec {
  int nc = 1;
  int np = 1;

  RegisterSpec() = default;
  RegisterSpec(int nc_, int np_);

  int n() const { return nc + np; }
  bool operator==(const RegisterSpec&) const = default;

  std::vector<int> positions(Region r) const;
  int region_size(Region r) const;
};

/// A length-n string over {I,X,Y,Z}, packed two bits per site with site 0 in
/// the most significant pair so that integer order equals lexicographic order.
struct PauliWord {
  uint32_t key = 0;
  uint8_t n = 0;

  static PauliWord identity(int n);
  static PauliWord single(int n, int pos, Axis a);
  static PauliWord from_string(const std::string& s);

  /// Letter at position pos, 0=I, 1=X, 2=Y, 3=Z.
  int letter(int pos) const { return (key >> (2u * (n - 1 - pos))) & 3u; }
  PauliWord with_letter(int pos, int l) const;
  std::string str() const;

  bool operator==(const PauliWord&) const = default;
  bool operator<(const PauliWord& o) const {
    return n != o.n ? n < o.n : key < o.key;
  }
};

/// Product of two words as matrices: a·b = phase · word with phase in {±1, ±i}.
std::pair<cplx, PauliWord> word_multiply(const PauliWord& a, const PauliWord& b);

/// True iff the matrices of a and b commute (even number of clashing sites).
bool words_commute(const PauliWord& a, const PauliWord& b);

/// Finite complex combination of Pauli words on a fixed register. Immutable in
/// spirit: all algebra goes through free functions returning new values.
class Operator {
 public:
  using TermMap = std::map<PauliWord, cplx>;

  Operator() = default;
  explicit Operator(RegisterSpec reg) : reg_(reg) {}

  static Operator zero(RegisterSpec reg) { return Operator(reg); }
  static Operator identity(RegisterSpec reg);
  static Operator from_word(RegisterSpec reg, PauliWord w, cplx c = 1.0);

  const RegisterSpec& reg() const { return reg_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  cplx coeff(const PauliWord& w) const;
  void add_term(const PauliWord& w, cplx c);
  void prune(double tol = kPruneTol);

  /// Frobenius norm, sqrt(Tr(A A†)).
  double norm() const;

  bool is_hermitian(double tol = 1e-10) const;
  bool is_skew_hermitian(double tol = 1e-10) const;

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(cplx s);

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(Operator a, cplx s) { return a *= s; }
  friend Operator operator*(cplx s, Operator a) { return a *= s; }

 private:
  RegisterSpec reg_;
  TermMap terms_;
};

Operator multiply(const Operator& a, const Operator& b);
Operator commutator(const Operator& a, const Operator& b);
Operator anticommutator(const Operator& a, const Operator& b);

/// Tr(A B†); exact term sum, distinct words are trace-orthogonal.
cplx inner_product(const Operator& a, const Operator& b);

/// Collective spin operator: sum of single-axis words over the region.
Operator build_S(Axis axis, Region region, RegisterSpec reg);

/// Symmetrized multi-letter operator: sum over all distinct placements of the
/// pattern letters into region positions, identity elsewhere.
Operator build_I(const std::vector<Axis>& pattern, Region region,
                 RegisterSpec reg);

/// Heisenberg invariant I_xx + I_yy + I_zz over the region.
Operator build_J(Region region, RegisterSpec reg);

/// Rearranges each word's letters within C by perm_c and within P by perm_p;
/// perm[i] is the new position of the letter currently at slot i.
Operator permute(const Operator& a, const std::vector<int>& perm_c,
                 const std::vector<int>& perm_p);

/// Text format, one term per line: "<re> <im> <word>". '#' starts a comment.
/// Round-trips losslessly at 17 significant digits.
std::string format_operator(const Operator& a);
Operator parse_operator(const std::string& text, RegisterSpec reg);
/// Infers the register as (1, n-1) from the first word's length.
Operator parse_operator(const std::string& text);

}  // namespace spindla
