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

#include "spindla/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace spindla {

int max_qubits() {
  static const int cap = [] {
    if (const char* env = std::getenv("SPINDLA_MAX_QUBITS")) {
      int v = std::atoi(env);
      if (v >= 1 && v <= 15) return v;
    }
    return 8;
  }();
  return cap;
}

RegisterSpec::RegisterSpec(int nc_, int np_) : nc(nc_), np(np_) {
  // np == 0 is tolerated so that single-region registers (including n = 1)
  // can be expressed; the model layer enforces np >= 1 where it matters.
  if (nc < 1 || np < 0) {
    throw DimensionError("RegisterSpec: need nc >= 1, np >= 0");
  }
  if (n() > max_qubits()) {
    throw DimensionError("RegisterSpec: n = " + std::to_string(n()) +
                         " exceeds qubit cap " + std::to_string(max_qubits()));
  }
}

std::vector<int> RegisterSpec::positions(Region r) const {
  std::vector<int> out;
  int lo = (r == Region::P) ? nc : 0;
  int hi = (r == Region::C) ? nc : n();
  for (int i = lo; i < hi; ++i) out.push_back(i);
  return out;
}

int RegisterSpec::region_size(Region r) const {
  switch (r) {
    case Region::C: return nc;
    case Region::P: return np;
    default: return n();
  }
}

PauliWord PauliWord::identity(int n) {
  PauliWord w;
  w.n = static_cast<uint8_t>(n);
  return w;
}

PauliWord PauliWord::single(int n, int pos, Axis a) {
  return identity(n).with_letter(pos, static_cast<int>(a));
}

PauliWord PauliWord::with_letter(int pos, int l) const {
  PauliWord w = *this;
  unsigned shift = 2u * (n - 1 - pos);
  w.key = (key & ~(3u << shift)) | (static_cast<uint32_t>(l) << shift);
  return w;
}

PauliWord PauliWord::from_string(const std::string& s) {
  if (s.empty() || s.size() > 15) {
    throw ParseError("Pauli word must have length 1..15: '" + s + "'");
  }
  PauliWord w = identity(static_cast<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    int l;
    switch (s[i]) {
      case 'I': l = 0; break;
      case 'X': l = 1; break;
      case 'Y': l = 2; break;
      case 'Z': l = 3; break;
      default:
        throw ParseError(std::string("invalid Pauli letter '") + s[i] + "'");
    }
    w = w.with_letter(static_cast<int>(i), l);
  }
  return w;
}

std::string PauliWord::str() const {
  static const char kLetters[] = "IXYZ";
  std::string s(n, 'I');
  for (int i = 0; i < n; ++i) s[i] = kLetters[letter(i)];
  return s;
}

namespace {

constexpr uint8_t kSiteProd[4][4] = {
    {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};

// Power of i picked up by the single-site product, sigma_x sigma_y = -i sigma_z
// convention (exponent 3) and sigma_y sigma_x = +i sigma_z (exponent 1).
constexpr uint8_t kSitePhase[4][4] = {
    {0, 0, 0, 0}, {0, 0, 3, 1}, {0, 1, 0, 3}, {0, 3, 1, 0}};

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

std::pair<cplx, PauliWord> word_multiply(const PauliWord& a,
                                         const PauliWord& b) {
  if (a.n != b.n) {
    throw DimensionError("word_multiply: length mismatch");
  }
  PauliWord out = PauliWord::identity(a.n);
  unsigned phase = 0;
  uint32_t ka = a.key, kb = b.key, ko = 0;
  for (int i = 0; i < a.n; ++i) {
    unsigned la = ka & 3u, lb = kb & 3u;
    ko |= static_cast<uint32_t>(kSiteProd[la][lb]) << (2 * i);
    phase += kSitePhase[la][lb];
    ka >>= 2;
    kb >>= 2;
  }
  out.key = ko;
  return {kIPow[phase & 3u], out};
}

bool words_commute(const PauliWord& a, const PauliWord& b) {
  if (a.n != b.n) {
    throw DimensionError("words_commute: length mismatch");
  }
  uint32_t ka = a.key, kb = b.key;
  int clashes = 0;
  for (int i = 0; i < a.n; ++i) {
    unsigned la = ka & 3u, lb = kb & 3u;
    if (la != 0 && lb != 0 && la != lb) ++clashes;
    ka >>= 2;
    kb >>= 2;
  }
  return (clashes & 1) == 0;
}

Operator Operator::identity(RegisterSpec reg) {
  return from_word(reg, PauliWord::identity(reg.n()));
}

Operator Operator::from_word(RegisterSpec reg, PauliWord w, cplx c) {
  if (w.n != reg.n()) {
    throw DimensionError("Operator::from_word: word length != register size");
  }
  Operator a(reg);
  a.add_term(w, c);
  return a;
}

cplx Operator::coeff(const PauliWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? cplx{0, 0} : it->second;
}

void Operator::add_term(const PauliWord& w, cplx c) {
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPruneTol) terms_.erase(it);
}

void Operator::prune(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < tol) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

double Operator::norm() const {
  double s = 0;
  for (const auto& [w, c] : terms_) s += std::norm(c);
  return std::sqrt(s * std::pow(2.0, reg_.n()));
}

bool Operator::is_hermitian(double tol) const {
  for (const auto& [w, c] : terms_) {
    if (std::abs(c.imag()) > tol * std::max(1.0, std::abs(c))) return false;
  }
  return true;
}

bool Operator::is_skew_hermitian(double tol) const {
  for (const auto& [w, c] : terms_) {
    if (std::abs(c.real()) > tol * std::max(1.0, std::abs(c))) return false;
  }
  return true;
}

Operator& Operator::operator+=(const Operator& o) {
  if (!(reg_ == o.reg_)) throw DimensionError("operator+: register mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  if (!(reg_ == o.reg_)) throw DimensionError("operator-: register mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Operator& Operator::operator*=(cplx s) {
  for (auto& [w, c] : terms_) c *= s;
  prune();
  return *this;
}

Operator multiply(const Operator& a, const Operator& b) {
  if (!(a.reg() == b.reg())) {
    throw DimensionError("multiply: register mismatch");
  }
  Operator out(a.reg());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      auto [phase, w] = word_multiply(wa, wb);
      out.add_term(w, ca * cb * phase);
    }
  }
  out.prune();
  return out;
}

Operator commutator(const Operator& a, const Operator& b) {
  if (!(a.reg() == b.reg())) {
    throw DimensionError("commutator: register mismatch");
  }
  Operator out(a.reg());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      if (words_commute(wa, wb)) continue;
      // For anticommuting words ab = phase w and ba = conj(phase) w.
      auto [phase, w] = word_multiply(wa, wb);
      out.add_term(w, ca * cb * (phase - std::conj(phase)));
    }
  }
  out.prune();
  return out;
}

Operator anticommutator(const Operator& a, const Operator& b) {
  if (!(a.reg() == b.reg())) {
    throw DimensionError("anticommutator: register mismatch");
  }
  Operator out(a.reg());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      if (!words_commute(wa, wb)) continue;
      auto [phase, w] = word_multiply(wa, wb);
      out.add_term(w, ca * cb * 2.0 * phase);
    }
  }
  out.prune();
  return out;
}

cplx inner_product(const Operator& a, const Operator& b) {
  if (!(a.reg() == b.reg())) {
    throw DimensionError("inner_product: register mismatch");
  }
  const double dim = std::pow(2.0, a.reg().n());
  cplx s{0, 0};
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  // Merge walk over the two sorted term maps.
  auto ia = ta.begin();
  auto ib = tb.begin();
  while (ia != ta.end() && ib != tb.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      s += ia->second * std::conj(ib->second);
      ++ia;
      ++ib;
    }
  }
  return s * dim;
}

Operator build_S(Axis axis, Region region, RegisterSpec reg) {
  Operator out(reg);
  for (int pos : reg.positions(region)) {
    out.add_term(PauliWord::single(reg.n(), pos, axis), 1.0);
  }
  return out;
}

Operator build_I(const std::vector<Axis>& pattern, Region region,
                 RegisterSpec reg) {
  const auto slots = reg.positions(region);
  if (pattern.size() > slots.size()) {
    throw DimensionError("build_I: pattern larger than region");
  }
  // Multiset of letters laid into the region slots: 0 marks identity.
  std::vector<int> letters(slots.size(), 0);
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    letters[i] = static_cast<int>(pattern[i]);
  }
  std::sort(letters.begin(), letters.end());
  Operator out(reg);
  do {
    PauliWord w = PauliWord::identity(reg.n());
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (letters[i] != 0) w = w.with_letter(slots[i], letters[i]);
    }
    out.add_term(w, 1.0);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

Operator build_J(Region region, RegisterSpec reg) {
  if (reg.region_size(region) < 2) {
    std::fprintf(stderr,
                 "spindla: warning: build_J on region of size < 2 is zero\n");
    return Operator::zero(reg);
  }
  Operator out = build_I({Axis::X, Axis::X}, region, reg);
  out += build_I({Axis::Y, Axis::Y}, region, reg);
  out += build_I({Axis::Z, Axis::Z}, region, reg);
  return out;
}

Operator permute(const Operator& a, const std::vector<int>& perm_c,
                 const std::vector<int>& perm_p) {
  const RegisterSpec& reg = a.reg();
  if (static_cast<int>(perm_c.size()) != reg.nc ||
      static_cast<int>(perm_p.size()) != reg.np) {
    throw DimensionError("permute: permutation size mismatch");
  }
  std::vector<int> dest(reg.n());
  for (int i = 0; i < reg.nc; ++i) dest[i] = perm_c[i];
  for (int i = 0; i < reg.np; ++i) dest[reg.nc + i] = reg.nc + perm_p[i];
  Operator out(reg);
  for (const auto& [w, c] : a.terms()) {
    PauliWord pw = PauliWord::identity(reg.n());
    for (int i = 0; i < reg.n(); ++i) pw = pw.with_letter(dest[i], w.letter(i));
    out.add_term(pw, c);
  }
  return out;
}

std::string format_operator(const Operator& a) {
  std::string out;
  char buf[96];
  for (const auto& [w, c] : a.terms()) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g %s\n", c.real(), c.imag(),
                  w.str().c_str());
    out += buf;
  }
  return out;
}

namespace {

Operator parse_operator_impl(const std::string& text, const RegisterSpec* reg) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  Operator out;
  bool have_reg = false;
  if (reg != nullptr) {
    out = Operator::zero(*reg);
    have_reg = true;
  }
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    double re, im;
    std::string word;
    if (!(ls >> re >> im >> word)) {
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected '<re> <im> <word>'");
    }
    PauliWord w;
    try {
      w = PauliWord::from_string(word);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!have_reg) {
      out = Operator::zero(RegisterSpec(1, w.n - 1));
      have_reg = true;
    }
    if (w.n != out.reg().n()) {
      throw ParseError("line " + std::to_string(lineno) +
                       ": word length does not match register size " +
                       std::to_string(out.reg().n()));
    }
    out.add_term(w, cplx{re, im});
  }
  if (!have_reg) throw ParseError("empty operator file");
  return out;
}

}  // namespace

Operator parse_operator(const std::string& text, RegisterSpec reg) {
  return parse_operator_impl(text, &reg);
}

Operator parse_operator(const std::string& text) {
  return parse_operator_impl(text, nullptr);
}

}  // namespace spindla
