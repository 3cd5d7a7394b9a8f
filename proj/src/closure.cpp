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

#include "spindla/closure.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace spindla {

namespace {

constexpr double kIndepTol = 1e-9;   // relative residual to accept new element
constexpr double kClosedTol = 1e-8;  // post-hoc bracket-closedness

enum class Mode { Words, RegionSym, FullSym };

// Permutation orbits of Pauli words under the symmetry group of the register
// (or under no group at all: every word its own orbit). Lie brackets of
// group-invariant operators stay invariant, so the closure can run entirely
// in the much smaller orbit-coordinate space.
struct OrbitScheme {
  RegisterSpec reg;
  Mode mode = Mode::Words;
  int n = 0;
  int K = 0;
  std::vector<std::vector<uint32_t>> orbit_words;
  std::vector<int> orbit_of;  // indexed by word key, size 4^n
  Eigen::VectorXd weight;     // squared Frobenius norm of each orbit operator

  struct PairSC {
    int b;
    std::vector<std::pair<int, double>> terms;  // (orbit d, coefficient)
  };
  // Structure constants [i O_a, i O_b] = sum_d c (i O_d), stored for b > a.
  bool sc_built = false;
  std::vector<std::vector<PairSC>> sc;

  uint32_t canonical_key(uint32_t key) const;
  void build(RegisterSpec r, Mode m);
  void build_structure_constants();
};

uint32_t pack_letters(const std::vector<int>& letters) {
  uint32_t key = 0;
  for (int l : letters) key = (key << 2) | static_cast<uint32_t>(l);
  return key;
}

uint32_t OrbitScheme::canonical_key(uint32_t key) const {
  std::vector<int> letters(n);
  for (int i = n - 1; i >= 0; --i) {
    letters[i] = static_cast<int>(key & 3u);
    key >>= 2;
  }
  if (mode == Mode::FullSym) {
    std::sort(letters.begin(), letters.end());
  } else if (mode == Mode::RegionSym) {
    std::sort(letters.begin(), letters.begin() + reg.nc);
    std::sort(letters.begin() + reg.nc, letters.end());
  }
  return pack_letters(letters);
}

void OrbitScheme::build(RegisterSpec r, Mode m) {
  reg = r;
  mode = m;
  n = r.n();
  const uint32_t total = 1u << (2 * n);
  orbit_of.assign(total, -1);
  std::unordered_map<uint32_t, int> index_of_canonical;
  for (uint32_t key = 0; key < total; ++key) {
    uint32_t can = (mode == Mode::Words) ? key : canonical_key(key);
    auto [it, inserted] =
        index_of_canonical.try_emplace(can, static_cast<int>(orbit_words.size()));
    if (inserted) orbit_words.emplace_back();
    orbit_of[key] = it->second;
    orbit_words[it->second].push_back(key);
  }
  K = static_cast<int>(orbit_words.size());
  weight.resize(K);
  const double dim = std::pow(2.0, n);
  for (int a = 0; a < K; ++a) {
    weight[a] = dim * static_cast<double>(orbit_words[a].size());
  }
}

void OrbitScheme::build_structure_constants() {
  if (sc_built) return;
  sc.assign(K, {});
  std::vector<double> acc(K, 0.0);
  std::vector<int> touched;
  PauliWord wa = PauliWord::identity(n), wb = PauliWord::identity(n);
  for (int a = 0; a < K; ++a) {
    for (int b = a + 1; b < K; ++b) {
      touched.clear();
      for (uint32_t ka : orbit_words[a]) {
        wa.key = ka;
        for (uint32_t kb : orbit_words[b]) {
          wb.key = kb;
          if (words_commute(wa, wb)) continue;
          auto [phase, w] = word_multiply(wa, wb);
          int d = orbit_of[w.key];
          if (acc[d] == 0.0) touched.push_back(d);
          acc[d] += 2.0 * phase.imag();
        }
      }
      if (touched.empty()) continue;
      std::sort(touched.begin(), touched.end());
      PairSC entry;
      entry.b = b;
      for (int d : touched) {
        double c = -acc[d] / static_cast<double>(orbit_words[d].size());
        if (std::abs(c) > 1e-12) entry.terms.emplace_back(d, c);
        acc[d] = 0.0;
      }
      if (!entry.terms.empty()) sc[a].push_back(std::move(entry));
    }
  }
  sc_built = true;
}

}  // namespace

namespace detail {

// Orthonormal span in orbit coordinates with the diagonal metric given by the
// orbit weights. Shared by LieBasis for fast membership tests.
class SpanData {
 public:
  std::shared_ptr<OrbitScheme> scheme;
  Eigen::MatrixXd basis;  // K x dim, orthonormal columns under the metric

  // Decomposes a into (component expressible in orbit coordinates) +
  // (orthogonal remainder); returns the coordinates and adds the remainder's
  // squared norm into *off2.
  Eigen::VectorXd to_coords(const Operator& a, double* off2) const {
    const OrbitScheme& s = *scheme;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(s.K);
    std::unordered_map<int, std::pair<double, int>> sums;  // sum, count
    double real_part2 = 0;
    for (const auto& [w, c] : a.terms()) {
      real_part2 += c.real() * c.real();
      auto& e = sums[s.orbit_of[w.key]];
      e.first += c.imag();
      e.second += 1;
    }
    for (const auto& [orb, e] : sums) {
      v[orb] = e.first / static_cast<double>(s.orbit_words[orb].size());
    }
    if (off2 != nullptr) {
      // Deviation from the orbit mean, in a second pass so that symmetric
      // inputs come out numerically zero instead of cancellation noise.
      double var = 0;
      for (const auto& [w, c] : a.terms()) {
        double d = c.imag() - v[s.orbit_of[w.key]];
        var += d * d;
      }
      for (const auto& [orb, e] : sums) {
        int missing = static_cast<int>(s.orbit_words[orb].size()) - e.second;
        var += missing * v[orb] * v[orb];
      }
      *off2 += std::pow(2.0, s.n) * (real_part2 + var);
    }
    return v;
  }

  Operator from_coords(const Eigen::VectorXd& v) const {
    const OrbitScheme& s = *scheme;
    Operator out(s.reg);
    for (int a = 0; a < s.K; ++a) {
      if (std::abs(v[a]) < kPruneTol) continue;
      PauliWord w = PauliWord::identity(s.n);
      for (uint32_t key : s.orbit_words[a]) {
        w.key = key;
        out.add_term(w, cplx{0, v[a]});
      }
    }
    return out;
  }

  double metric_norm(const Eigen::VectorXd& v) const {
    return std::sqrt(v.cwiseProduct(v).dot(scheme->weight));
  }

  // Residual of v against the current span (in place), with one
  // re-orthogonalization pass.
  void project_out(Eigen::VectorXd& v) const {
    if (basis.cols() == 0) return;
    for (int pass = 0; pass < 2; ++pass) {
      Eigen::VectorXd coeffs =
          basis.transpose() * scheme->weight.cwiseProduct(v);
      v.noalias() -= basis * coeffs;
    }
  }

  double residual_norm(const Operator& a) const {
    double off2 = 0;
    Eigen::VectorXd v = to_coords(a, &off2);
    project_out(v);
    double r = metric_norm(v);
    return std::sqrt(off2 + r * r);
  }

  Eigen::VectorXd bracket(const Eigen::VectorXd& x,
                          const Eigen::VectorXd& y) const {
    const OrbitScheme& s = *scheme;
    Eigen::VectorXd z = Eigen::VectorXd::Zero(s.K);
    if (s.sc_built) {
      for (int a = 0; a < s.K; ++a) {
        for (const auto& pair : s.sc[a]) {
          double coeff = x[a] * y[pair.b] - x[pair.b] * y[a];
          if (coeff == 0.0) continue;
          for (const auto& [d, c] : pair.terms) z[d] += coeff * c;
        }
      }
      return z;
    }
    // No precomputed table: bracket word by word, then fold the (evenly
    // distributed) per-word totals back into orbit coordinates.
    std::vector<int> nzx, nzy;
    for (int a = 0; a < s.K; ++a) {
      if (x[a] != 0.0) nzx.push_back(a);
      if (y[a] != 0.0) nzy.push_back(a);
    }
    PauliWord wa = PauliWord::identity(s.n), wb = PauliWord::identity(s.n);
    for (int a : nzx) {
      for (uint32_t ka : s.orbit_words[a]) {
        wa.key = ka;
        for (int b : nzy) {
          for (uint32_t kb : s.orbit_words[b]) {
            wb.key = kb;
            if (words_commute(wa, wb)) continue;
            auto [phase, w] = word_multiply(wa, wb);
            z[s.orbit_of[w.key]] -= 2.0 * phase.imag() * x[a] * y[b];
          }
        }
      }
    }
    for (int d = 0; d < s.K; ++d) {
      if (z[d] != 0.0) z[d] /= static_cast<double>(s.orbit_words[d].size());
    }
    return z;
  }
};

}  // namespace detail

namespace {

using detail::SpanData;

bool is_symmetric_impl(const Operator& a, bool full_sn) {
  const RegisterSpec& reg = a.reg();
  const int n = reg.n();
  auto check_swap = [&](int i) {
    // adjacent transposition (i, i+1) across the whole register
    std::vector<int> pc(reg.nc), pp(reg.np);
    for (int k = 0; k < reg.nc; ++k) pc[k] = k;
    for (int k = 0; k < reg.np; ++k) pp[k] = k;
    if (full_sn && i == reg.nc - 1 && reg.np > 0) {
      // crosses the C/P boundary; permute() cannot express it, swap letters
      // manually.
      Operator out(reg);
      for (const auto& [w, c] : a.terms()) {
        PauliWord pw = w.with_letter(i, w.letter(i + 1))
                           .with_letter(i + 1, w.letter(i));
        out.add_term(pw, c);
      }
      return (out - a).norm() < 1e-10 * std::max(1.0, a.norm());
    }
    if (i < reg.nc - 1) {
      std::swap(pc[i], pc[i + 1]);
    } else if (i >= reg.nc) {
      std::swap(pp[i - reg.nc], pp[i - reg.nc + 1]);
    } else {
      return true;  // boundary swap not part of the region group
    }
    return (permute(a, pc, pp) - a).norm() < 1e-10 * std::max(1.0, a.norm());
  };
  for (int i = 0; i + 1 < n; ++i) {
    if (!check_swap(i)) return false;
  }
  return true;
}

Mode pick_mode(const std::vector<Operator>& ops) {
  bool full = true, region = true;
  for (const Operator& a : ops) {
    if (full && !is_symmetric_impl(a, true)) full = false;
    if (!full && region && !is_symmetric_impl(a, false)) region = false;
    if (!full && !region) break;
  }
  if (full) return Mode::FullSym;
  if (region) return Mode::RegionSym;
  return Mode::Words;
}

std::shared_ptr<SpanData> make_span(const RegisterSpec& reg, Mode mode) {
  auto span = std::make_shared<SpanData>();
  span->scheme = std::make_shared<OrbitScheme>();
  span->scheme->build(reg, mode);
  span->basis.resize(span->scheme->K, 0);
  return span;
}

// Appends the normalized residual of v if independent; returns true on append.
bool gram_schmidt_add(SpanData& span, Eigen::VectorXd v) {
  double orig = span.metric_norm(v);
  if (orig < 1e-12) return false;
  span.project_out(v);
  double res = span.metric_norm(v);
  if (res <= kIndepTol * orig) return false;
  v /= res;
  span.basis.conservativeResize(Eigen::NoChange, span.basis.cols() + 1);
  span.basis.col(span.basis.cols() - 1) = v;
  return true;
}

void validate_generators(const std::vector<Operator>& generators) {
  if (generators.empty()) {
    throw ValidationError("closure: empty generator set");
  }
  const RegisterSpec reg = generators.front().reg();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!(generators[i].reg() == reg)) {
      throw DimensionError("closure: generators on different registers");
    }
    if (!generators[i].is_skew_hermitian()) {
      throw ValidationError("closure: generator " + std::to_string(i) +
                            " is not skew-Hermitian");
    }
  }
}

LieBasis finalize(const RegisterSpec& reg, std::shared_ptr<SpanData> span,
                  std::vector<int> depths) {
  LieBasis basis;
  basis.reg = reg;
  basis.depths = std::move(depths);
  for (int i = 0; i < span->basis.cols(); ++i) {
    basis.elements.push_back(span->from_coords(span->basis.col(i)));
  }
  basis.span = std::move(span);
  return basis;
}

}  // namespace

std::map<int, int> LieBasis::depth_histogram() const {
  std::map<int, int> h;
  for (int d : depths) ++h[d];
  return h;
}

bool is_symmetric(const Operator& a, bool full_sn) {
  return is_symmetric_impl(a, full_sn);
}

LieBasis closure(const std::vector<Operator>& generators, int max_dim) {
  validate_generators(generators);
  const RegisterSpec reg = generators.front().reg();
  if (max_dim < 0) {
    max_dim = static_cast<int>(
        std::min<long>(1L << (2 * reg.n()), 1L << 24));
  }
  auto span = make_span(reg, pick_mode(generators));
  // Precomputed orbit structure constants pay off only when the orbit space
  // is small; otherwise brackets fall back to direct word arithmetic.
  if (span->scheme->mode != Mode::Words && span->scheme->K <= 512) {
    span->scheme->build_structure_constants();
  }
  std::vector<int> depths;
  for (const Operator& g : generators) {
    if (gram_schmidt_add(*span, span->to_coords(g, nullptr))) {
      depths.push_back(0);
      if (static_cast<int>(depths.size()) > max_dim) {
        throw ClosureOverflow("closure: generators alone exceed max_dim");
      }
    }
  }
  int lo = 0, hi = static_cast<int>(depths.size());
  while (lo < hi) {
    for (int i = lo; i < hi; ++i) {
      for (int j = 0; j < i; ++j) {
        Eigen::VectorXd z = span->bracket(span->basis.col(i), span->basis.col(j));
        if (gram_schmidt_add(*span, z)) {
          depths.push_back(std::max(depths[i], depths[j]) + 1);
          if (static_cast<int>(depths.size()) > max_dim) {
            throw ClosureOverflow(
                "closure: dimension exceeds max_dim at bracket [e" +
                std::to_string(i) + ", e" + std::to_string(j) + "]");
          }
        }
      }
    }
    lo = hi;
    hi = static_cast<int>(depths.size());
  }
  return finalize(reg, std::move(span), std::move(depths));
}

LieBasis orthogonalized_span(const std::vector<Operator>& elems) {
  if (elems.empty()) {
    throw ValidationError("orthogonalized_span: empty element list");
  }
  const RegisterSpec reg = elems.front().reg();
  for (const Operator& e : elems) {
    if (!(e.reg() == reg)) {
      throw DimensionError("orthogonalized_span: register mismatch");
    }
  }
  auto span = make_span(reg, pick_mode(elems));
  std::vector<int> depths;
  for (const Operator& e : elems) {
    double off2 = 0;
    Eigen::VectorXd v = span->to_coords(e, &off2);
    double n2 = e.norm() * e.norm();
    if (off2 > 1e-12 * std::max(1.0, n2)) {
      throw ValidationError(
          "orthogonalized_span: element breaks the detected symmetry");
    }
    if (gram_schmidt_add(*span, v)) depths.push_back(0);
  }
  return finalize(reg, std::move(span), std::move(depths));
}

double span_residual(const LieBasis& basis, const Operator& a) {
  if (!(a.reg() == basis.reg)) {
    throw DimensionError("span_residual: register mismatch");
  }
  return basis.span->residual_norm(a);
}

bool contains(const LieBasis& basis, const Operator& a, double tol) {
  if (!(a.reg() == basis.reg)) {
    throw DimensionError("contains: register mismatch");
  }
  double na = a.norm();
  if (na < 1e-14) return true;
  return basis.span->residual_norm(a) < tol * na;
}

bool span_equal(const LieBasis& b1, const LieBasis& b2) {
  if (b1.dim() != b2.dim()) return false;
  for (const Operator& e : b2.elements) {
    if (!contains(b1, e)) return false;
  }
  for (const Operator& e : b1.elements) {
    if (!contains(b2, e)) return false;
  }
  return true;
}

bool commutes_with_group(const LieBasis& basis, const RegisterSpec& reg) {
  for (const Operator& e : basis.elements) {
    if (!is_symmetric_impl(e, false)) return false;
  }
  (void)reg;
  return true;
}

double bracket_closure_residual(const LieBasis& basis) {
  const auto& span = *basis.span;
  double worst = 0;
  for (int i = 0; i < basis.dim(); ++i) {
    for (int j = 0; j < i; ++j) {
      Eigen::VectorXd z = span.bracket(span.basis.col(i), span.basis.col(j));
      span.project_out(z);
      worst = std::max(worst, span.metric_norm(z));
    }
  }
  (void)kClosedTol;
  return worst;
}

}  // namespace spindla
