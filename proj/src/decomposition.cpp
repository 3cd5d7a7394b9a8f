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

#include "spindla/decomposition.hpp"

#include <random>

#include "spindla/dense.hpp"

namespace spindla {

namespace {

constexpr double kRankTol = 1e-8;     // relative singular-value threshold
constexpr double kLeakHard = 1e-6;    // beyond this the symmetry is broken

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Orthonormal columns spanning the image of a Hermitian projector.
Eigen::MatrixXcd projector_image(const Eigen::MatrixXcd& proj, int rank) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(proj);
  const Eigen::VectorXd& ev = es.eigenvalues();
  Eigen::MatrixXcd q(proj.rows(), rank);
  int got = 0;
  for (int i = 0; i < ev.size(); ++i) {
    if (ev[i] > 0.5) {
      if (got == rank) {
        throw GysError("projector_image: rank larger than expected");
      }
      q.col(got++) = es.eigenvectors().col(i);
    }
  }
  if (got != rank) {
    throw GysError("projector_image: rank smaller than expected");
  }
  return q;
}

int matrix_set_rank(const std::vector<Eigen::MatrixXcd>& mats) {
  if (mats.empty()) return 0;
  const long m2 = mats.front().size();
  // Real vector space: stack Re and Im parts of each vectorized matrix.
  Eigen::MatrixXd stacked(static_cast<long>(mats.size()), 2 * m2);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    Eigen::Map<const Eigen::VectorXcd> v(mats[i].data(), m2);
    stacked.row(static_cast<long>(i)).head(m2) = v.real();
    stacked.row(static_cast<long>(i)).tail(m2) = v.imag();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv[i] > kRankTol * sv[0]) ++rank;
  }
  return rank;
}

// Dimension of {X : [X, K] = 0 for all K in probes}.
int commutant_dim(const std::vector<Eigen::MatrixXcd>& probes, int m) {
  const long m2 = static_cast<long>(m) * m;
  Eigen::MatrixXcd constraints(static_cast<long>(probes.size()) * m2, m2);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m, m);
  for (std::size_t p = 0; p < probes.size(); ++p) {
    // vec(XK - KX) = (K^T (x) I - I (x) K) vec(X), column-major vec
    constraints.middleRows(static_cast<long>(p) * m2, m2) =
        kron(probes[p].transpose(), id) - kron(id, probes[p]);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(constraints);
  const Eigen::VectorXd& sv = svd.singularValues();
  double top = sv.size() ? sv[0] : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv[i] > std::max(kRankTol * top, 1e-12)) ++rank;
  }
  return static_cast<int>(m2) - rank;
}

bool commutant_is_scalars(const std::vector<Eigen::MatrixXcd>& blocks, int m,
                          uint64_t seed) {
  if (blocks.empty()) return m == 1;
  // Two random combinations almost surely pin the commutant down; a null
  // space of dimension one is conclusive, anything larger gets the full
  // constraint set.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<Eigen::MatrixXcd> probes;
  for (int t = 0; t < 2; ++t) {
    Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(m, m);
    for (const Eigen::MatrixXcd& b : blocks) k += gauss(rng) * b;
    probes.push_back(std::move(k));
  }
  if (commutant_dim(probes, m) == 1) return true;
  return commutant_dim(blocks, m) == 1;
}

}  // namespace

std::vector<InvariantSubspace> invariant_subspaces(const RegisterSpec& reg,
                                                   uint64_t seed) {
  const auto proj_c = gys_projectors(reg.nc, seed);
  const auto proj_p = gys_projectors(reg.np, seed);
  std::vector<InvariantSubspace> out;
  for (const GysProjector& pc : proj_c) {
    Eigen::MatrixXcd qc = projector_image(pc.matrix, pc.rank);
    for (const GysProjector& pp : proj_p) {
      Eigen::MatrixXcd qp = projector_image(pp.matrix, pp.rank);
      InvariantSubspace sub;
      sub.basis = kron(qc, qp);
      sub.m = pc.rank * pp.rank;
      sub.shape_c = pc.shape;
      sub.idx_c = pc.label;
      sub.shape_p = pp.shape;
      sub.idx_p = pp.label;
      out.push_back(std::move(sub));
    }
  }
  return out;
}

Eigen::MatrixXcd restrict_to(const Operator& a, const InvariantSubspace& sub,
                             double* leakage) {
  Eigen::MatrixXcd dense = to_matrix(a);
  if (dense.rows() != sub.basis.rows()) {
    throw DimensionError("restrict_to: operator and subspace sizes differ");
  }
  Eigen::MatrixXcd ab = dense * sub.basis;
  Eigen::MatrixXcd block = sub.basis.adjoint() * ab;
  double leak = (ab - sub.basis * block).norm();
  if (leakage != nullptr) *leakage = leak;
  if (leak > kLeakHard * std::max(1.0, dense.norm())) {
    throw ValidationError(
        "restrict_to: operator leaks out of the invariant subspace");
  }
  return block;
}

BlockReport classify_block(const LieBasis& dla, const InvariantSubspace& sub) {
  BlockReport report;
  report.shape_c = sub.shape_c;
  report.idx_c = sub.idx_c;
  report.shape_p = sub.shape_p;
  report.idx_p = sub.idx_p;
  report.m = sub.m;

  const int m = sub.m;
  std::vector<Eigen::MatrixXcd> blocks, traceless;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m, m);
  for (const Operator& e : dla.elements) {
    double leak = 0;
    Eigen::MatrixXcd b = restrict_to(e, sub, &leak);
    report.leakage = std::max(report.leakage, leak);
    traceless.push_back(b - (b.trace() / static_cast<double>(m)) * id);
    blocks.push_back(std::move(b));
  }
  report.restricted_dim = matrix_set_rank(blocks);
  int rank0 = matrix_set_rank(traceless);
  report.has_identity = report.restricted_dim == rank0 + 1;

  if (m == 1) {
    report.verdict = "trivial";
    return report;
  }
  if (rank0 == m * m - 1 && commutant_is_scalars(blocks, m, 0x5eed)) {
    report.verdict = report.has_identity ? "u" : "su";
  } else {
    report.verdict = "deficient";
  }
  return report;
}

ControllabilityReport analyze(const ModelParams& p, uint64_t seed) {
  ControllabilityReport report;
  report.reg = p.reg;
  report.gamma_c = p.gamma_c;
  report.gamma_p = p.gamma_p;
  report.outside_assumption = p.gamma_degenerate();

  LieBasis dla = closure(model_generators(p));
  report.dla_dim = dla.dim();
  bool all_good = true;
  for (const InvariantSubspace& sub : invariant_subspaces(p.reg, seed)) {
    report.blocks.push_back(classify_block(dla, sub));
    all_good = all_good && report.blocks.back().controllable();
  }
  report.subspace_controllable = all_good;
  return report;
}

nlohmann::ordered_json report_to_json(const ControllabilityReport& report) {
  nlohmann::ordered_json j;
  j["nc"] = report.reg.nc;
  j["np"] = report.reg.np;
  j["gamma"] = {report.gamma_c, report.gamma_p};
  j["dla_dim"] = report.dla_dim;
  j["blocks"] = nlohmann::ordered_json::array();
  for (const BlockReport& b : report.blocks) {
    nlohmann::ordered_json jb;
    jb["shape_c"] = b.shape_c.str();
    jb["idx_c"] = b.idx_c;
    jb["shape_p"] = b.shape_p.str();
    jb["idx_p"] = b.idx_p;
    jb["m"] = b.m;
    jb["restricted_dim"] = b.restricted_dim;
    jb["verdict"] = b.verdict;
    jb["leakage"] = b.leakage;
    j["blocks"].push_back(std::move(jb));
  }
  j["subspace_controllable"] = report.subspace_controllable;
  if (report.outside_assumption) j["outside_assumption"] = true;
  return j;
}

}  // namespace spindla
