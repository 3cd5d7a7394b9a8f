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

#include "spindla/symgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace spindla {

int Partition::n() const {
  return std::accumulate(rows.begin(), rows.end(), 0);
}

bool Partition::valid() const {
  if (rows.empty()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 1) return false;
    if (i > 0 && rows[i] > rows[i - 1]) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(rows[i]);
  }
  return s + ")";
}

namespace {

void enumerate_partitions(int remaining, int cap, std::vector<int>& acc,
                          std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int part = std::min(remaining, cap); part >= 1; --part) {
    acc.push_back(part);
    enumerate_partitions(remaining - part, part, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 1) throw DimensionError("partitions: n must be >= 1");
  std::vector<Partition> out;
  std::vector<int> acc;
  enumerate_partitions(n, n, acc, out);
  return out;
}

namespace {

void fill_tableaux(const Partition& shape, std::vector<std::vector<int>>& rows,
                   std::vector<int>& filled, int next,
                   std::vector<StandardTableau>& out) {
  if (next > shape.n()) {
    out.push_back({shape, rows});
    return;
  }
  for (std::size_t r = 0; r < shape.rows.size(); ++r) {
    int col = filled[r];
    if (col >= shape.rows[r]) continue;
    if (r > 0 && filled[r - 1] <= col) continue;  // column must grow downward
    rows[r][col] = next;
    ++filled[r];
    fill_tableaux(shape, rows, filled, next + 1, out);
    --filled[r];
  }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  if (!shape.valid()) throw DimensionError("standard_tableaux: bad partition");
  std::vector<std::vector<int>> rows;
  for (int len : shape.rows) rows.emplace_back(len, 0);
  std::vector<int> filled(shape.rows.size(), 0);
  std::vector<StandardTableau> out;
  fill_tableaux(shape, rows, filled, 1, out);
  return out;
}

long hook_length(const Partition& shape) {
  if (!shape.valid()) throw DimensionError("hook_length: bad partition");
  const auto& rows = shape.rows;
  long h = 1;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < rows[r]; ++c) {
      int arm = rows[r] - c - 1;
      int leg = 0;
      for (std::size_t r2 = r + 1; r2 < rows.size(); ++r2) {
        if (rows[r2] > c) ++leg;
      }
      h *= arm + leg + 1;
    }
  }
  return h;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long tableau_count(const Partition& shape) {
  return factorial(shape.n()) / hook_length(shape);
}

int subspace_dim(const Partition& shape) {
  if (!shape.valid()) throw DimensionError("subspace_dim: bad partition");
  if (shape.rows.size() > 2) return 0;
  long num = 1;
  for (std::size_t r = 0; r < shape.rows.size(); ++r) {
    for (int c = 0; c < shape.rows[r]; ++c) {
      num *= 2 - static_cast<int>(r + 1) + (c + 1);
    }
  }
  return static_cast<int>(num / hook_length(shape));
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Partition cycle_type(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::vector<int> lengths;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(lengths);
}

namespace {

// Murnaghan-Nakayama via beta-numbers: removing a border strip of length t
// maps one beta-number down by t; the sign counts the betas jumped over.
long mn_character(std::vector<int> betas, std::vector<int> mu,
                  std::map<std::pair<std::vector<int>, std::vector<int>>, long>&
                      memo) {
  if (mu.empty()) return 1;
  auto key = std::make_pair(betas, mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int t = mu.back();  // consume smallest part last -> order irrelevant
  std::vector<int> mu_rest(mu.begin(), mu.end() - 1);
  long total = 0;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    int b = betas[i] - t;
    if (b < 0) continue;
    if (std::find(betas.begin(), betas.end(), b) != betas.end()) continue;
    int jumped = 0;
    for (int other : betas) {
      if (other < betas[i] && other > b) ++jumped;
    }
    std::vector<int> next = betas;
    next[i] = b;
    std::sort(next.rbegin(), next.rend());
    long sub = mn_character(next, mu_rest, memo);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

}  // namespace

long character(const Partition& shape, const Partition& type) {
  if (shape.n() != type.n()) {
    throw DimensionError("character: partition sizes differ");
  }
  const int r = static_cast<int>(shape.rows.size());
  std::vector<int> betas(r);
  for (int i = 0; i < r; ++i) betas[i] = shape.rows[i] + (r - 1 - i);
  static std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo;
  return mn_character(betas, type.rows, memo);
}

Eigen::MatrixXd perm_unitary(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) {
    throw DimensionError("perm_unitary: permutation size mismatch");
  }
  const long dim = 1L << n;
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(dim, dim);
  for (long x = 0; x < dim; ++x) {
    long y = 0;
    for (int i = 0; i < n; ++i) {
      long bit = (x >> (n - 1 - i)) & 1;
      y |= bit << (n - 1 - perm[i]);
    }
    u(y, x) = 1.0;
  }
  return u;
}

namespace {

// Basis-state image of a tensor-factor permutation, avoiding the dense matrix.
std::vector<long> state_map(const std::vector<int>& perm, int n) {
  const long dim = 1L << n;
  std::vector<long> map(dim);
  for (long x = 0; x < dim; ++x) {
    long y = 0;
    for (int i = 0; i < n; ++i) {
      long bit = (x >> (n - 1 - i)) & 1;
      y |= bit << (n - 1 - perm[i]);
    }
    map[x] = y;
  }
  return map;
}

struct ClusterSplit {
  std::vector<std::pair<int, int>> ranges;  // [begin, end) into eigenvalues
  bool ok = false;
};

ClusterSplit cluster_eigenvalues(const Eigen::VectorXd& w, int expected_count,
                                 int expected_size) {
  ClusterSplit split;
  const int m = static_cast<int>(w.size());
  double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
  const double tol = 1e-6 * scale;
  int begin = 0;
  for (int i = 1; i <= m; ++i) {
    if (i == m || w[i] - w[i - 1] > tol) {
      split.ranges.emplace_back(begin, i);
      begin = i;
    }
  }
  if (static_cast<int>(split.ranges.size()) != expected_count) return split;
  for (auto [b, e] : split.ranges) {
    if (e - b != expected_size) return split;
    if (w[e - 1] - w[b] > tol) return split;
  }
  split.ok = true;
  return split;
}

}  // namespace

std::vector<GysProjector> gys_projectors(int n, uint64_t seed) {
  if (n < 1 || n > max_qubits()) {
    throw DimensionError("gys_projectors: n out of range");
  }
  const long dim = 1L << n;
  const long group_order = factorial(n);
  const auto perms = all_permutations(n);
  std::vector<std::vector<long>> maps;
  maps.reserve(perms.size());
  for (const auto& p : perms) maps.push_back(state_map(p, n));

  struct ShapeInfo {
    Partition shape;
    int mult;  // subspace dimension per tableau
    long d;    // tableau count
    Eigen::MatrixXd isotypic;
  };
  std::vector<ShapeInfo> shapes;
  for (const Partition& shape : partitions(n)) {
    int mult = subspace_dim(shape);
    if (mult == 0) continue;
    ShapeInfo info{shape, mult, tableau_count(shape),
                   Eigen::MatrixXd::Zero(dim, dim)};
    std::map<std::vector<int>, long> chi_cache;
    for (std::size_t s = 0; s < perms.size(); ++s) {
      Partition type = cycle_type(perms[s]);
      auto [it, inserted] = chi_cache.try_emplace(type.rows, 0);
      if (inserted) it->second = character(shape, type);
      double coeff = static_cast<double>(info.d) *
                     static_cast<double>(it->second) /
                     static_cast<double>(group_order);
      if (coeff == 0.0) continue;
      for (long x = 0; x < dim; ++x) info.isotypic(maps[s][x], x) += coeff;
    }
    shapes.push_back(std::move(info));
  }

  std::string last_error;
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<uint64_t>(attempt));
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Eigen::MatrixXd generic = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t s = 0; s < perms.size(); ++s) {
      double c = unif(rng);
      for (long x = 0; x < dim; ++x) {
        generic(maps[s][x], x) += c;
        generic(x, maps[s][x]) += c;
      }
    }

    std::vector<GysProjector> out;
    bool good = true;
    for (const ShapeInfo& info : shapes) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(info.isotypic);
      const Eigen::VectorXd& ev = es.eigenvalues();
      std::vector<int> cols;
      for (int i = 0; i < ev.size(); ++i) {
        if (ev[i] > 0.5) cols.push_back(i);
      }
      const long block = info.d * info.mult;
      if (static_cast<long>(cols.size()) != block) {
        throw GysError("gys_projectors: isotypic rank mismatch for shape " +
                       info.shape.str());
      }
      Eigen::MatrixXd q(dim, block);
      for (long i = 0; i < block; ++i) q.col(i) = es.eigenvectors().col(cols[i]);

      Eigen::MatrixXd restricted = q.transpose() * generic * q;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> inner(restricted);
      ClusterSplit split = cluster_eigenvalues(
          inner.eigenvalues(), static_cast<int>(info.d), info.mult);
      if (!split.ok) {
        good = false;
        last_error = "eigenvalue clusters collide for shape " + info.shape.str();
        break;
      }
      for (std::size_t j = 0; j < split.ranges.size(); ++j) {
        auto [b, e] = split.ranges[j];
        Eigen::MatrixXd v = q * inner.eigenvectors().middleCols(b, e - b);
        GysProjector proj;
        proj.matrix = (v * v.transpose()).cast<cplx>();
        proj.shape = info.shape;
        proj.rank = info.mult;
        proj.label = static_cast<int>(j);
        out.push_back(std::move(proj));
      }
    }
    if (good) return out;
  }
  throw GysError("gys_projectors: " + last_error + " after 5 seeds");
}

GysProjector tensor_gys(const GysProjector& proj_c, const GysProjector& proj_p) {
  GysProjector out;
  const long dc = proj_c.matrix.rows();
  const long dp = proj_p.matrix.rows();
  out.matrix.resize(dc * dp, dc * dp);
  for (long i = 0; i < dc; ++i) {
    for (long j = 0; j < dc; ++j) {
      out.matrix.block(i * dp, j * dp, dp, dp) =
          proj_c.matrix(i, j) * proj_p.matrix;
    }
  }
  out.rank = proj_c.rank * proj_p.rank;
  out.label = -1;
  return out;
}

}  // namespace spindla
