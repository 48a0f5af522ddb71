// Copyright 2026 The fkreg Authors.
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

#include "fkreg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fkreg/kernels.hpp"

namespace fkreg::oracle {
namespace {

double l2(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

struct SubsetScore {
  double value = -1.0;
  std::uint64_t mask = 0;
  bool positive = true;
};

// Strictly better value, or equal value with a smaller subset encoding.
bool better(const SubsetScore& a, const SubsetScore& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.mask < b.mask;
}

SubsetScore score_columns(std::span<const double> col, std::uint64_t mask) {
  double pos = 0.0;
  double neg = 0.0;
  for (double c : col) {
    if (c > 0.0) pos += c;
    else if (c < 0.0) neg -= c;
  }
  return pos >= neg ? SubsetScore{pos, mask, true} : SubsetScore{neg, mask, false};
}

CutNorm finish(const Matrix& a, const SubsetScore& best) {
  const Index n = a.n();
  std::vector<Index> rows;
  for (Index i = 0; i < n; ++i)
    if ((best.mask >> i) & 1u) rows.push_back(i);
  std::vector<double> col(n, 0.0);
  for (Index i : rows)
    for (Index k = 0; k < n; ++k) col[k] += a(i, k);
  std::vector<Index> cols;
  for (Index k = 0; k < n; ++k)
    if (best.positive ? col[k] > 0.0 : col[k] < 0.0) cols.push_back(k);
  return {best.value, VertexSet(std::move(rows), n), VertexSet(std::move(cols), n)};
}

// Low bits enumerated by Gray code inside one chunk; column sums are rebuilt
// at the start of every chunk so results do not depend on the thread count.
constexpr unsigned kChunkBits = 12;

}  // namespace

SingularEstimate top_singular(const Matrix& a, int max_iterations, double tol) {
  const Index n = a.n();
  std::vector<double> v(n);
  for (Index i = 0; i < n; ++i) v[i] = 1.0 + static_cast<double>(i) / static_cast<double>(n);
  const double v0 = l2(v);
  for (double& x : v) x /= v0;

  std::vector<double> av(n);
  std::vector<double> atav(n);
  SingularEstimate est;
  kernels::matvec(a, v, av);
  est.value = l2(av);
  for (int it = 1; it <= std::max(1, max_iterations); ++it) {
    if (est.value == 0.0) {
      est.converged = true;
      break;
    }
    kernels::matvec_transposed(a, av, atav);
    const double norm = l2(atav);
    if (norm == 0.0) {
      est.converged = true;
      break;
    }
    for (Index i = 0; i < n; ++i) v[i] = atav[i] / norm;
    kernels::matvec(a, v, av);
    const double next = l2(av);
    est.iterations = it;
    const double change = std::abs(next - est.value);
    est.value = std::max(est.value, next);
    if (change <= tol * est.value) {
      est.converged = true;
      break;
    }
  }
  return est;
}

CutNorm exact_cut_norm(const Matrix& a) {
  const Index n = a.n();
  if (n > kMaxExhaustiveN) {
    throw InputError("exact cut norm limited to n <= " + std::to_string(kMaxExhaustiveN));
  }
  const unsigned low_bits = std::min<unsigned>(kChunkBits, static_cast<unsigned>(n));
  const std::uint64_t chunks = std::uint64_t{1} << (n - low_bits);
  const std::uint64_t per_chunk = std::uint64_t{1} << low_bits;

  std::vector<SubsetScore> chunk_best(chunks);
  const auto chunk_count = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunk_count; ++c) {
    const std::uint64_t high = static_cast<std::uint64_t>(c) << low_bits;
    std::vector<double> col(n, 0.0);
    for (Index i = low_bits; i < n; ++i) {
      if ((high >> i) & 1u) {
        const auto r = a.row(i);
        for (Index k = 0; k < n; ++k) col[k] += r[k];
      }
    }
    SubsetScore best = score_columns(col, high);
    std::uint64_t gray = 0;
    for (std::uint64_t j = 1; j < per_chunk; ++j) {
      const std::uint64_t next = j ^ (j >> 1);
      const auto flip = static_cast<Index>(std::countr_zero(next ^ gray));
      const auto r = a.row(flip);
      if ((next >> flip) & 1u) {
        for (Index k = 0; k < n; ++k) col[k] += r[k];
      } else {
        for (Index k = 0; k < n; ++k) col[k] -= r[k];
      }
      gray = next;
      const SubsetScore s = score_columns(col, high | gray);
      if (better(s, best)) best = s;
    }
    chunk_best[static_cast<std::size_t>(c)] = best;
  }
  SubsetScore best = chunk_best.front();
  for (const auto& s : chunk_best)
    if (better(s, best)) best = s;
  return finish(a, best);
}

CutNorm exact_cut_norm_reference(const Matrix& a) {
  const Index n = a.n();
  if (n > kMaxExhaustiveN) {
    throw InputError("exact cut norm limited to n <= " + std::to_string(kMaxExhaustiveN));
  }
  SubsetScore best;
  std::vector<double> col(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::fill(col.begin(), col.end(), 0.0);
    for (Index i = 0; i < n; ++i)
      if ((mask >> i) & 1u)
        for (Index k = 0; k < n; ++k) col[k] += a(i, k);
    const SubsetScore s = score_columns(col, mask);
    if (better(s, best)) best = s;
  }
  return finish(a, best);
}

Matrix partition_residual(const WeightedGraph& g, const FKPartition& partition) {
  const Index n = g.n();
  if (partition.part_of.size() != n) throw InputError("partition does not match graph");
  Matrix b = g.adjacency();
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v) b(u, v) -= partition.density(partition.part_of[u], partition.part_of[v]);
  return b;
}

double fk_discrepancy(const WeightedGraph& g, const FKPartition& partition, bool normalized) {
  const double value = exact_cut_norm(partition_residual(g, partition)).value;
  if (!normalized) return value;
  const auto nn = static_cast<double>(g.n());
  return value / (nn * nn);
}

std::vector<double> symmetric_eigenvalues(const Matrix& input) {
  const Index n = input.n();
  Matrix a = input;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (a(i, j) != a(j, i)) throw InputError("symmetric_eigenvalues needs a symmetric matrix");

  double total = 0.0;
  for (double x : a.data()) total += x * x;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off <= 1e-30 * total || off == 0.0) break;
    for (Index p = 0; p < n; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (Index i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

double spectral_norm_dense(const Matrix& a) {
  const Index n = a.n();
  Matrix gram(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      double acc = 0.0;
      for (Index k = 0; k < n; ++k) acc += a(k, i) * a(k, j);
      gram(i, j) = acc;
    }
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) gram(j, i) = gram(i, j);
  const auto eig = symmetric_eigenvalues(gram);
  return std::sqrt(std::max(0.0, eig.back()));
}

double trace_power(const Matrix& a, unsigned k) {
  if (k == 0) return static_cast<double>(a.n());
  const Index n = a.n();
  Matrix p = a;
  Matrix tmp(n);
  for (unsigned step = 1; step < k; ++step) {
    for (Index i = 0; i < n; ++i) {
      auto out = tmp.row(i);
      std::fill(out.begin(), out.end(), 0.0);
      for (Index l = 0; l < n; ++l) {
        const double pil = p(i, l);
        if (pil == 0.0) continue;
        const auto r = a.row(l);
        for (Index j = 0; j < n; ++j) out[j] += pil * r[j];
      }
    }
    std::swap(p, tmp);
  }
  double tr = 0.0;
  for (Index i = 0; i < n; ++i) tr += p(i, i);
  return tr;
}

double exact_hom_enumerate(const PatternGraph& h, const WeightedGraph& g, double budget) {
  const Index n = g.n();
  const Index k = h.k();
  if (std::pow(static_cast<double>(n), static_cast<double>(k)) > budget) {
    throw ResourceError("hom enumeration exceeds budget");
  }
  // back[v]: earlier endpoints of edges whose later endpoint is v.
  std::vector<std::vector<Index>> back(k);
  for (const auto& [u, v] : h.edges()) back[v].push_back(u);

  std::vector<Index> image(k);
  double total = 0.0;
  const auto& adj = g.adjacency();
  std::function<void(Index, double)> walk = [&](Index depth, double weight) {
    if (depth == k) {
      total += weight;
      return;
    }
    for (Index x = 0; x < n; ++x) {
      double w = weight;
      for (Index u : back[depth]) w *= adj(image[u], x);
      if (w == 0.0) continue;
      image[depth] = x;
      walk(depth + 1, w);
    }
  };
  walk(0, 1.0);
  return total;
}

double exact_hom(const PatternGraph& h, const WeightedGraph& g, double budget) {
  const Index k = h.k();
  const auto& edges = h.edges();
  if (edges.empty()) return std::pow(static_cast<double>(g.n()), static_cast<double>(k));
  if (k == 2 && edges.size() == 1) {
    double total = 0.0;
    for (double w : g.adjacency().data()) total += w;
    return total;
  }
  if (k >= 3 && edges.size() == k) {
    std::vector<std::vector<Index>> nb(k);
    for (const auto& [u, v] : edges) {
      nb[u].push_back(v);
      nb[v].push_back(u);
    }
    bool two_regular = std::all_of(nb.begin(), nb.end(), [](const auto& x) { return x.size() == 2; });
    if (two_regular) {
      Index prev = 0;
      Index at = nb[0][0];
      Index length = 1;
      while (at != 0) {
        const Index next = nb[at][0] == prev ? nb[at][1] : nb[at][0];
        prev = at;
        at = next;
        ++length;
      }
      if (length == k) return trace_power(g.adjacency(), static_cast<unsigned>(k));
    }
  }
  return exact_hom_enumerate(h, g, budget);
}

}  // namespace fkreg::oracle
