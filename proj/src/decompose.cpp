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

#include "fkreg/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "fkreg/kernels.hpp"
#include "fkreg/oracle.hpp"
#include "fkreg/spectral_test.hpp"

namespace fkreg {
namespace {

double eps8(double epsilon) {
  const double e2 = epsilon * epsilon;
  const double e4 = e2 * e2;
  return e4 * e4;
}

// Halvings of the practical step before snapping to the faithful step.
constexpr int kMaxHalvings = 60;

struct WorkingNorms {
  std::vector<double> row;
  std::vector<double> col;
  double frobenius_sq = 0.0;
};

WorkingNorms working_norms(const Matrix& a) {
  Norms nm = norms(a);
  return {std::move(nm.row_l2_sq), std::move(nm.col_l2_sq), nm.frobenius_sq};
}

// Largest squared row/column norm any touched line would reach after
// subtracting t on the rectangle, computed from the pre-update sums.
bool step_keeps_norms(const WorkingNorms& wn, const TrimResult& tr, int sign, double t, double n) {
  const double signed_t = sign * t;  // sums in tr are already multiplied by sign
  const auto width = static_cast<double>(tr.cols.size());
  const auto height = static_cast<double>(tr.rows.size());
  for (std::size_t p = 0; p < tr.rows.size(); ++p) {
    const double next = wn.row[tr.rows.indices()[p]] - 2.0 * signed_t * tr.row_sums[p] + width * t * t;
    if (next > n) return false;
  }
  for (std::size_t p = 0; p < tr.cols.size(); ++p) {
    const double next = wn.col[tr.cols.indices()[p]] - 2.0 * signed_t * tr.col_sums[p] + height * t * t;
    if (next > n) return false;
  }
  return true;
}

}  // namespace

double faithful_weight(double epsilon) { return eps8(epsilon) / 300.0; }
double witness_fraction(double epsilon) { return eps8(epsilon) / 100.0; }

std::uint64_t default_iteration_cap(double epsilon) {
  const double bound = 30000.0 / (eps8(epsilon) * eps8(epsilon));
  if (!(bound < 1e6)) return 1000000;
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(bound)));
}

TrimResult trim(const Matrix& a, const VertexSet& rows, const VertexSet& cols, double eps_prime,
                int sign) {
  const Index n = a.n();
  const auto nn = static_cast<double>(n);
  const double s = sign < 0 ? -1.0 : 1.0;
  const double start = s * rect_sum(a, rows, cols);
  if (!(start >= eps_prime * nn * nn)) {
    throw InputError("trim precondition violated: signed rectangle sum below eps' n^2");
  }

  const auto ri = rows.indices();
  const auto ci = cols.indices();
  std::vector<double> rsum(ri.size(), 0.0);
  std::vector<double> csum(ci.size(), 0.0);
  for (std::size_t p = 0; p < ri.size(); ++p) {
    const auto r = a.row(ri[p]);
    for (std::size_t q = 0; q < ci.size(); ++q) {
      rsum[p] += s * r[ci[q]];
      csum[q] += s * r[ci[q]];
    }
  }

  std::vector<char> row_alive(ri.size(), 1);
  std::vector<char> col_alive(ci.size(), 1);
  const double threshold = eps_prime * nn / 6.0;
  for (;;) {
    std::size_t victim = ri.size();
    for (std::size_t p = 0; p < ri.size() && victim == ri.size(); ++p)
      if (row_alive[p] && rsum[p] < threshold) victim = p;
    if (victim < ri.size()) {
      row_alive[victim] = 0;
      const auto r = a.row(ri[victim]);
      for (std::size_t q = 0; q < ci.size(); ++q)
        if (col_alive[q]) csum[q] -= s * r[ci[q]];
      continue;
    }
    victim = ci.size();
    for (std::size_t q = 0; q < ci.size() && victim == ci.size(); ++q)
      if (col_alive[q] && csum[q] < threshold) victim = q;
    if (victim == ci.size()) break;
    col_alive[victim] = 0;
    for (std::size_t p = 0; p < ri.size(); ++p)
      if (row_alive[p]) rsum[p] -= s * a(ri[p], ci[victim]);
  }

  std::vector<Index> kept_rows;
  std::vector<Index> kept_cols;
  for (std::size_t p = 0; p < ri.size(); ++p)
    if (row_alive[p]) kept_rows.push_back(ri[p]);
  for (std::size_t q = 0; q < ci.size(); ++q)
    if (col_alive[q]) kept_cols.push_back(ci[q]);
  if (kept_rows.empty() || kept_cols.empty()) {
    throw Error("trimming emptied the rectangle (rounding at the eps' n^2 boundary)");
  }

  TrimResult out;
  out.rows = VertexSet(std::move(kept_rows), n);
  out.cols = VertexSet(std::move(kept_cols), n);
  out.row_sums.resize(out.rows.size());
  for (std::size_t p = 0; p < out.rows.size(); ++p) {
    const auto r = a.row(out.rows.indices()[p]);
    double acc = 0.0;
    for (Index k : out.cols) acc += r[k];
    out.row_sums[p] = s * acc;
  }
  out.col_sums.assign(out.cols.size(), 0.0);
  for (Index i : out.rows) {
    const auto r = a.row(i);
    for (std::size_t q = 0; q < out.cols.size(); ++q) out.col_sums[q] += r[out.cols.indices()[q]];
  }
  for (double& c : out.col_sums) c *= s;
  out.total = s * rect_sum(a, out.rows, out.cols);
  return out;
}

DecomposeOutcome run_decomposition(const Matrix& a, double epsilon, const DecomposeConfig& config) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  const Index n = a.n();
  const auto nn = static_cast<double>(n);
  const bool faithful = config.mode == Mode::kFaithful;
  const double eps_prime = witness_fraction(epsilon);
  const double step = faithful_weight(epsilon);
  const std::uint64_t cap = config.max_iterations ? config.max_iterations : default_iteration_cap(epsilon);

  DecomposeOutcome out;
  out.residual = a;
  Matrix& cur = out.residual;
  WorkingNorms wn = working_norms(cur);

  {
    const double limit = nn * (1.0 + 1e-9);
    if (max_abs(cur) > 1.0 + 1e-12) throw InputError("decomposition input entries must lie in [-1,1]");
    for (Index i = 0; i < n; ++i)
      if (wn.row[i] > limit || wn.col[i] > limit)
        throw InputError("decomposition input rows/columns must have squared L2 norm <= n");
  }

  const bool heuristic = config.sketch_degree.has_value();
  ExpanderSketch sketch;
  if (heuristic) {
    sketch = build_sketch(n, *config.sketch_degree, config.sketch);
  } else {
    // Entries never exceed sqrt(n) while every row has squared norm <= n.
    const double c_max = faithful ? 1.0 + static_cast<double>(cap) * eps_prime / 3.0
                                  : std::max(1.0, std::sqrt(nn));
    sketch = build_sketch(n, std::max(1.0, certified_degree(c_max, epsilon)), config.sketch);
    if (!sketch.certified_for(c_max, epsilon)) sketch = exact_sketch(n);
  }
  out.sketch_exact = sketch.exact;
  const bool oracle_check = config.oracle_check.value_or(heuristic);

  CutDecomposition& dec = out.decomposition;
  dec.n = n;
  dec.epsilon = epsilon;
  dec.mode = config.mode;

  for (std::uint64_t l = 0;; ++l) {
    const double entry_bound = faithful ? 1.0 + static_cast<double>(l) * eps_prime / 3.0
                                        : std::max(1.0, max_abs(cur));
    const Verdict verdict = singular_test(cur, epsilon, sketch, entry_bound);
    if (const auto* reg = std::get_if<Regular>(&verdict)) {
      dec.certified = reg->certified;
      if (oracle_check) {
        const auto est = oracle::top_singular(cur, config.oracle_iterations);
        out.oracle_sigma = est.value;
        if (est.value > epsilon * nn * (1.0 + 1e-9)) {
          throw SketchTooWeakError("heuristic sketch accepted a residual with singular value " +
                                   std::to_string(est.value) + " > eps*n");
        }
      }
      break;
    }
    const auto& w = std::get<Witness>(verdict);
    if (l >= cap) {
      dec.complete = false;
      dec.certified = false;
      out.iterations = l;
      out.final_frobenius_sq = wn.frobenius_sq;
      throw PartialResultError("iteration cap of " + std::to_string(cap) + " terms reached",
                               std::move(out));
    }

    TrimResult tr = trim(cur, w.rows, w.cols, eps_prime, w.sign);
    const double sign = w.sign;
    double t = sign * step;
    if (!faithful) {
      const double area = static_cast<double>(tr.rows.size()) * static_cast<double>(tr.cols.size());
      double candidate = sign * tr.total / area;  // greedy rectangle mean
      int halvings = 0;
      while (!step_keeps_norms(wn, tr, w.sign, std::abs(candidate), nn)) {
        if (++halvings > kMaxHalvings) {
          candidate = t;
          break;
        }
        candidate = 0.5 * (candidate + t);
      }
      t = candidate;
    }

    const double frob_before = wn.frobenius_sq;
    std::vector<double> before_rows;
    std::vector<double> before_cols;
    for (Index i : tr.rows) before_rows.push_back(wn.row[i]);
    for (Index k : tr.cols) before_cols.push_back(wn.col[k]);

    subtract_cut_in_place(cur, t, tr.rows, tr.cols);
    dec.terms.push_back({tr.rows, tr.cols, t});

    double growth = -std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < tr.rows.size(); ++p) {
      const Index i = tr.rows.indices()[p];
      double acc = 0.0;
      for (double x : cur.row(i)) acc += x * x;
      wn.row[i] = acc;
      growth = std::max(growth, acc - before_rows[p]);
    }
    {
      std::vector<double> acc(tr.cols.size(), 0.0);
      for (Index i = 0; i < n; ++i) {
        const auto r = cur.row(i);
        for (std::size_t q = 0; q < tr.cols.size(); ++q) {
          const double x = r[tr.cols.indices()[q]];
          acc[q] += x * x;
        }
      }
      for (std::size_t q = 0; q < tr.cols.size(); ++q) {
        wn.col[tr.cols.indices()[q]] = acc[q];
        growth = std::max(growth, acc[q] - before_cols[q]);
      }
    }
    wn.frobenius_sq = 0.0;
    for (double r : wn.row) wn.frobenius_sq += r;

    if (config.on_iteration) {
      IterationRecord rec;
      rec.iteration = l;
      rec.term = &dec.terms.back();
      rec.sign = w.sign;
      rec.witness_discrepancy = w.discrepancy;
      rec.trimmed_sum = tr.total;
      rec.entry_bound = entry_bound;
      rec.frobenius_sq_before = frob_before;
      rec.frobenius_sq_after = wn.frobenius_sq;
      rec.max_row_l2_sq = *std::max_element(wn.row.begin(), wn.row.end());
      rec.max_col_l2_sq = *std::max_element(wn.col.begin(), wn.col.end());
      rec.max_abs = max_abs(cur);
      rec.max_touched_l2_increase = growth;
      rec.matrix = &cur;
      config.on_iteration(rec);
    }
  }

  out.iterations = dec.terms.size();
  out.final_frobenius_sq = wn.frobenius_sq;
  return out;
}

CutDecomposition decompose_matrix(const Matrix& a, double epsilon, const DecomposeConfig& config) {
  return run_decomposition(a, epsilon, config).decomposition;
}

DecomposeOutcome run_graph_decomposition(const WeightedGraph& g, double epsilon,
                                         const DecomposeConfig& config) {
  CenteredGraph centered = graph_to_matrix(g);
  try {
    DecomposeOutcome out = run_decomposition(centered.matrix, epsilon, config);
    out.decomposition.base = centered.density;
    return out;
  } catch (PartialResultError& partial) {
    partial.outcome().decomposition.base = centered.density;
    throw;
  }
}

CutDecomposition decompose_graph(const WeightedGraph& g, double epsilon, const DecomposeConfig& config) {
  return run_graph_decomposition(g, epsilon, config).decomposition;
}

FKPartition refine_partition(Index n, std::span<const CutTerm> terms, const WeightedGraph& g) {
  if (g.n() != n) throw InputError("partition dimension does not match graph");
  for (const auto& t : terms) {
    if (!t.rows.empty()) check_index(t.rows.indices().back(), n, "term row");
    if (!t.cols.empty()) check_index(t.cols.indices().back(), n, "term column");
  }

  std::vector<std::vector<char>> signature(n, std::vector<char>(2 * terms.size(), 0));
  for (std::size_t r = 0; r < terms.size(); ++r) {
    for (Index v : terms[r].rows) signature[v][2 * r] = 1;
    for (Index v : terms[r].cols) signature[v][2 * r + 1] = 1;
  }

  FKPartition p;
  p.part_of.resize(n);
  std::map<std::vector<char>, Index> ids;
  for (Index v = 0; v < n; ++v) {
    const auto [it, inserted] = ids.emplace(signature[v], ids.size());
    p.part_of[v] = it->second;
  }
  p.part_count = ids.size();

  const Index k = p.part_count;
  std::vector<double> sums(k * k, 0.0);
  std::vector<double> sizes(k, 0.0);
  for (Index u = 0; u < n; ++u) {
    sizes[p.part_of[u]] += 1.0;
    const auto row = g.adjacency().row(u);
    for (Index v = 0; v < n; ++v) sums[p.part_of[u] * k + p.part_of[v]] += row[v];
  }
  p.densities.resize(k * k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) p.densities[i * k + j] = sums[i * k + j] / (sizes[i] * sizes[j]);
  return p;
}

}  // namespace fkreg
