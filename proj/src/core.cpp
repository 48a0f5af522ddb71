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

#include "fkreg/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fkreg/kernels.hpp"

namespace fkreg {

void check_index(Index v, Index n, std::string_view what) {
  if (v >= n) {
    throw InputError(std::string(what) + " index " + std::to_string(v) +
                     " out of range for dimension " + std::to_string(n));
  }
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Index n) : n_(n), data_(n * n, 0.0) {
  if (n == 0) throw InputError("matrix dimension must be at least 1");
}

Matrix::Matrix(Index n, std::vector<double> entries) : n_(n), data_(std::move(entries)) {
  if (n == 0) throw InputError("matrix dimension must be at least 1");
  if (data_.size() != n * n) throw InputError("matrix entry count does not match n*n");
  for (double x : data_) {
    if (!std::isfinite(x)) throw InputError("matrix entries must be finite");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  n_ = rows.size();
  if (n_ == 0) throw InputError("matrix dimension must be at least 1");
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw InputError("matrix rows must all have length n");
    for (double x : r) {
      if (!std::isfinite(x)) throw InputError("matrix entries must be finite");
      data_.push_back(x);
    }
  }
}

Matrix Matrix::ones(Index n) { return Matrix(n, std::vector<double>(n * n, 1.0)); }

Matrix Matrix::identity(Index n) {
  Matrix m(n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::vector<Index> indices, Index ambient_n) : indices_(std::move(indices)) {
  for (std::size_t p = 0; p < indices_.size(); ++p) {
    check_index(indices_[p], ambient_n, "vertex set");
    if (p > 0 && indices_[p] <= indices_[p - 1]) {
      throw InputError("vertex set must be strictly increasing");
    }
  }
}

VertexSet VertexSet::from_unsorted(std::vector<Index> indices, Index ambient_n) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return VertexSet(std::move(indices), ambient_n);
}

VertexSet VertexSet::all(Index n) {
  std::vector<Index> idx(n);
  for (Index i = 0; i < n; ++i) idx[i] = i;
  VertexSet s;
  s.indices_ = std::move(idx);
  return s;
}

bool VertexSet::contains(Index v) const {
  return std::binary_search(indices_.begin(), indices_.end(), v);
}

std::string_view to_string(Mode mode) {
  return mode == Mode::kFaithful ? "faithful" : "practical";
}

Mode parse_mode(std::string_view text) {
  if (text == "faithful") return Mode::kFaithful;
  if (text == "practical") return Mode::kPractical;
  throw InputError("unknown mode '" + std::string(text) + "' (expected faithful|practical)");
}

// ---------------------------------------------------------------- WeightedGraph

WeightedGraph::WeightedGraph(Index n) : weights_(n) {}

WeightedGraph::WeightedGraph(Matrix weights) : weights_(std::move(weights)) {
  const Index n = weights_.n();
  for (Index u = 0; u < n; ++u) {
    if (weights_(u, u) != 0.0) throw InputError("graph must not contain self-loops");
    for (Index v = u + 1; v < n; ++v) {
      const double w = weights_(u, v);
      if (w != weights_(v, u)) throw InputError("graph weights must be symmetric");
      if (!(w >= 0.0 && w <= 1.0)) throw InputError("graph weights must lie in [0,1]");
    }
  }
}

void WeightedGraph::set_edge(Index u, Index v, double w) {
  check_index(u, n(), "edge endpoint");
  check_index(v, n(), "edge endpoint");
  if (u == v) throw InputError("graph must not contain self-loops");
  if (!(w >= 0.0 && w <= 1.0)) throw InputError("graph weights must lie in [0,1]");
  weights_(u, v) = w;
  weights_(v, u) = w;
}

// ---------------------------------------------------------------- PatternGraph

PatternGraph::PatternGraph(Index k, std::vector<Edge> edges) : k_(k), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    check_index(e.first, k_, "pattern vertex");
    check_index(e.second, k_, "pattern vertex");
    if (e.first == e.second) throw InputError("pattern graph must not contain loops");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InputError("pattern graph contains a duplicate edge");
  }
}

PatternGraph PatternGraph::edge() { return PatternGraph(2, {{0, 1}}); }
PatternGraph PatternGraph::triangle() { return complete(3); }

PatternGraph PatternGraph::cycle(Index k) {
  if (k < 3) throw InputError("cycles need at least 3 vertices");
  std::vector<Edge> e;
  for (Index i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return PatternGraph(k, std::move(e));
}

PatternGraph PatternGraph::complete(Index k) {
  std::vector<Edge> e;
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return PatternGraph(k, std::move(e));
}

PatternGraph PatternGraph::without_edge(const Edge& e) const {
  PatternGraph h = *this;
  std::erase(h.edges_, e);
  return h;
}

// ---------------------------------------------------------------- operations

double rect_sum(const Matrix& a, const VertexSet& rows, const VertexSet& cols) {
  if (!rows.empty()) check_index(rows.indices().back(), a.n(), "row set");
  if (!cols.empty()) check_index(cols.indices().back(), a.n(), "column set");
  return kernels::rect_sum(a, rows.indices(), cols.indices());
}

void subtract_cut_in_place(Matrix& a, double t, const VertexSet& rows, const VertexSet& cols) {
  if (!rows.empty()) check_index(rows.indices().back(), a.n(), "row set");
  if (!cols.empty()) check_index(cols.indices().back(), a.n(), "column set");
  for (Index i : rows) {
    auto r = a.row(i);
    for (Index k : cols) r[k] -= t;
  }
}

Matrix subtract_cut(const Matrix& a, double t, const VertexSet& rows, const VertexSet& cols) {
  Matrix out = a;
  subtract_cut_in_place(out, t, rows, cols);
  return out;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (double x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

Norms norms(const Matrix& a) {
  Norms out;
  out.row_l2_sq.resize(a.n());
  out.col_l2_sq.resize(a.n());
  kernels::row_sq_norms(a, out.row_l2_sq);
  kernels::col_sq_norms(a, out.col_l2_sq);
  for (double r : out.row_l2_sq) out.frobenius_sq += r;
  out.max_abs = max_abs(a);
  return out;
}

CenteredGraph graph_to_matrix(const WeightedGraph& g) {
  const Matrix& adj = g.adjacency();
  const Index n = adj.n();
  double total = 0.0;
  for (Index i = 0; i < n; ++i) {
    double row_total = 0.0;
    for (double w : adj.row(i)) row_total += w;
    total += row_total;
  }
  const double density = total / (static_cast<double>(n) * static_cast<double>(n));
  Matrix centered = adj;
  for (double& x : centered.data()) x -= density;
  return {std::move(centered), density};
}

Matrix residual(const Matrix& a, const CutDecomposition& d) {
  if (d.n != a.n()) throw InputError("decomposition dimension does not match matrix");
  Matrix out = a;
  if (d.base != 0.0) {
    for (double& x : out.data()) x -= d.base;
  }
  for (const auto& term : d.terms) subtract_cut_in_place(out, term.weight, term.rows, term.cols);
  return out;
}

}  // namespace fkreg
