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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "fkreg/error.hpp"

namespace fkreg {

using Index = std::size_t;

/// Dense n x n matrix of doubles, row-major. Entries are always finite.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix of dimension n (n >= 1).
  explicit Matrix(Index n);
  Matrix(Index n, std::vector<double> entries);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix zeros(Index n) { return Matrix(n); }
  static Matrix ones(Index n);
  static Matrix identity(Index n);

  Index n() const { return n_; }
  double operator()(Index i, Index k) const { return data_[i * n_ + k]; }
  double& operator()(Index i, Index k) { return data_[i * n_ + k]; }

  std::span<const double> row(Index i) const { return {data_.data() + i * n_, n_}; }
  std::span<double> row(Index i) { return {data_.data() + i * n_, n_}; }
  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Index n_ = 0;
  std::vector<double> data_;
};

/// Strictly increasing list of indices in [0, n).
class VertexSet {
 public:
  VertexSet() = default;
  /// Validates ordering, uniqueness and range against the ambient dimension.
  VertexSet(std::vector<Index> indices, Index ambient_n);
  /// Sorts and deduplicates before validating.
  static VertexSet from_unsorted(std::vector<Index> indices, Index ambient_n);
  static VertexSet all(Index n);

  std::span<const Index> indices() const { return indices_; }
  Index size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(Index v) const;
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Index> indices_;
};

enum class Mode { kFaithful, kPractical };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// One weighted cut matrix c * 1_S 1_T^T.
struct CutTerm {
  VertexSet rows;
  VertexSet cols;
  double weight = 0.0;

  friend bool operator==(const CutTerm&, const CutTerm&) = default;
};

/// base * J + sum of cut terms, approximating an n x n matrix.
struct CutDecomposition {
  Index n = 0;
  double base = 0.0;
  std::vector<CutTerm> terms;
  double epsilon = 0.0;
  Mode mode = Mode::kPractical;
  /// True when the terminating spectral verdict came from a certified sketch.
  bool certified = false;
  /// False for partial results returned after the iteration cap.
  bool complete = true;

  friend bool operator==(const CutDecomposition&, const CutDecomposition&) = default;
};

/// Simple graph with [0,1] edge weights, stored as a dense symmetric matrix.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(Index n);
  /// Throws InputError unless weights are symmetric, in [0,1], zero on the diagonal.
  explicit WeightedGraph(Matrix weights);

  Index n() const { return weights_.n(); }
  double weight(Index u, Index v) const { return weights_(u, v); }
  /// Sets both (u,v) and (v,u). Self-loops are rejected.
  void set_edge(Index u, Index v, double w = 1.0);
  const Matrix& adjacency() const { return weights_; }

 private:
  Matrix weights_;
};

/// Pattern graph H on vertices [0, k).
class PatternGraph {
 public:
  using Edge = std::pair<Index, Index>;

  PatternGraph() = default;
  /// Edges are normalized to (min, max) and sorted; loops and duplicates throw.
  PatternGraph(Index k, std::vector<Edge> edges);

  static PatternGraph edge();
  static PatternGraph triangle();
  static PatternGraph cycle(Index k);
  static PatternGraph complete(Index k);

  Index k() const { return k_; }
  const std::vector<Edge>& edges() const { return edges_; }
  PatternGraph without_edge(const Edge& e) const;

 private:
  Index k_ = 0;
  std::vector<Edge> edges_;
};

struct Norms {
  double frobenius_sq = 0.0;
  double max_abs = 0.0;
  std::vector<double> row_l2_sq;
  std::vector<double> col_l2_sq;
};

struct CenteredGraph {
  Matrix matrix;
  double density = 0.0;
};

/// Sum of a_{i,k} over S x T: per-row sums in ascending k, then rows in ascending i.
double rect_sum(const Matrix& a, const VertexSet& rows, const VertexSet& cols);

/// Copy of `a` with t subtracted on the S x T rectangle.
Matrix subtract_cut(const Matrix& a, double t, const VertexSet& rows, const VertexSet& cols);
void subtract_cut_in_place(Matrix& a, double t, const VertexSet& rows, const VertexSet& cols);

Norms norms(const Matrix& a);
double max_abs(const Matrix& a);

/// A_G - d(G) J with d(G) the ordered-pair density over n^2 slots.
CenteredGraph graph_to_matrix(const WeightedGraph& g);

/// a - base J - sum of terms, applied in stored order.
Matrix residual(const Matrix& a, const CutDecomposition& d);

void check_index(Index v, Index n, std::string_view what);

}  // namespace fkreg
