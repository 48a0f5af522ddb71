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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fkreg/core.hpp"
#include "fkreg/expander.hpp"

namespace fkreg {

/// State after one accepted cut update A_{l+1} = A_l - t K_{S,T}.
struct IterationRecord {
  std::uint64_t iteration = 0;  // l
  const CutTerm* term = nullptr;
  int sign = 1;
  double witness_discrepancy = 0.0;  // |sum| over the untrimmed witness
  double trimmed_sum = 0.0;          // sign * sum over the trimmed rectangle
  double entry_bound = 0.0;          // C passed to the spectral test
  double frobenius_sq_before = 0.0;
  double frobenius_sq_after = 0.0;   // incrementally maintained
  double max_row_l2_sq = 0.0;        // after the update
  double max_col_l2_sq = 0.0;
  double max_abs = 0.0;
  double max_touched_l2_increase = 0.0;  // largest growth of a touched row/column
  const Matrix* matrix = nullptr;    // A_{l+1}, valid during the callback only
};

struct DecomposeConfig {
  Mode mode = Mode::kPractical;
  /// Maximum number of cut terms; 0 selects min(30000 eps^-16, 10^6).
  std::uint64_t max_iterations = 0;
  /// Heuristic sketch degree d0. Unset: certified sketch (exact fallback at desk scale).
  std::optional<double> sketch_degree;
  /// Power-iteration check of the final Regular verdict; defaults to on for heuristic sketches.
  std::optional<bool> oracle_check;
  /// Power iterations spent by that check.
  int oracle_iterations = 100;
  SketchConfig sketch;
  std::function<void(const IterationRecord&)> on_iteration;
};

struct DecomposeOutcome {
  CutDecomposition decomposition;
  Matrix residual;
  std::uint64_t iterations = 0;
  double final_frobenius_sq = 0.0;
  /// Power-iteration estimate of ||residual|| when the oracle check ran.
  std::optional<double> oracle_sigma;
  bool sketch_exact = false;
};

/// Iteration cap reached before a Regular verdict; carries the work so far.
class PartialResultError : public Error {
 public:
  PartialResultError(std::string what, DecomposeOutcome outcome)
      : Error(std::move(what)), outcome_(std::move(outcome)) {}
  const DecomposeOutcome& outcome() const { return outcome_; }
  DecomposeOutcome& outcome() { return outcome_; }

 private:
  DecomposeOutcome outcome_;
};

/// eps^8 / 300, the magnitude of every faithful-mode weight.
double faithful_weight(double epsilon);
/// eps' = eps^8 / 100.
double witness_fraction(double epsilon);
std::uint64_t default_iteration_cap(double epsilon);

struct TrimResult {
  VertexSet rows;
  VertexSet cols;
  std::vector<double> row_sums;  // sign * sum over kept columns, aligned with rows
  std::vector<double> col_sums;
  double total = 0.0;            // sign * rectangle sum
};

/// Repeatedly deletes the first row (then column) whose signed sum inside the
/// current rectangle is below eps' n / 6. Requires sign * rect_sum >= eps' n^2.
TrimResult trim(const Matrix& a, const VertexSet& rows, const VertexSet& cols, double eps_prime,
                int sign);

/// Cut decomposition of a matrix with entries in [-1,1] and row/column squared norms <= n.
/// Throws PartialResultError at the iteration cap.
DecomposeOutcome run_decomposition(const Matrix& a, double epsilon, const DecomposeConfig& config = {});
CutDecomposition decompose_matrix(const Matrix& a, double epsilon, const DecomposeConfig& config = {});

/// Decomposition of A_G - d(G) J with base d(G).
DecomposeOutcome run_graph_decomposition(const WeightedGraph& g, double epsilon,
                                         const DecomposeConfig& config = {});
CutDecomposition decompose_graph(const WeightedGraph& g, double epsilon,
                                 const DecomposeConfig& config = {});

/// Vertex partition with block densities d_ij = e(V_i, V_j) / (|V_i||V_j|).
struct FKPartition {
  std::vector<Index> part_of;
  Index part_count = 0;
  std::vector<double> densities;  // part_count x part_count, row-major

  double density(Index i, Index j) const { return densities[i * part_count + j]; }
  friend bool operator==(const FKPartition&, const FKPartition&) = default;
};

/// Common refinement of all S_i, T_i; part ids follow first appearance.
FKPartition refine_partition(Index n, std::span<const CutTerm> terms, const WeightedGraph& g);

}  // namespace fkreg
