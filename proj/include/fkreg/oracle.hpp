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

// Brute-force verifiers. Nothing in the certified algorithm paths calls into
// this header; tests and the `verify` command do.

#include <vector>

#include "fkreg/core.hpp"
#include "fkreg/decompose.hpp"

namespace fkreg::oracle {

struct SingularEstimate {
  /// ||A v|| for the final unit iterate v; a lower bound on sigma_max.
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Power iteration on A^T A from the start vector v_i = 1 + i/n.
SingularEstimate top_singular(const Matrix& a, int max_iterations = 2000, double tol = 1e-12);

struct CutNorm {
  double value = 0.0;
  VertexSet rows;
  VertexSet cols;
};

/// Largest n accepted by exact_cut_norm.
inline constexpr Index kMaxExhaustiveN = 22;

/// max over S, T of |sum_{S x T} a|, by enumerating every row subset. Ties are
/// broken by the smallest subset encoding. Throws InputError for n > 22.
CutNorm exact_cut_norm(const Matrix& a);

/// Same maximum with every subset evaluated from scratch (serial, slower).
CutNorm exact_cut_norm_reference(const Matrix& a);

/// Block-density discrepancy max |e(S,T) - sum d_ij |S n V_i||T n V_j||,
/// optionally divided by n^2.
double fk_discrepancy(const WeightedGraph& g, const FKPartition& partition, bool normalized = false);

/// Residual b_uv = a_uv - d_{part(u), part(v)}.
Matrix partition_residual(const WeightedGraph& g, const FKPartition& partition);

/// All eigenvalues of a symmetric matrix (cyclic Jacobi), ascending.
std::vector<double> symmetric_eigenvalues(const Matrix& a);

/// Spectral norm via the eigenvalues of A^T A.
double spectral_norm_dense(const Matrix& a);

double trace_power(const Matrix& a, unsigned k);

/// hom(H, G) by enumerating all n^k maps; throws ResourceError past the budget.
double exact_hom_enumerate(const PatternGraph& h, const WeightedGraph& g,
                           double budget = 1e8);

/// hom(H, G) using trace(A^k) for cycles, the weight sum for a single edge,
/// and enumeration otherwise.
double exact_hom(const PatternGraph& h, const WeightedGraph& g, double budget = 1e8);

}  // namespace fkreg::oracle
