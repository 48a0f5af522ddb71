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

// Dense inner loops shared by the spectral test, the decomposition loop and
// the oracles. Each kernel has a serial reference and an OpenMP version; the
// OpenMP versions partition work by output index only, so every output value
// is accumulated in the same order as the serial one and the results are
// bit-identical for any thread count.

#include <cstdint>
#include <span>

#include "fkreg/core.hpp"

namespace fkreg::kernels {

/// Unordered pair (i <= j) of an expander sketch with its walk multiplicity.
struct WeightedPair {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint32_t multiplicity = 0;

  friend bool operator==(const WeightedPair&, const WeightedPair&) = default;
};

#define FKREG_KERNEL_DECLS                                                              \
  double rect_sum(const Matrix& a, std::span<const Index> rows,                         \
                  std::span<const Index> cols);                                         \
  void row_sq_norms(const Matrix& a, std::span<double> out);                            \
  void col_sq_norms(const Matrix& a, std::span<double> out);                            \
  void pair_products(const Matrix& a, std::span<const WeightedPair> pairs,              \
                     std::span<double> out);                                            \
  void column_scores(const Matrix& a, std::span<const WeightedPair> pairs,              \
                     std::span<const double> products, std::span<double> out);          \
  void column_correlations(const Matrix& a, Index k, std::span<double> out);            \
  void row_sums_over(const Matrix& a, std::span<const Index> cols, std::span<double> out); \
  void matvec(const Matrix& a, std::span<const double> x, std::span<double> y);         \
  void matvec_transposed(const Matrix& a, std::span<const double> x, std::span<double> y);

namespace serial {
FKREG_KERNEL_DECLS
}  // namespace serial

namespace parallel {
FKREG_KERNEL_DECLS
}  // namespace parallel

#undef FKREG_KERNEL_DECLS

/// True when the library was built with OpenMP.
bool parallel_enabled();
/// Worker count for parallel kernels; 0 keeps the runtime default.
void set_threads(int threads);

// Dispatch used by the algorithms.
using parallel::col_sq_norms;
using parallel::column_correlations;
using parallel::column_scores;
using parallel::matvec;
using parallel::matvec_transposed;
using parallel::pair_products;
using parallel::rect_sum;
using parallel::row_sq_norms;
using parallel::row_sums_over;

}  // namespace fkreg::kernels
