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

#include <algorithm>

#include "fkreg/kernels.hpp"

namespace fkreg::kernels::serial {

double rect_sum(const Matrix& a, std::span<const Index> rows, std::span<const Index> cols) {
  double total = 0.0;
  for (Index i : rows) {
    const auto r = a.row(i);
    double row_total = 0.0;
    for (Index k : cols) row_total += r[k];
    total += row_total;
  }
  return total;
}

void row_sq_norms(const Matrix& a, std::span<double> out) {
  const Index n = a.n();
  for (Index i = 0; i < n; ++i) {
    double acc = 0.0;
    for (double x : a.row(i)) acc += x * x;
    out[i] = acc;
  }
}

void col_sq_norms(const Matrix& a, std::span<double> out) {
  const Index n = a.n();
  std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(n), 0.0);
  for (Index i = 0; i < n; ++i) {
    const auto r = a.row(i);
    for (Index k = 0; k < n; ++k) out[k] += r[k] * r[k];
  }
}

void pair_products(const Matrix& a, std::span<const WeightedPair> pairs, std::span<double> out) {
  const Index n = a.n();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const double* ri = a.row(pairs[p].i).data();
    const double* rj = a.row(pairs[p].j).data();
    double acc = 0.0;
    for (Index k = 0; k < n; ++k) acc += ri[k] * rj[k];
    out[p] = acc;
  }
}

void column_scores(const Matrix& a, std::span<const WeightedPair> pairs,
                   std::span<const double> products, std::span<double> out) {
  const Index n = a.n();
  std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(n), 0.0);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto& e = pairs[p];
    const double mult = e.i == e.j ? e.multiplicity : 2.0 * e.multiplicity;
    const double coef = mult * products[p];
    const double* ri = a.row(e.i).data();
    const double* rj = a.row(e.j).data();
    for (Index k = 0; k < n; ++k) out[k] += coef * (ri[k] * rj[k]);
  }
}

void column_correlations(const Matrix& a, Index k, std::span<double> out) {
  const Index n = a.n();
  std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(n), 0.0);
  for (Index i = 0; i < n; ++i) {
    const auto r = a.row(i);
    const double pivot = r[k];
    for (Index l = 0; l < n; ++l) out[l] += pivot * r[l];
  }
}

void row_sums_over(const Matrix& a, std::span<const Index> cols, std::span<double> out) {
  const Index n = a.n();
  for (Index i = 0; i < n; ++i) {
    const auto r = a.row(i);
    double acc = 0.0;
    for (Index k : cols) acc += r[k];
    out[i] = acc;
  }
}

void matvec(const Matrix& a, std::span<const double> x, std::span<double> y) {
  const Index n = a.n();
  for (Index i = 0; i < n; ++i) {
    const auto r = a.row(i);
    double acc = 0.0;
    for (Index k = 0; k < n; ++k) acc += r[k] * x[k];
    y[i] = acc;
  }
}

void matvec_transposed(const Matrix& a, std::span<const double> x, std::span<double> y) {
  const Index n = a.n();
  std::fill(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n), 0.0);
  for (Index i = 0; i < n; ++i) {
    const auto r = a.row(i);
    const double xi = x[i];
    for (Index k = 0; k < n; ++k) y[k] += r[k] * xi;
  }
}

}  // namespace fkreg::kernels::serial
