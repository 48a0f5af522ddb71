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
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fkreg/kernels.hpp"

namespace fkreg::kernels {

bool parallel_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

namespace parallel {
namespace {

// Below this many multiply-adds the serial path is used; results are identical.
constexpr std::size_t kMinParallelWork = 1u << 15;

struct Range {
  Index lo;
  Index hi;
};

#ifdef _OPENMP
Range thread_range(Index count) {
  const auto threads = static_cast<Index>(omp_get_num_threads());
  const auto tid = static_cast<Index>(omp_get_thread_num());
  const Index chunk = (count + threads - 1) / threads;
  const Index lo = std::min(count, tid * chunk);
  return {lo, std::min(count, lo + chunk)};
}
#endif

bool worth_it(std::size_t work) {
#ifdef _OPENMP
  return work >= kMinParallelWork && omp_get_max_threads() > 1;
#else
  (void)work;
  return false;
#endif
}

}  // namespace

double rect_sum(const Matrix& a, std::span<const Index> rows, std::span<const Index> cols) {
  if (!worth_it(rows.size() * cols.size())) return serial::rect_sum(a, rows, cols);
  std::vector<double> partial(rows.size());
  const auto count = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < count; ++p) {
    const auto r = a.row(rows[static_cast<std::size_t>(p)]);
    double row_total = 0.0;
    for (Index k : cols) row_total += r[k];
    partial[static_cast<std::size_t>(p)] = row_total;
  }
  double total = 0.0;
  for (double x : partial) total += x;
  return total;
}

void row_sq_norms(const Matrix& a, std::span<double> out) {
  const Index n = a.n();
  if (!worth_it(n * n)) return serial::row_sq_norms(a, out);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    double acc = 0.0;
    for (double x : a.row(static_cast<Index>(i))) acc += x * x;
    out[static_cast<Index>(i)] = acc;
  }
}

void col_sq_norms(const Matrix& a, std::span<double> out) {
  const Index n = a.n();
  if (!worth_it(n * n)) return serial::col_sq_norms(a, out);
#ifdef _OPENMP
#pragma omp parallel
  {
    const Range range = thread_range(n);
    for (Index k = range.lo; k < range.hi; ++k) out[k] = 0.0;
    for (Index i = 0; i < n; ++i) {
      const auto r = a.row(i);
      for (Index k = range.lo; k < range.hi; ++k) out[k] += r[k] * r[k];
    }
  }
#endif
}

void pair_products(const Matrix& a, std::span<const WeightedPair> pairs, std::span<double> out) {
  const Index n = a.n();
  if (!worth_it(pairs.size() * n)) return serial::pair_products(a, pairs, out);
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < count; ++p) {
    const auto& e = pairs[static_cast<std::size_t>(p)];
    const double* ri = a.row(e.i).data();
    const double* rj = a.row(e.j).data();
    double acc = 0.0;
    for (Index k = 0; k < n; ++k) acc += ri[k] * rj[k];
    out[static_cast<std::size_t>(p)] = acc;
  }
}

void column_scores(const Matrix& a, std::span<const WeightedPair> pairs,
                   std::span<const double> products, std::span<double> out) {
  const Index n = a.n();
  if (!worth_it(pairs.size() * n)) return serial::column_scores(a, pairs, products, out);
#ifdef _OPENMP
#pragma omp parallel
  {
    const Range range = thread_range(n);
    for (Index k = range.lo; k < range.hi; ++k) out[k] = 0.0;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto& e = pairs[p];
      const double mult = e.i == e.j ? e.multiplicity : 2.0 * e.multiplicity;
      const double coef = mult * products[p];
      const double* ri = a.row(e.i).data();
      const double* rj = a.row(e.j).data();
      for (Index k = range.lo; k < range.hi; ++k) out[k] += coef * (ri[k] * rj[k]);
    }
  }
#endif
}

void column_correlations(const Matrix& a, Index k, std::span<double> out) {
  const Index n = a.n();
  if (!worth_it(n * n)) return serial::column_correlations(a, k, out);
#ifdef _OPENMP
#pragma omp parallel
  {
    const Range range = thread_range(n);
    for (Index l = range.lo; l < range.hi; ++l) out[l] = 0.0;
    for (Index i = 0; i < n; ++i) {
      const auto r = a.row(i);
      const double pivot = r[k];
      for (Index l = range.lo; l < range.hi; ++l) out[l] += pivot * r[l];
    }
  }
#endif
}

void row_sums_over(const Matrix& a, std::span<const Index> cols, std::span<double> out) {
  const Index n = a.n();
  if (!worth_it(n * cols.size())) return serial::row_sums_over(a, cols, out);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto r = a.row(static_cast<Index>(i));
    double acc = 0.0;
    for (Index k : cols) acc += r[k];
    out[static_cast<Index>(i)] = acc;
  }
}

void matvec(const Matrix& a, std::span<const double> x, std::span<double> y) {
  const Index n = a.n();
  if (!worth_it(n * n)) return serial::matvec(a, x, y);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto r = a.row(static_cast<Index>(i));
    double acc = 0.0;
    for (Index k = 0; k < n; ++k) acc += r[k] * x[k];
    y[static_cast<Index>(i)] = acc;
  }
}

void matvec_transposed(const Matrix& a, std::span<const double> x, std::span<double> y) {
  const Index n = a.n();
  if (!worth_it(n * n)) return serial::matvec_transposed(a, x, y);
#ifdef _OPENMP
#pragma omp parallel
  {
    const Range range = thread_range(n);
    for (Index k = range.lo; k < range.hi; ++k) y[k] = 0.0;
    for (Index i = 0; i < n; ++i) {
      const auto r = a.row(i);
      const double xi = x[i];
      for (Index k = range.lo; k < range.hi; ++k) y[k] += r[k] * xi;
    }
  }
#endif
}

}  // namespace parallel
}  // namespace fkreg::kernels
