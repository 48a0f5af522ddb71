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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "fkreg/expander.hpp"
#include "fkreg/oracle.hpp"

namespace fkreg {
namespace {

std::vector<GridVertex> sorted(std::array<GridVertex, 8> a) {
  std::vector<GridVertex> v(a.begin(), a.end());
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<GridVertex> sorted_list(std::vector<GridVertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Matrix walk_matrix(const WalkLists& w) {
  const Index n = w.vertex_count();
  Matrix a(n);
  for (Index v = 0; v < n; ++v)
    for (auto u : w.list(v)) a(v, u) += 1.0;
  return a;
}

Matrix sketch_matrix(const ExpanderSketch& s) {
  Matrix a(s.n);
  for (const auto& e : s.entries) {
    a(e.i, e.j) = e.multiplicity;
    a(e.j, e.i) = e.multiplicity;
  }
  return a;
}

TEST(MargulisTest, NeighborExamples) {
  EXPECT_EQ(sorted(margulis_neighbors(5, {0, 0})),
            sorted_list({{0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {4, 0}, {0, 1}, {0, 4}}));
  EXPECT_EQ(sorted(margulis_neighbors(7, {1, 2})),
            sorted_list({{5, 2}, {4, 2}, {6, 2}, {3, 2}, {1, 4}, {1, 0}, {1, 5}, {1, 6}}));
  for (const auto& v : margulis_neighbors(1, {0, 0})) EXPECT_EQ(v, (GridVertex{0, 0}));
}

TEST(MargulisTest, BaseShapeAndRegularity) {
  const WalkLists b2 = build_base(2);
  EXPECT_EQ(b2.vertex_count(), 4u);
  EXPECT_EQ(b2.degree, 8u);
  EXPECT_EQ(b2.endpoints.size(), 32u);

  const Matrix a = walk_matrix(build_base(5));
  for (Index i = 0; i < a.n(); ++i) {
    double row = 0.0;
    double col = 0.0;
    for (Index k = 0; k < a.n(); ++k) {
      row += a(i, k);
      col += a(k, i);
      EXPECT_EQ(a(i, k), a(k, i));
    }
    EXPECT_EQ(row, 8.0);
    EXPECT_EQ(col, 8.0);
  }
}

TEST(MargulisTest, SecondEigenvalueBound) {
  const Matrix a = walk_matrix(build_base(5));
  auto eig = oracle::symmetric_eigenvalues(a);
  EXPECT_NEAR(eig.back(), 8.0, 1e-9);
  std::vector<double> mags;
  for (double e : eig) mags.push_back(std::abs(e));
  std::sort(mags.begin(), mags.end());
  EXPECT_LE(mags[mags.size() - 2], 5.0 * std::sqrt(2.0) + 1e-9);
}

TEST(PowerWalksTest, OneStepMatchesBase) {
  const WalkLists b = build_base(4);
  const WalkLists p = power_walks(b, 1);
  EXPECT_EQ(p.endpoints, b.endpoints);
}

TEST(PowerWalksTest, TwoStepsMatchMatrixSquare) {
  const WalkLists b = build_base(3);
  const Matrix a = walk_matrix(b);
  const Matrix a2 = walk_matrix(power_walks(b, 2));
  for (Index u = 0; u < 9; ++u) {
    double row = 0.0;
    for (Index v = 0; v < 9; ++v) {
      double walks = 0.0;
      for (Index w = 0; w < 9; ++w) walks += a(u, w) * a(w, v);
      EXPECT_EQ(a2(u, v), walks);
      row += a2(u, v);
    }
    EXPECT_EQ(row, 64.0);
  }
}

TEST(PowerWalksTest, BudgetExceeded) {
  SketchConfig small;
  small.walk_budget = 100;
  EXPECT_THROW(power_walks(build_base(4), 2, small), ResourceError);
}

TEST(SketchTest, FormulaFallsBackToExact) {
  const double d0 = certified_degree(1.0, 0.5);
  EXPECT_GT(d0, 1e28);
  const ExpanderSketch s = build_sketch(100, d0);
  EXPECT_TRUE(s.exact);
  EXPECT_EQ(s.error_bound, 0.0);
  EXPECT_EQ(s.d, 100.0);
  EXPECT_TRUE(s.certified_for(1.0, 0.5));
}

TEST(SketchTest, DegreeEightOnSixteen) {
  const ExpanderSketch s = build_sketch(16, 8.0);
  EXPECT_FALSE(s.exact);
  EXPECT_EQ(s.regular_degree, 8u);
  EXPECT_EQ(s.d, 8.0);
  EXPECT_EQ(s.oversize, 1.0);
  const Matrix m = sketch_matrix(s);
  const Matrix base = walk_matrix(build_base(4));
  EXPECT_EQ(m, base);
}

TEST(SketchTest, ExactSketchShape) {
  const ExpanderSketch s = exact_sketch(5);
  EXPECT_TRUE(s.exact);
  EXPECT_EQ(s.entries.size(), 15u);
  for (const auto& e : s.entries) EXPECT_EQ(e.multiplicity, 1u);
  EXPECT_EQ(s.multiplicity(3, 1), 1u);
}

TEST(SketchTest, RowSumsBoundedByRegularDegree) {
  const ExpanderSketch s = build_sketch(50, 8.0);
  const Matrix m = sketch_matrix(s);
  for (Index i = 0; i < 50; ++i) {
    double row = 0.0;
    for (Index j = 0; j < 50; ++j) {
      row += m(i, j);
      EXPECT_GE(m(i, j), 0.0);
    }
    EXPECT_LE(row, static_cast<double>(s.regular_degree));
  }
}

TEST(SketchTest, MeasuredErrorWithinBound) {
  for (Index n : {30u, 100u}) {
    for (double d0 : {8.0, 64.0}) {
      const ExpanderSketch s = build_sketch(n, d0);
      if (s.exact) continue;
      Matrix diff = sketch_matrix(s);
      for (double& x : diff.data()) x = s.d / static_cast<double>(n) - x;
      EXPECT_LE(oracle::spectral_norm_dense(diff), s.error_bound) << "n=" << n << " d0=" << d0;
    }
  }
}

TEST(SketchTest, GapExponent) {
  EXPECT_NEAR(margulis_gap_exponent(), 1.0 - std::log(5.0 * std::sqrt(2.0)) / std::log(8.0), 1e-15);
  EXPECT_NEAR(margulis_gap_exponent(), 0.0594, 1e-4);
}

}  // namespace
}  // namespace fkreg
