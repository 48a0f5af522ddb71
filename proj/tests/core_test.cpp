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

#include <random>

#include "fkreg/core.hpp"
#include "fkreg/generators.hpp"

namespace fkreg {
namespace {

TEST(MatrixTest, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(Matrix(0), InputError);
  EXPECT_THROW(Matrix(2, {1.0, 2.0, 3.0}), InputError);
  EXPECT_THROW(Matrix(1, {std::numeric_limits<double>::infinity()}), InputError);
  EXPECT_THROW(Matrix(1, {std::nan("")}), InputError);
}

TEST(VertexSetTest, Validation) {
  EXPECT_THROW(VertexSet({1, 0}, 3), InputError);
  EXPECT_THROW(VertexSet({0, 0}, 3), InputError);
  EXPECT_THROW(VertexSet({3}, 3), InputError);
  const auto s = VertexSet::from_unsorted({2, 0, 2}, 3);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
}

TEST(RectSumTest, Examples) {
  const Matrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(rect_sum(a, VertexSet({0}, 2), VertexSet({0, 1}, 2)), 3.0);
  EXPECT_EQ(rect_sum(a, VertexSet({}, 2), VertexSet::all(2)), 0.0);
  EXPECT_EQ(rect_sum(Matrix::ones(3), VertexSet::all(3), VertexSet::all(3)), 9.0);
}

TEST(SubtractCutTest, Examples) {
  const Matrix z = subtract_cut(Matrix::ones(2), 1.0, VertexSet::all(2), VertexSet::all(2));
  EXPECT_EQ(z, Matrix(2));
  const Matrix b = subtract_cut(Matrix(3), 0.5, VertexSet({0}, 3), VertexSet({2}, 3));
  Matrix expect(3);
  expect(0, 2) = -0.5;
  EXPECT_EQ(b, expect);
}

TEST(SubtractCutTest, FrobeniusExpansion) {
  const Matrix a = gen::random_uniform(5, 11);
  const VertexSet s({0, 2, 3}, 5);
  const VertexSet t({1, 4}, 5);
  const double step = 0.37;
  double direct = 0.0;
  double before = 0.0;
  double rect = 0.0;
  for (Index i = 0; i < 5; ++i)
    for (Index k = 0; k < 5; ++k) {
      const bool in = s.contains(i) && t.contains(k);
      const double x = a(i, k) - (in ? step : 0.0);
      direct += x * x;
      before += a(i, k) * a(i, k);
      if (in) rect += a(i, k);
    }
  const double expanded = before - 2 * step * rect + 6 * step * step;
  EXPECT_NEAR(norms(subtract_cut(a, step, s, t)).frobenius_sq, expanded, 1e-12);
  EXPECT_NEAR(direct, expanded, 1e-12);
}

TEST(NormsTest, Examples) {
  const Norms id = norms(Matrix::identity(3));
  EXPECT_EQ(id.frobenius_sq, 3.0);
  EXPECT_EQ(id.max_abs, 1.0);
  const Norms z = norms(Matrix(4));
  EXPECT_EQ(z.frobenius_sq, 0.0);
  EXPECT_EQ(z.max_abs, 0.0);
  for (double r : z.row_l2_sq) EXPECT_EQ(r, 0.0);
  const Norms pm = norms(Matrix{{1, -1}, {-1, 1}});
  EXPECT_EQ(pm.frobenius_sq, 4.0);
  for (double r : pm.row_l2_sq) EXPECT_EQ(r, 2.0);
  for (double c : pm.col_l2_sq) EXPECT_EQ(c, 2.0);
}

TEST(GraphToMatrixTest, Examples) {
  const auto empty = graph_to_matrix(WeightedGraph(4));
  EXPECT_EQ(empty.density, 0.0);
  EXPECT_EQ(empty.matrix, Matrix(4));

  const auto k3 = graph_to_matrix(gen::complete(3));
  EXPECT_DOUBLE_EQ(k3.density, 2.0 / 3.0);
  for (Index i = 0; i < 3; ++i)
    for (Index k = 0; k < 3; ++k) EXPECT_NEAR(k3.matrix(i, k), i == k ? -2.0 / 3.0 : 1.0 / 3.0, 1e-15);

  const auto k22 = graph_to_matrix(gen::complete_bipartite(2, 2));
  EXPECT_EQ(k22.density, 0.5);
  for (Index i = 0; i < 4; ++i)
    for (Index k = 0; k < 4; ++k) EXPECT_EQ(std::abs(k22.matrix(i, k)), 0.5);
}

TEST(ResidualTest, Examples) {
  const Matrix a = gen::random_uniform(4, 3);
  CutDecomposition d;
  d.n = 4;
  EXPECT_EQ(residual(a, d), a);
  CutDecomposition j;
  j.n = 2;
  j.base = 1.0;
  EXPECT_EQ(residual(Matrix::ones(2), j), Matrix(2));
}

TEST(WeightedGraphTest, Validation) {
  WeightedGraph g(3);
  EXPECT_THROW(g.set_edge(1, 1), InputError);
  EXPECT_THROW(g.set_edge(0, 1, 1.5), InputError);
  EXPECT_THROW(WeightedGraph(Matrix{{0, 1}, {0, 0}}), InputError);
  EXPECT_THROW(WeightedGraph(Matrix{{1, 0}, {0, 0}}), InputError);
  g.set_edge(2, 0, 0.25);
  EXPECT_EQ(g.weight(0, 2), 0.25);
}

TEST(PatternGraphTest, Normalization) {
  const PatternGraph h(3, {{2, 1}, {0, 2}});
  ASSERT_EQ(h.edges().size(), 2u);
  EXPECT_EQ(h.edges()[0], (PatternGraph::Edge{0, 2}));
  EXPECT_EQ(h.edges()[1], (PatternGraph::Edge{1, 2}));
  EXPECT_THROW(PatternGraph(2, {{0, 0}}), InputError);
  EXPECT_THROW(PatternGraph(2, {{0, 1}, {1, 0}}), InputError);
  EXPECT_EQ(PatternGraph::complete(4).edges().size(), 6u);
  EXPECT_EQ(PatternGraph::cycle(4).edges().size(), 4u);
  EXPECT_EQ(h.without_edge({0, 2}).edges().size(), 1u);
}

TEST(ModeTest, RoundTrip) {
  EXPECT_EQ(parse_mode(to_string(Mode::kFaithful)), Mode::kFaithful);
  EXPECT_EQ(parse_mode("practical"), Mode::kPractical);
  EXPECT_THROW(parse_mode("fast"), InputError);
}

}  // namespace
}  // namespace fkreg
