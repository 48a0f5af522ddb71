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

#include <omp.h>

#include <cmath>

#include "fkreg/generators.hpp"
#include "fkreg/oracle.hpp"

namespace fkreg {
namespace {

TEST(TopSingularTest, Examples) {
  EXPECT_NEAR(oracle::top_singular(Matrix{{3, 0}, {0, 1}}).value, 3.0, 1e-12);
  EXPECT_NEAR(oracle::top_singular(Matrix::ones(7)).value, 7.0, 1e-12);
}

TEST(TopSingularTest, MatchesJacobi) {
  Matrix a = gen::random_uniform(20, 3);
  for (Index i = 0; i < 20; ++i)
    for (Index j = 0; j < i; ++j) a(i, j) = a(j, i);
  const double dense = oracle::spectral_norm_dense(a);
  const auto eig = oracle::symmetric_eigenvalues(a);
  EXPECT_NEAR(dense, std::max(std::abs(eig.front()), std::abs(eig.back())), 1e-9 * dense);
  EXPECT_NEAR(oracle::top_singular(a).value, dense, 1e-6 * dense);
}

TEST(ExactCutNormTest, Examples) {
  const auto pm = oracle::exact_cut_norm(Matrix{{1, -1}, {-1, 1}});
  EXPECT_EQ(pm.value, 1.0);
  EXPECT_EQ(std::abs(rect_sum(Matrix{{1, -1}, {-1, 1}}, pm.rows, pm.cols)), 1.0);
  EXPECT_EQ(oracle::exact_cut_norm(Matrix(4)).value, 0.0);
  const auto j = oracle::exact_cut_norm(Matrix::ones(3));
  EXPECT_EQ(j.value, 9.0);
  EXPECT_EQ(j.rows, VertexSet::all(3));
  EXPECT_EQ(j.cols, VertexSet::all(3));
  EXPECT_THROW(oracle::exact_cut_norm(Matrix(23)), InputError);
}

TEST(ExactCutNormTest, ChunkedMatchesReference) {
  omp_set_num_threads(4);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const Index n = 10 + 2 * seed;
    const Matrix a = gen::random_uniform(n, seed);
    const auto fast = oracle::exact_cut_norm(a);
    const auto ref = oracle::exact_cut_norm_reference(a);
    EXPECT_NEAR(fast.value, ref.value, 1e-12 * ref.value);
    EXPECT_NEAR(std::abs(rect_sum(a, fast.rows, fast.cols)), fast.value, 1e-9);
  }
  omp_set_num_threads(1);
}

TEST(ExactCutNormTest, BoundedBySpectralNorm) {
  const Matrix a = gen::random_sign(12, 6);
  const double sigma = oracle::spectral_norm_dense(a);
  const auto c = oracle::exact_cut_norm(a);
  EXPECT_LE(c.value, sigma * std::sqrt(static_cast<double>(c.rows.size() * c.cols.size())) * (1 + 1e-12));
}

TEST(FkDiscrepancyTest, OnePartAndSingletons) {
  const WeightedGraph g = gen::gnp(10, 0.5, 2);
  FKPartition one{std::vector<Index>(10, 0), 1, {graph_to_matrix(g).density}};
  EXPECT_EQ(oracle::fk_discrepancy(g, one), oracle::exact_cut_norm(graph_to_matrix(g).matrix).value);

  FKPartition single;
  single.part_count = 10;
  for (Index v = 0; v < 10; ++v) single.part_of.push_back(v);
  for (Index u = 0; u < 10; ++u)
    for (Index v = 0; v < 10; ++v) single.densities.push_back(g.weight(u, v));
  EXPECT_EQ(oracle::fk_discrepancy(g, single), 0.0);
}

TEST(FkDiscrepancyTest, RefinedPartition) {
  const WeightedGraph g = gen::gnp(10, 0.5, 5);
  const auto d = decompose_graph(g, 0.4);
  const FKPartition p = refine_partition(10, d.terms, g);
  EXPECT_LE(oracle::fk_discrepancy(g, p, true), 2 * 0.4);
}

TEST(ExactHomTest, Examples) {
  const WeightedGraph g = gen::gnp(15, 0.4, 8);
  double two_e = 0.0;
  for (double w : g.adjacency().data()) two_e += w;
  EXPECT_EQ(oracle::exact_hom(PatternGraph::edge(), g), two_e);
  EXPECT_EQ(oracle::exact_hom_enumerate(PatternGraph::edge(), g), two_e);

  WeightedGraph k2(2);
  k2.set_edge(0, 1);
  EXPECT_EQ(oracle::exact_hom(PatternGraph::cycle(4), k2), 2.0);

  const WeightedGraph r = gen::gnp(20, 0.5, 9);
  EXPECT_EQ(oracle::exact_hom_enumerate(PatternGraph::triangle(), r), oracle::trace_power(r.adjacency(), 3));
  EXPECT_EQ(oracle::exact_hom(PatternGraph(3, {}), r), 8000.0);
  EXPECT_THROW(oracle::exact_hom_enumerate(PatternGraph::complete(4), r, 1e3), ResourceError);
}

TEST(TracePowerTest, Cycle) {
  const WeightedGraph c = gen::complete(4);
  EXPECT_EQ(oracle::trace_power(c.adjacency(), 3), 24.0);
  EXPECT_EQ(oracle::trace_power(c.adjacency(), 0), 4.0);
}

}  // namespace
}  // namespace fkreg
