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

#include <cmath>

#include "fkreg/generators.hpp"
#include "fkreg/oracle.hpp"
#include "fkreg/spectral_test.hpp"

namespace fkreg {
namespace {

double dot_rows(const Matrix& a, Index i, Index j) {
  double acc = 0.0;
  for (Index k = 0; k < a.n(); ++k) acc += a(i, k) * a(j, k);
  return acc;
}

TEST(EdgeProductsTest, Identity) {
  const ExpanderSketch sk = exact_sketch(2);
  const auto s = edge_products(Matrix::identity(2), sk);
  ASSERT_EQ(sk.entries.size(), 3u);
  for (std::size_t p = 0; p < s.size(); ++p) EXPECT_EQ(s[p], sk.entries[p].i == sk.entries[p].j ? 1.0 : 0.0);
}

TEST(EdgeProductsTest, DuplicateRows) {
  Matrix a(4);
  for (Index i = 0; i < 4; ++i)
    for (Index k = 0; k < 4; ++k) a(i, k) = (k % 2 == 0) ? 0.5 : -0.25;
  for (double s : edge_products(a, exact_sketch(4))) EXPECT_EQ(s, 2 * 0.25 + 2 * 0.0625);
}

TEST(EdgeProductsTest, MatchesGram) {
  const Matrix a = gen::random_uniform(6, 21);
  const ExpanderSketch sk = exact_sketch(6);
  const auto s = edge_products(a, sk);
  for (std::size_t p = 0; p < s.size(); ++p) {
    EXPECT_NEAR(s[p], dot_rows(a, sk.entries[p].i, sk.entries[p].j), 1e-9);
  }
}

TEST(ColumnScoresTest, IdentityAndZero) {
  const ExpanderSketch sk = exact_sketch(2);
  const Matrix id = Matrix::identity(2);
  const auto b = column_scores(id, sk, edge_products(id, sk));
  EXPECT_EQ(b, (std::vector<double>{1.0, 1.0}));
  const Matrix z(3);
  const ExpanderSketch s3 = exact_sketch(3);
  for (double x : column_scores(z, s3, edge_products(z, s3))) EXPECT_EQ(x, 0.0);
}

TEST(ColumnScoresTest, ExactSketchTotalIsGramFrobenius) {
  const Matrix a = gen::random_uniform(5, 8);
  const ExpanderSketch sk = exact_sketch(5);
  const auto b = column_scores(a, sk, edge_products(a, sk));
  double total = 0.0;
  for (double x : b) total += x;
  double gram = 0.0;
  for (Index i = 0; i < 5; ++i)
    for (Index j = 0; j < 5; ++j) gram += dot_rows(a, i, j) * dot_rows(a, i, j);
  EXPECT_NEAR(total, gram, 1e-9 * gram);
}

TEST(ColumnScoresTest, DirectDoubleSum) {
  const Matrix a = gen::random_uniform(7, 4);
  const ExpanderSketch sk = build_sketch(7, 1.0);
  const auto b = column_scores(a, sk, edge_products(a, sk));
  for (Index k = 0; k < 7; ++k) {
    double direct = 0.0;
    for (Index i = 0; i < 7; ++i)
      for (Index j = 0; j < 7; ++j) {
        const auto m = sk.multiplicity(i, j);
        direct += m * a(i, k) * a(j, k) * dot_rows(a, i, j);
      }
    EXPECT_NEAR(b[k], direct, 1e-9);
  }
}

TEST(SingularTest, ZeroIsRegular) {
  const Verdict v = singular_test(Matrix(10), 0.3, exact_sketch(10), 1.0);
  ASSERT_TRUE(std::holds_alternative<Regular>(v));
  EXPECT_TRUE(std::get<Regular>(v).certified);
}

TEST(SingularTest, AllOnesGivesWitness) {
  const Matrix j = Matrix::ones(100);
  const Verdict v = singular_test(j, 0.5, exact_sketch(100), 1.0);
  ASSERT_TRUE(std::holds_alternative<Witness>(v));
  const auto& w = std::get<Witness>(v);
  EXPECT_EQ(w.discrepancy, 1e4);
  EXPECT_EQ(w.sign * rect_sum(j, w.rows, w.cols), w.discrepancy);
  EXPECT_GE(w.discrepancy, witness_bound(0.5, 100));
  EXPECT_TRUE(w.certified);
}

TEST(SingularTest, IdentityIsRegular) {
  const Verdict v = singular_test(Matrix::identity(100), 0.5, exact_sketch(100), 1.0);
  EXPECT_TRUE(std::holds_alternative<Regular>(v));
}

TEST(SingularTest, PreconditionsChecked) {
  Matrix big(4);
  big(0, 0) = 1.5;
  EXPECT_THROW(singular_test(big, 0.5, exact_sketch(4), 1.0), InputError);
  EXPECT_THROW(singular_test(Matrix::ones(4), 0.5, exact_sketch(5), 1.0), InputError);
  Matrix heavy(4);
  for (Index k = 0; k < 4; ++k) heavy(0, k) = 1.1;
  EXPECT_THROW(singular_test(heavy, 0.5, exact_sketch(4), 2.0), InputError);
}

TEST(SingularTest, WitnessSoundOnPlantedRectangles) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Index n = 20 + 9 * seed;
    const Matrix a = gen::planted_rectangle(n, n / 3, 0.9, 0.2, seed);
    const double eps = 0.5;
    const Verdict v = singular_test(a, eps, exact_sketch(n), 1.0);
    if (const auto* w = std::get_if<Witness>(&v)) {
      EXPECT_TRUE(w->certified);
      const double recomputed = rect_sum(a, w->rows, w->cols);
      EXPECT_EQ(w->sign * recomputed, w->discrepancy);
      EXPECT_GE(std::abs(recomputed), witness_bound(eps, n));
    } else {
      EXPECT_LE(oracle::top_singular(a).value, eps * static_cast<double>(n) * (1 + 1e-6));
    }
  }
}

TEST(SingularTest, RegularVerdictsAreSound) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Index n = 40 + 5 * seed;
    const Matrix a = gen::random_sign(n, seed);
    const double eps = 0.4;
    const Verdict v = singular_test(a, eps, exact_sketch(n), 1.0);
    if (std::holds_alternative<Regular>(v)) {
      EXPECT_LE(oracle::top_singular(a).value, eps * static_cast<double>(n) * (1 + 1e-6));
    }
  }
}

}  // namespace
}  // namespace fkreg
