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

#include "fkreg/generators.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace fkreg::gen {

WeightedGraph gnp(Index n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  Matrix a(n);
  for (Index u = 0; u < n; ++u)
    for (Index v = u + 1; v < n; ++v)
      if (uniform01(rng) < p) a(u, v) = a(v, u) = 1.0;
  return WeightedGraph(std::move(a));
}

WeightedGraph complete(Index n) {
  Matrix a = Matrix::ones(n);
  for (Index i = 0; i < n; ++i) a(i, i) = 0.0;
  return WeightedGraph(std::move(a));
}

WeightedGraph complete_bipartite(Index a, Index b) {
  Matrix m(a + b);
  for (Index u = 0; u < a; ++u)
    for (Index v = a; v < a + b; ++v) m(u, v) = m(v, u) = 1.0;
  return WeightedGraph(std::move(m));
}

WeightedGraph random_weighted(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix a(n);
  for (Index u = 0; u < n; ++u)
    for (Index v = u + 1; v < n; ++v) a(u, v) = a(v, u) = uniform01(rng);
  return WeightedGraph(std::move(a));
}

Matrix random_sign(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix a(n);
  for (double& x : a.data()) x = (rng() >> 63) ? 1.0 : -1.0;
  return a;
}

Matrix random_uniform(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix a(n);
  for (double& x : a.data()) x = 2.0 * uniform01(rng) - 1.0;
  return a;
}

Matrix planted_rectangle(Index n, Index s, double amplitude, double noise, std::uint64_t seed) {
  if (s > n) throw InputError("planted rectangle larger than the matrix");
  std::mt19937_64 rng(seed);
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> in_rows(n, 0);
  for (Index i = 0; i < s; ++i) in_rows[order[i]] = 1;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> in_cols(n, 0);
  for (Index i = 0; i < s; ++i) in_cols[order[i]] = 1;
  Matrix a(n);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) {
      const double z = noise * (2.0 * uniform01(rng) - 1.0);
      a(i, k) = (in_rows[i] && in_cols[k]) ? amplitude : z;
    }
  return a;
}

}  // namespace fkreg::gen
