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
#include <random>

#include "fkreg/core.hpp"

namespace fkreg::gen {

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// G(n, p): each pair {u, v} present independently, drawn in (u < v) row order.
WeightedGraph gnp(Index n, double p, std::uint64_t seed);
WeightedGraph complete(Index n);
/// Complete bipartite graph between [0, a) and [a, a + b).
WeightedGraph complete_bipartite(Index a, Index b);
/// Uniform [0,1] weights on every pair.
WeightedGraph random_weighted(Index n, std::uint64_t seed);

/// Entries uniform in {-1, +1}.
Matrix random_sign(Index n, std::uint64_t seed);
/// Entries uniform in [-1, 1].
Matrix random_uniform(Index n, std::uint64_t seed);
/// `amplitude` on a random s x s rectangle plus uniform noise in [-noise, noise] elsewhere.
Matrix planted_rectangle(Index n, Index s, double amplitude, double noise, std::uint64_t seed);

}  // namespace fkreg::gen
