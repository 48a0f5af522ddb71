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

#include <array>
#include <cstdint>
#include <vector>

#include "fkreg/core.hpp"
#include "fkreg/kernels.hpp"

namespace fkreg {

/// Vertex (x, y) of Z_m x Z_m, flattened row-major as x * m + y.
struct GridVertex {
  std::uint64_t x = 0;
  std::uint64_t y = 0;

  friend bool operator==(const GridVertex&, const GridVertex&) = default;
  friend auto operator<=>(const GridVertex&, const GridVertex&) = default;
};

/// Per-vertex endpoint lists of all walks of a fixed length in a regular graph.
struct WalkLists {
  std::uint64_t m = 0;       // side of the Z_m x Z_m grid
  std::uint64_t degree = 0;  // 8^k, entries per vertex
  unsigned steps = 0;        // k
  std::vector<std::uint32_t> endpoints;  // vertex v owns [v*degree, (v+1)*degree)

  std::uint64_t vertex_count() const { return m * m; }
  std::span<const std::uint32_t> list(std::uint64_t v) const {
    return {endpoints.data() + v * degree, degree};
  }
};

struct SketchConfig {
  /// Upper bound on the number of stored walk endpoints (8^k * m^2).
  std::uint64_t walk_budget = std::uint64_t{1} << 24;
};

/// Nonnegative integer matrix M with effective degree d such that
/// ||(d/n) J - M|| <= error_bound. Stored as unordered pairs i <= j.
struct ExpanderSketch {
  Index n = 0;
  double d = 0.0;
  std::vector<kernels::WeightedPair> entries;  // sorted by (i, j)
  double error_bound = 0.0;
  bool exact = false;
  /// d~ = 8^k of the powered base graph; 0 for exact sketches.
  std::uint64_t regular_degree = 0;
  /// m^2 / n for the grid the sketch was restricted from; 1 for exact sketches.
  double oversize = 1.0;

  /// m_{i,j}, zero when the pair is absent.
  std::uint32_t multiplicity(Index i, Index j) const;
  /// Error bound times n/d compared with (eps^4 / 3) n / C^2.
  bool certified_for(double entry_bound, double epsilon) const;
};

/// 1 - log_8(5 sqrt 2): spectral gap exponent of the Margulis graph.
double margulis_gap_exponent();

/// The eight Gabber-Galil neighbours of (x, y) in Z_m x Z_m, with multiplicity.
std::array<GridVertex, 8> margulis_neighbors(std::uint64_t m, GridVertex v);

/// 8-regular Margulis multigraph on m^2 vertices.
WalkLists build_base(std::uint64_t m);

/// Endpoint multisets of all length-k walks; throws ResourceError when the
/// lists would exceed the budget.
WalkLists power_walks(const WalkLists& base, unsigned k, const SketchConfig& config = {});

/// M = J_n, d = n, error bound 0.
ExpanderSketch exact_sketch(Index n);

/// Restricted walk-power sketch of effective degree at least d0, or the exact
/// sketch when d0 >= n or the walk budget would be exceeded.
ExpanderSketch build_sketch(Index n, double d0, const SketchConfig& config = {});

/// Sketch degree needed for certification at entry bound C and target epsilon.
double certified_degree(double entry_bound, double epsilon);

}  // namespace fkreg
