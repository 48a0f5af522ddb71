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

#include "fkreg/expander.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fkreg {

double margulis_gap_exponent() {
  static const double c = 1.0 - std::log(5.0 * std::sqrt(2.0)) / std::log(8.0);
  return c;
}

std::array<GridVertex, 8> margulis_neighbors(std::uint64_t m, GridVertex v) {
  if (m == 0) throw InputError("margulis grid side must be at least 1");
  const std::uint64_t x = v.x % m;
  const std::uint64_t y = v.y % m;
  const auto add = [m](std::uint64_t a, std::uint64_t b) { return (a + b) % m; };
  const auto sub = [m](std::uint64_t a, std::uint64_t b) { return (a + m - b % m) % m; };
  const std::uint64_t two_y = (2 * y) % m;
  const std::uint64_t two_y1 = (2 * y + 1) % m;
  const std::uint64_t two_x = (2 * x) % m;
  const std::uint64_t two_x1 = (2 * x + 1) % m;
  return {{
      {add(x, two_y), y},
      {sub(x, two_y), y},
      {add(x, two_y1), y},
      {sub(x, two_y1), y},
      {x, add(y, two_x)},
      {x, sub(y, two_x)},
      {x, add(y, two_x1)},
      {x, sub(y, two_x1)},
  }};
}

WalkLists build_base(std::uint64_t m) {
  if (m == 0) throw InputError("margulis grid side must be at least 1");
  if (m * m > std::numeric_limits<std::uint32_t>::max()) {
    throw ResourceError("margulis grid too large for 32-bit vertex ids");
  }
  WalkLists base;
  base.m = m;
  base.degree = 8;
  base.steps = 1;
  base.endpoints.resize(m * m * 8);
  for (std::uint64_t x = 0; x < m; ++x) {
    for (std::uint64_t y = 0; y < m; ++y) {
      const std::uint64_t v = x * m + y;
      const auto nb = margulis_neighbors(m, {x, y});
      for (std::size_t s = 0; s < 8; ++s) {
        base.endpoints[v * 8 + s] = static_cast<std::uint32_t>(nb[s].x * m + nb[s].y);
      }
    }
  }
  return base;
}

WalkLists power_walks(const WalkLists& base, unsigned k, const SketchConfig& config) {
  if (k == 0) throw InputError("walk length must be at least 1");
  if (base.degree != 8 || base.steps != 1) throw InputError("power_walks expects the base graph");
  const std::uint64_t nv = base.vertex_count();
  std::uint64_t degree = 1;
  for (unsigned s = 0; s < k; ++s) {
    if (degree > config.walk_budget / 8) throw ResourceError("walk lists exceed budget");
    degree *= 8;
  }
  if (nv != 0 && degree > config.walk_budget / nv) throw ResourceError("walk lists exceed budget");

  WalkLists current = base;
  for (unsigned step = 1; step < k; ++step) {
    WalkLists next;
    next.m = base.m;
    next.degree = current.degree * 8;
    next.steps = step + 1;
    next.endpoints.resize(nv * next.degree);
    for (std::uint64_t v = 0; v < nv; ++v) {
      auto* out = next.endpoints.data() + v * next.degree;
      for (std::uint32_t u : base.list(v)) {
        const auto tail = current.list(u);
        out = std::copy(tail.begin(), tail.end(), out);
      }
    }
    current = std::move(next);
  }
  return current;
}

std::uint32_t ExpanderSketch::multiplicity(Index i, Index j) const {
  if (i > j) std::swap(i, j);
  const kernels::WeightedPair key{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), 0};
  const auto it = std::lower_bound(entries.begin(), entries.end(), key, [](const auto& a, const auto& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  if (it == entries.end() || it->i != key.i || it->j != key.j) return 0;
  return it->multiplicity;
}

bool ExpanderSketch::certified_for(double entry_bound, double epsilon) const {
  if (exact) return true;
  const double e2 = epsilon * epsilon;
  const double nn = static_cast<double>(n);
  return error_bound * (nn / d) <= (e2 * e2 / 3.0) * nn / (entry_bound * entry_bound);
}

ExpanderSketch exact_sketch(Index n) {
  if (n == 0) throw InputError("sketch dimension must be at least 1");
  ExpanderSketch s;
  s.n = n;
  s.d = static_cast<double>(n);
  s.exact = true;
  s.entries.reserve(n * (n + 1) / 2);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      s.entries.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), 1});
  return s;
}

ExpanderSketch build_sketch(Index n, double d0, const SketchConfig& config) {
  if (n == 0) throw InputError("sketch dimension must be at least 1");
  if (!(d0 >= 1.0)) throw InputError("sketch degree must be at least 1");
  if (d0 >= static_cast<double>(n)) return exact_sketch(n);

  auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  while (m * m < n) ++m;
  while (m > 1 && (m - 1) * (m - 1) >= n) --m;
  const std::uint64_t grid = m * m;
  const double target = d0 * static_cast<double>(grid) / static_cast<double>(n);

  unsigned k = 1;
  double regular = 8.0;
  while (regular < target) {
    ++k;
    regular *= 8.0;
  }

  WalkLists walks;
  try {
    walks = power_walks(build_base(m), k, config);
  } catch (const ResourceError&) {
    return exact_sketch(n);
  }

  ExpanderSketch s;
  s.n = n;
  s.regular_degree = walks.degree;
  s.oversize = static_cast<double>(grid) / static_cast<double>(n);
  s.d = static_cast<double>(n) / static_cast<double>(grid) * static_cast<double>(walks.degree);
  s.error_bound = std::pow(s.oversize * s.d, 1.0 - margulis_gap_exponent());

  std::vector<std::uint32_t> row;
  for (Index i = 0; i < n; ++i) {
    const auto list = walks.list(i);
    row.clear();
    for (std::uint32_t j : list) {
      if (j >= i && j < n) row.push_back(j);
    }
    std::sort(row.begin(), row.end());
    for (std::size_t p = 0; p < row.size();) {
      std::size_t q = p;
      while (q < row.size() && row[q] == row[p]) ++q;
      s.entries.push_back({static_cast<std::uint32_t>(i), row[p], static_cast<std::uint32_t>(q - p)});
      p = q;
    }
  }
  return s;
}

double certified_degree(double entry_bound, double epsilon) {
  const double e2 = epsilon * epsilon;
  return std::pow(3.0 * entry_bound * entry_bound / (e2 * e2), 1.0 / margulis_gap_exponent());
}

}  // namespace fkreg
