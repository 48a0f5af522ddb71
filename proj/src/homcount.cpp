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

#include "fkreg/homcount.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <functional>
#include <set>
#include <string>
#include <unordered_map>

namespace fkreg {
namespace {

std::shared_ptr<const std::vector<Index>> identity_view(Index size) {
  auto v = std::make_shared<std::vector<Index>>(size);
  for (Index i = 0; i < size; ++i) (*v)[i] = i;
  return v;
}

double product_of_sizes(const PartiteGraph& g) {
  double p = 1.0;
  for (Index i = 0; i < g.parts(); ++i) p *= static_cast<double>(g.size(i));
  return p;
}

void append_bytes(std::string& key, const void* data, std::size_t bytes) {
  key.append(static_cast<const char*>(data), bytes);
}

EdgeSplit split_edge(const PatternGraph& h, const PartiteGraph& g, double block_error,
                     const DecomposeConfig& config) {
  if (h.edges().empty()) throw InputError("pattern has no edge to split");
  EdgeSplit split;
  split.edge = h.edges().front();
  split.rest = h.without_edge(split.edge);
  const auto [p, q] = split.edge;
  const Index rows = g.size(p);
  const Index cols = g.size(q);
  if (rows == 0 || cols == 0) throw InputError("cannot split an edge with an empty part");
  const Index side = std::max(rows, cols);
  const double area = static_cast<double>(rows) * static_cast<double>(cols);

  double total = 0.0;
  for (Index u = 0; u < rows; ++u) {
    double row_total = 0.0;
    for (Index v = 0; v < cols; ++v) row_total += g.weight(p, q, u, v);
    total += row_total;
  }
  split.density = total / area;
  split.target = block_error * std::sqrt(area) / static_cast<double>(side);

  CutDecomposition dec;
  dec.n = side;
  dec.epsilon = split.target;
  dec.mode = config.mode;
  dec.certified = true;
  if (split.target < 1.0) {
    // Centered block, zero-padded to a square.
    Matrix centered(side);
    for (Index u = 0; u < rows; ++u)
      for (Index v = 0; v < cols; ++v) centered(u, v) = g.weight(p, q, u, v) - split.density;
    dec = run_decomposition(centered, split.target, config).decomposition;
  }
  // Otherwise sigma <= ||B - dJ||_F <= sqrt(area) <= target * side with no terms.
  dec.base = split.density;

  std::vector<CutTerm> kept;
  for (auto& term : dec.terms) {
    std::vector<Index> s;
    std::vector<Index> t;
    for (Index u : term.rows)
      if (u < rows) s.push_back(u);
    for (Index v : term.cols)
      if (v < cols) t.push_back(v);
    if (s.empty() || t.empty()) continue;
    split.pieces.push_back(g.restrict(p, s, q, t));
    kept.push_back({VertexSet(std::move(s), side), VertexSet(std::move(t), side), term.weight});
  }
  dec.terms = std::move(kept);
  split.decomposition = std::move(dec);
  return split;
}

class Estimator {
 public:
  Estimator(const CountConfig& config, CountReport& report) : config_(config), report_(report) {}

  // Estimate within budget * (product of part sizes).
  double run(const PatternGraph& h, const PartiteGraph& g, double budget, unsigned depth) {
    for (Index i = 0; i < g.parts(); ++i)
      if (g.size(i) == 0) return 0.0;
    if (h.edges().empty()) return product_of_sizes(g);

    std::string key = memo_key(h, g, budget);
    if (const auto it = memo_.find(key); it != memo_.end()) {
      ++report_.memo_hits;
      return it->second;
    }
    if (config_.exact_forests && is_forest(h)) {
      ++report_.exact_leaves;
      const double value = hom_star_forest(h, g);
      memo_.emplace(std::move(key), value);
      return value;
    }

    const auto& schedule = config_.schedule;
    double block_error = 0.5 * budget;
    if (schedule.kind == BudgetSchedule::Kind::kFixed) {
      if (schedule.targets.empty()) throw InputError("fixed schedule needs at least one target");
      block_error = schedule.targets[std::min<std::size_t>(depth, schedule.targets.size() - 1)];
    }

    if (report_.decompositions >= config_.max_decompositions) {
      throw CountError("decomposition limit of " + std::to_string(config_.max_decompositions) +
                       " reached at depth " + std::to_string(depth));
    }
    EdgeSplit split;
    try {
      split = split_edge(h, g, block_error, config_.decompose);
    } catch (const Error& e) {
      throw CountError("decomposing block (" + std::to_string(h.edges().front().first) + "," +
                       std::to_string(h.edges().front().second) + ") at depth " + std::to_string(depth) +
                       ": " + e.what());
    }
    ++report_.decompositions;
    report_.terms += split.decomposition.terms.size();
    report_.certified = report_.certified && split.decomposition.certified;

    const auto [p, q] = split.edge;
    const double area = static_cast<double>(g.size(p)) * static_cast<double>(g.size(q));
    double weight_sum = std::abs(split.density);
    for (const auto& term : split.decomposition.terms) {
      weight_sum += std::abs(term.weight) * static_cast<double>(term.rows.size()) *
                    static_cast<double>(term.cols.size()) / area;
    }

    double sub_budget = budget;
    switch (schedule.kind) {
      case BudgetSchedule::Kind::kTheoretical: {
        const double e2 = split.target * split.target;
        const double e4 = e2 * e2;
        sub_budget = 0.5 * budget / (1.0 + 100.0 / (e4 * e4));
        break;
      }
      case BudgetSchedule::Kind::kAdaptive:
        if (weight_sum > 0.0) sub_budget = 0.5 * budget / weight_sum;
        break;
      case BudgetSchedule::Kind::kFixed:
        break;
    }

    double value = 0.0;
    if (split.density != 0.0) value += split.density * run(split.rest, g, sub_budget, depth + 1);
    for (std::size_t i = 0; i < split.pieces.size(); ++i) {
      value += split.decomposition.terms[i].weight * run(split.rest, split.pieces[i], sub_budget, depth + 1);
    }
    memo_.emplace(std::move(key), value);
    return value;
  }

 private:
  static std::string memo_key(const PatternGraph& h, const PartiteGraph& g, double budget) {
    std::string key;
    for (const auto& e : h.edges()) {
      append_bytes(key, &e.first, sizeof(Index));
      append_bytes(key, &e.second, sizeof(Index));
    }
    append_bytes(key, &budget, sizeof(double));
    for (Index i = 0; i < g.parts(); ++i) {
      const auto m = g.members(i);
      const Index size = m.size();
      append_bytes(key, &size, sizeof(Index));
      append_bytes(key, m.data(), m.size() * sizeof(Index));
    }
    return key;
  }

  const CountConfig& config_;
  CountReport& report_;
  std::unordered_map<std::string, double> memo_;
};

}  // namespace

// ---------------------------------------------------------------- PartiteGraph

PartiteGraph::PartiteGraph(std::vector<Index> sizes, BlockMap blocks, bool require_unit_range)
    : blocks_(std::move(blocks)) {
  members_.reserve(sizes.size());
  for (Index s : sizes) members_.push_back(identity_view(s));
  std::set<const Block*> checked;
  for (const auto& [key, blk] : blocks_) {
    const auto [i, j] = key;
    if (i >= j || j >= sizes.size()) throw InputError("partite blocks must be keyed by (i, j) with i < j < k");
    if (!blk || blk->rows != sizes[i] || blk->cols != sizes[j] || blk->weights.size() != blk->rows * blk->cols) {
      throw InputError("partite block shape does not match part sizes");
    }
    if (!checked.insert(blk.get()).second) continue;
    for (double w : blk->weights) {
      if (!std::isfinite(w)) throw InputError("partite block weights must be finite");
      if (require_unit_range && !(w >= 0.0 && w <= 1.0)) {
        throw InputError("partite block weights must lie in [0,1]");
      }
    }
  }
}

bool PartiteGraph::has_block(Index p, Index q) const {
  if (p > q) std::swap(p, q);
  return blocks_.count({p, q}) != 0;
}

const PartiteGraph::Block& PartiteGraph::block(Index i, Index j) const {
  const auto it = blocks_.find({i, j});
  if (it == blocks_.end()) {
    throw InputError("partite graph has no block between parts " + std::to_string(i) + " and " +
                     std::to_string(j));
  }
  return *it->second;
}

double PartiteGraph::weight(Index p, Index q, Index u, Index v) const {
  const Index bu = (*members_[p])[u];
  const Index bv = (*members_[q])[v];
  return p < q ? block(p, q).at(bu, bv) : block(q, p).at(bv, bu);
}

PartiteGraph PartiteGraph::restrict(Index p, std::span<const Index> keep_p, Index q,
                                    std::span<const Index> keep_q) const {
  PartiteGraph out = *this;
  const auto narrow = [](const std::vector<Index>& view, std::span<const Index> keep) {
    auto v = std::make_shared<std::vector<Index>>();
    v->reserve(keep.size());
    for (Index pos : keep) {
      check_index(pos, view.size(), "restricted part");
      v->push_back(view[pos]);
    }
    return v;
  };
  out.members_[p] = narrow(*members_[p], keep_p);
  out.members_[q] = narrow(*members_[q], keep_q);
  return out;
}

PartiteGraph PartiteGraph::materialize() const {
  std::vector<Index> sizes(parts());
  for (Index i = 0; i < parts(); ++i) sizes[i] = size(i);
  BlockMap fresh;
  for (const auto& [key, blk] : blocks_) {
    const auto [i, j] = key;
    auto b = std::make_shared<Block>();
    b->rows = sizes[i];
    b->cols = sizes[j];
    b->weights.resize(b->rows * b->cols);
    for (Index u = 0; u < b->rows; ++u)
      for (Index v = 0; v < b->cols; ++v) b->weights[u * b->cols + v] = weight(i, j, u, v);
    fresh.emplace(key, std::move(b));
  }
  return PartiteGraph(std::move(sizes), std::move(fresh), false);
}

PartiteGraph PartiteGraph::with_block(Index p, Index q, const Block& blk) const {
  PartiteGraph out = materialize();
  if (blk.rows != size(p) || blk.cols != size(q)) throw InputError("replacement block has the wrong shape");
  auto b = std::make_shared<Block>();
  if (p < q) {
    *b = blk;
  } else {
    b->rows = blk.cols;
    b->cols = blk.rows;
    b->weights.resize(blk.weights.size());
    for (Index u = 0; u < blk.rows; ++u)
      for (Index v = 0; v < blk.cols; ++v) b->weights[v * b->cols + u] = blk.at(u, v);
  }
  out.blocks_[{std::min(p, q), std::max(p, q)}] = std::move(b);
  return out;
}

PartiteGraph blow_up(const WeightedGraph& g, Index k) {
  if (k == 0) throw InputError("blow-up needs at least one part");
  const Index n = g.n();
  auto blk = std::make_shared<PartiteGraph::Block>();
  blk->rows = n;
  blk->cols = n;
  blk->weights.assign(g.adjacency().data().begin(), g.adjacency().data().end());
  std::shared_ptr<const PartiteGraph::Block> shared = std::move(blk);
  PartiteGraph::BlockMap blocks;
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j) blocks.emplace(std::pair{i, j}, shared);
  return PartiteGraph(std::vector<Index>(k, n), std::move(blocks));
}

// ---------------------------------------------------------------- counting

double hom_star_exact(const PatternGraph& h, const PartiteGraph& g, double budget) {
  const Index k = h.k();
  if (g.parts() != k) throw InputError("pattern size does not match the number of parts");
  if (product_of_sizes(g) > budget) throw ResourceError("hom* enumeration exceeds budget");
  std::vector<std::vector<Index>> back(k);
  for (const auto& [u, v] : h.edges()) back[v].push_back(u);
  for (const auto& [u, v] : h.edges())
    if (!g.has_block(u, v)) throw InputError("partite graph lacks a block used by the pattern");

  std::vector<Index> image(k);
  double total = 0.0;
  std::function<void(Index, double)> walk = [&](Index depth, double weight) {
    if (depth == k) {
      total += weight;
      return;
    }
    for (Index x = 0; x < g.size(depth); ++x) {
      double w = weight;
      for (Index u : back[depth]) w *= g.weight(u, depth, image[u], x);
      if (w == 0.0) continue;
      image[depth] = x;
      walk(depth + 1, w);
    }
  };
  walk(0, 1.0);
  return total;
}

bool is_forest(const PatternGraph& h) {
  std::vector<Index> root(h.k());
  for (Index v = 0; v < h.k(); ++v) root[v] = v;
  const auto find = [&](Index v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto& [u, v] : h.edges()) {
    const Index a = find(u);
    const Index b = find(v);
    if (a == b) return false;
    root[a] = b;
  }
  return true;
}

double hom_star_forest(const PatternGraph& f, const PartiteGraph& g) {
  const Index k = f.k();
  if (g.parts() != k) throw InputError("pattern size does not match the number of parts");
  if (!is_forest(f)) throw InputError("pattern has a cycle");
  std::vector<std::vector<Index>> nb(k);
  for (const auto& [u, v] : f.edges()) {
    if (!g.has_block(u, v)) throw InputError("partite graph lacks a block used by the pattern");
    nb[u].push_back(v);
    nb[v].push_back(u);
  }

  std::vector<char> seen(k, 0);
  std::vector<Index> parent(k, k);
  std::vector<std::vector<double>> value(k);
  double total = 1.0;
  for (Index r = 0; r < k; ++r) {
    if (seen[r]) continue;
    std::vector<Index> order{r};
    seen[r] = 1;
    for (std::size_t at = 0; at < order.size(); ++at) {
      for (Index c : nb[order[at]]) {
        if (seen[c]) continue;
        seen[c] = 1;
        parent[c] = order[at];
        order.push_back(c);
      }
    }
    for (Index v : order) value[v].assign(g.size(v), 1.0);
    for (std::size_t at = order.size(); at-- > 1;) {
      const Index v = order[at];
      const Index up = parent[v];
      for (Index x = 0; x < g.size(up); ++x) {
        double acc = 0.0;
        for (Index y = 0; y < g.size(v); ++y) acc += g.weight(up, v, x, y) * value[v][y];
        value[up][x] *= acc;
      }
    }
    double component = 0.0;
    for (double x : value[r]) component += x;
    total *= component;
  }
  return total;
}

EdgeSplit split_first_edge(const PatternGraph& h, const PartiteGraph& g, double block_error,
                           const DecomposeConfig& config) {
  if (h.k() != g.parts()) throw InputError("pattern size does not match the number of parts");
  return split_edge(h, g, block_error, config);
}

CountReport count_hom_star(const PatternGraph& h, const PartiteGraph& g, double epsilon,
                           const CountConfig& config) {
  if (h.k() != g.parts()) throw InputError("pattern size does not match the number of parts");
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  for (const auto& [u, v] : h.edges())
    if (!g.has_block(u, v)) throw InputError("partite graph lacks a block used by the pattern");
  for (const auto& [key, blk] : g.blocks())
    for (double w : blk->weights)
      if (!(w >= 0.0 && w <= 1.0)) throw InputError("counting requires block weights in [0,1]");

  CountReport report;
  Estimator estimator(config, report);
  report.estimate = estimator.run(h, g, epsilon, 0);
  const bool weight_bound_holds =
      config.schedule.kind == BudgetSchedule::Kind::kAdaptive ||
      (config.schedule.kind == BudgetSchedule::Kind::kTheoretical && config.decompose.mode == Mode::kFaithful);
  report.guaranteed = report.certified && weight_bound_holds;
  return report;
}

double approx_hom_star(const PatternGraph& h, const PartiteGraph& g, double epsilon, const CountConfig& config) {
  return count_hom_star(h, g, epsilon, config).estimate;
}

CountReport count_hom(const PatternGraph& h, const WeightedGraph& g, double epsilon, const CountConfig& config) {
  if (h.k() == 0) {
    CountReport r;
    r.estimate = 1.0;
    r.guaranteed = true;
    return r;
  }
  return count_hom_star(h, blow_up(g, h.k()), epsilon, config);
}

double approx_hom(const PatternGraph& h, const WeightedGraph& g, double epsilon, const CountConfig& config) {
  return count_hom(h, g, epsilon, config).estimate;
}

double clamp_estimate(double estimate, double upper) { return std::clamp(estimate, 0.0, upper); }

}  // namespace fkreg
