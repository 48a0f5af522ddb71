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

#include <map>
#include <memory>
#include <vector>

#include "fkreg/core.hpp"
#include "fkreg/decompose.hpp"

namespace fkreg {

/// k-partite weighted graph. Blocks are stored once per unordered part pair
/// over the parts' base vertices; each part is an index view into its base
/// vertex list, so restricting parts never copies block storage.
class PartiteGraph {
 public:
  /// Weights between base vertices of part i (rows) and part j (cols), i < j.
  struct Block {
    Index rows = 0;
    Index cols = 0;
    std::vector<double> weights;

    double at(Index u, Index v) const { return weights[u * cols + v]; }
  };
  using BlockMap = std::map<std::pair<Index, Index>, std::shared_ptr<const Block>>;

  PartiteGraph() = default;
  /// Blocks keyed by (i, j) with i < j. With require_unit_range, entries outside
  /// [0,1] throw InputError.
  PartiteGraph(std::vector<Index> sizes, BlockMap blocks, bool require_unit_range = true);

  Index parts() const { return members_.size(); }
  Index size(Index part) const { return members_[part]->size(); }
  bool has_block(Index p, Index q) const;
  /// G(u, v) for u in the view of part p and v in the view of part q.
  double weight(Index p, Index q, Index u, Index v) const;

  /// View with parts p and q cut down to the given positions (into their current views).
  PartiteGraph restrict(Index p, std::span<const Index> keep_p, Index q, std::span<const Index> keep_q) const;
  /// Copy with every view flattened into fresh blocks.
  PartiteGraph materialize() const;
  /// Copy (materialized) with the (p, q) block replaced by the given |V_p| x |V_q| weights.
  PartiteGraph with_block(Index p, Index q, const Block& block) const;

  std::span<const Index> members(Index part) const { return *members_[part]; }
  const BlockMap& blocks() const { return blocks_; }

 private:
  const Block& block(Index i, Index j) const;

  std::vector<std::shared_ptr<const std::vector<Index>>> members_;
  BlockMap blocks_;
};

/// k copies of V(G) with every block equal to A_G (one shared block).
PartiteGraph blow_up(const WeightedGraph& g, Index k);

/// hom*(H, G) by enumerating V_1 x ... x V_k in lexicographic order.
double hom_star_exact(const PatternGraph& h, const PartiteGraph& g, double budget = 1e8);

bool is_forest(const PatternGraph& h);
/// hom*(F, G) for an acyclic pattern by dynamic programming over its trees,
/// O(sum over edges of |V_u||V_v|). Throws InputError when F has a cycle.
double hom_star_forest(const PatternGraph& f, const PartiteGraph& g);

struct BudgetSchedule {
  // Budgets are relative: a call on parts V_1..V_k with budget eps must be
  // within eps |V_1|...|V_k|. The split block gets eps/2 and every child the
  // same relative budget eps_sub.
  enum class Kind {
    /// eps_sub = (eps/2) / (1 + 100 eps_dec^-8), from the faithful weight and term bounds.
    kTheoretical,
    /// eps_sub = (eps/2) / (|d| + sum |c_i| |S_i||T_i| / (|V_p||V_q|)) for the
    /// decomposition actually found.
    kAdaptive,
    /// Decomposition target targets[depth] (last entry repeats); no error guarantee.
    kFixed,
  };
  Kind kind = Kind::kAdaptive;
  std::vector<double> targets;

  static BudgetSchedule theoretical() { return {Kind::kTheoretical, {}}; }
  static BudgetSchedule adaptive() { return {}; }
  static BudgetSchedule fixed(std::vector<double> targets) { return {Kind::kFixed, std::move(targets)}; }
};

struct CountConfig {
  DecomposeConfig decompose;
  BudgetSchedule schedule;
  /// Count acyclic remainders exactly instead of splitting further.
  bool exact_forests = true;
  /// Work limit; exceeding it throws CountError.
  std::uint64_t max_decompositions = 50000;
};

struct CountReport {
  double estimate = 0.0;
  std::uint64_t decompositions = 0;
  std::uint64_t terms = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t exact_leaves = 0;
  /// Every decomposition ended on a certified Regular verdict.
  bool certified = true;
  /// The additive error bound eps n^k is proved (certified and a non-fixed schedule
  /// whose weight bound holds for the decomposition mode).
  bool guaranteed = false;
};

/// Failure inside the recursion, with the edge and depth in the message.
class CountError : public Error {
 public:
  using Error::Error;
};

/// First-level split of the counting recursion on the smallest edge of H.
struct EdgeSplit {
  PatternGraph::Edge edge;
  PatternGraph rest;
  double density = 0.0;
  CutDecomposition decomposition;  // over the zero-padded N = max(|V_p|,|V_q|) square
  double target = 0.0;             // decomposition epsilon eps_dec
  std::vector<PartiteGraph> pieces;  // G^(i), one per term
};

/// Decomposes the block B of the smallest edge (p, q) so that
/// ||B - d J - sum c_i K_i||_cut <= block_error |V_p||V_q|, and builds the
/// restricted graphs. The padded decomposition runs at
/// eps_dec = block_error sqrt(|V_p||V_q|) / N, whose spectral certificate
/// gives the cut bound through |1_S^T R 1_T| <= sigma sqrt(|S||T|).
EdgeSplit split_first_edge(const PatternGraph& h, const PartiteGraph& g, double block_error,
                           const DecomposeConfig& config = {});

/// Estimate of hom*(H, G) within eps |V_1|...|V_k| (so within eps n^k) when
/// the report says `guaranteed`. Blocks must lie in [0,1]. Not clamped.
CountReport count_hom_star(const PatternGraph& h, const PartiteGraph& g, double epsilon,
                           const CountConfig& config = {});
double approx_hom_star(const PatternGraph& h, const PartiteGraph& g, double epsilon,
                       const CountConfig& config = {});

/// hom(H, G) = hom*(H, G*) via the blow-up. Differs from the labeled copy
/// count by O(n^{v(H)-1}).
CountReport count_hom(const PatternGraph& h, const WeightedGraph& g, double epsilon,
                      const CountConfig& config = {});
double approx_hom(const PatternGraph& h, const WeightedGraph& g, double epsilon,
                  const CountConfig& config = {});

/// Clamps an estimate to [0, upper] for presentation.
double clamp_estimate(double estimate, double upper);

}  // namespace fkreg
