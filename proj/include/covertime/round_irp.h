// Copyright 2026 The covertime Authors
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

// Randomized iterative rounding of a fractional path solution into trees,
// for nice Steiner tree over time instances. Each iteration samples paths
// into the trees, then restricts, splits and shifts the fractional paths
// so that their total cost drops by a constant factor in expectation.

#ifndef COVERTIME_ROUND_IRP_H_
#define COVERTIME_ROUND_IRP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "covertime/instance.h"
#include "covertime/path_solution.h"

namespace covertime {

// Smallest integer K with exp(-K log log T / 2) <= 1 / (8 log T).
int DefaultKConstant(Day tower);

// ceil(64 log2(N + 1)).
int DefaultIterationCap(int n_items);

// Per item, the split point m_v of its window: the reap phase [m_v, b_v]
// is the longest suffix still carrying half a unit of connectivity.
// Items already in a tree during their window get m_v = b_v.
struct SowReap {
  std::vector<Day> split;

  bool InSow(const DemandWindow& w, Day t) const { return w.start <= t && t <= split[w.item]; }
  bool InReap(const DemandWindow& w, Day t) const { return split[w.item] <= t && t <= w.end; }
};

// Throws Error(kInfeasibleInput) if an uncovered item has connectivity
// below one.
SowReap ComputeSowReap(const FractionalPathSolution& fps, const CoverInstance& instance);

struct SampleStats {
  int sampled = 0;
  Rational added_cost;
};

// Includes each path of day t independently with probability
// min(1, scale * w) and adds the included ones to the day's tree. The
// draws for (iteration, t) come from their own substream of `seed`.
SampleStats SamplePaths(FractionalPathSolution& fps, const CostOracle& metric,
                        const Rational& scale, uint64_t seed, int iteration);

// Shortcuts every path past the nodes, other than its head, whose reap
// phase does not contain the path's day; then doubles the weights (capped
// at one) and merges identical paths.
void ReapRestrict(FractionalPathSolution& fps, const CoverInstance& instance,
                  const SowReap& sow_reap);

// germinated[v]: v is in a tree on some day of its sow phase.
std::vector<bool> Germination(const FractionalPathSolution& fps, const CoverInstance& instance,
                              const SowReap& sow_reap);

// For a path listed tail to head, entry j says whether the edge from
// nodes[j] to nodes[j+1] is fully redundant: for every i in 0..log T the
// last node of the prefix nodes[0..j] with level at most i has germinated,
// or no prefix node has level at most i. One sweep from the tail.
std::vector<bool> FullyRedundantEdges(const std::vector<Node>& nodes,
                                      const std::vector<int>& levels,
                                      const std::vector<bool>& germinated, int log_horizon);

struct SplitStats {
  int edges = 0;
  int redundant_edges = 0;
  Rational removed_cost;
};

// Removes fully redundant edges and moves each piece whose head is not the
// original head to the latest day, no later than the path's day, in the
// head's window on which the head is in the tree. Verifies that each such
// head has the minimal level of its piece. Paths that no longer serve an
// uncovered item are dropped.
SplitStats SplitAndShift(FractionalPathSolution& fps, const CoverInstance& instance,
                         const std::vector<int>& levels, const std::vector<bool>& germinated);

struct IrpOptions {
  uint64_t seed = 0;
  // Defaults to DefaultKConstant(T).
  std::optional<int> k_constant;
  // Defaults to DefaultIterationCap(N).
  std::optional<int> max_iterations;
  // Re-verify the feasibility invariants after every step.
  bool check_invariants = true;
};

struct IrpIterationTrace {
  int iteration = 0;
  int sampled_paths = 0;
  Rational added_tree_cost;
  Rational removed_edge_cost;
  Rational fractional_cost_before;
  Rational remaining_fractional_cost;
  int edges = 0;
  int redundant_edges = 0;
};

struct IrpResult {
  Schedule schedule;
  FractionalPathSolution trees;
  Rational cost;
  int iterations = 0;
  int k_constant = 0;
  std::vector<IrpIterationTrace> trace;
};

// Rounds until no fractional path remains. The instance must be nice with
// a metric-steiner oracle. Throws Error(kInfeasibleInput) if fps is not
// feasible, and Error(kNontermination) past the iteration cap.
IrpResult RoundIrp(const CoverInstance& instance, const FractionalPathSolution& fps,
                   const IrpOptions& options = {});

}  // namespace covertime

#endif  // COVERTIME_ROUND_IRP_H_
