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

// Fractional path solutions for Steiner tree over time: per day, an
// integral tree through the root plus weighted directed paths whose heads
// sit in that tree.

#ifndef COVERTIME_PATH_SOLUTION_H_
#define COVERTIME_PATH_SOLUTION_H_

#include <utility>
#include <vector>

#include "covertime/cost_oracle.h"
#include "covertime/instance.h"
#include "covertime/rational.h"

namespace covertime {

// Nodes are items 0..N-1 plus the root, CostOracle::kRootNode.
using Node = int;
using TreeEdge = std::pair<Node, Node>;

struct RootedTree {
  // Sorted; always contains the root.
  std::vector<Node> nodes = {CostOracle::kRootNode};
  std::vector<TreeEdge> edges;

  bool Contains(Node v) const;
};

// A directed path listed from tail to head.
struct WeightedPath {
  std::vector<Node> nodes;
  Rational weight;

  Node head() const { return nodes.back(); }
  friend bool operator==(const WeightedPath&, const WeightedPath&) = default;
};

class FractionalPathSolution {
 public:
  FractionalPathSolution() = default;
  FractionalPathSolution(Day horizon, int n_items)
      : n_items_(n_items), trees_(horizon), paths_(horizon) {}

  Day horizon() const { return static_cast<Day>(trees_.size()); }
  int n_items() const { return n_items_; }
  const RootedTree& tree(Day t) const { return trees_.at(t - 1); }
  RootedTree& tree(Day t) { return trees_.at(t - 1); }
  const std::vector<WeightedPath>& paths(Day t) const { return paths_.at(t - 1); }
  std::vector<WeightedPath>& paths(Day t) { return paths_.at(t - 1); }

 private:
  int n_items_ = 0;
  std::vector<RootedTree> trees_;
  std::vector<std::vector<WeightedPath>> paths_;
};

Rational PathCost(const std::vector<Node>& nodes, const CostOracle& metric);
Rational TreeCost(const RootedTree& tree, const CostOracle& metric);

// Sum of tree costs plus weighted path costs.
Rational FpsCost(const FractionalPathSolution& fps, const CostOracle& metric);
// The weighted path part alone.
Rational FractionalPathCost(const FractionalPathSolution& fps, const CostOracle& metric);

// True if some node at or after v on the path lies in the tree.
bool PathConnects(const WeightedPath& path, Node v, const RootedTree& tree);

// v lies in the tree of some day of its window.
bool ItemCovered(const FractionalPathSolution& fps, const DemandWindow& window);

// Connectivity mass of the window's item on day t: the weight of paths
// that connect it to that day's tree.
Rational DayConnectivity(const FractionalPathSolution& fps, ItemId v, Day t);

// Windows that are neither covered by a tree nor receive one unit of path
// connectivity. Empty iff fps is feasible.
std::vector<DemandWindow> UnconnectedWindows(const FractionalPathSolution& fps,
                                             const CoverInstance& instance);

// Adds the path to the tree: the result spans both and keeps a cheapest
// spanning subgraph of their union, so it costs at most the sum. Throws
// Error(kInternal) if the path's head is not in the tree.
void AddPathToTree(RootedTree& tree, const std::vector<Node>& path, const CostOracle& metric);

// For every set S of y on day t, a path through S ending at the root,
// obtained by walking a minimum spanning tree of S plus the root in depth
// first order and reversing; it costs at most twice that tree. Trees start
// as the bare root. Throws Error(kUnsupportedOracle) for non-metric oracles.
FractionalPathSolution FpsFromSets(const FractionalSetSolution& y, const CostOracle& metric);

// Schedule S_t = nodes of the day-t tree other than the root.
Schedule ScheduleFromTrees(const FractionalPathSolution& fps);

}  // namespace covertime

#endif  // COVERTIME_PATH_SOLUTION_H_
