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

#include "covertime/path_solution.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "covertime/errors.h"

namespace covertime {
namespace {

void RequireMetric(const CostOracle& metric) {
  if (metric.kind() != OracleKind::kMetricSteiner) {
    throw Error(ErrorCode::kUnsupportedOracle, "path solutions need a metric-steiner oracle");
  }
}

// Prim's algorithm on `nodes` (root first); returns parent links indexed
// like `nodes`, with -1 for the root.
std::vector<int> PrimParents(const std::vector<Node>& nodes, const CostOracle& metric) {
  const int k = static_cast<int>(nodes.size());
  std::vector<int> parent(k, -1);
  std::vector<bool> in_tree(k, false);
  std::vector<Rational> best(k);
  std::vector<bool> reached(k, false);
  reached[0] = true;
  for (int step = 0; step < k; ++step) {
    int pick = -1;
    for (int i = 0; i < k; ++i) {
      if (!in_tree[i] && reached[i] && (pick < 0 || best[i] < best[pick])) pick = i;
    }
    in_tree[pick] = true;
    for (int i = 0; i < k; ++i) {
      if (in_tree[i]) continue;
      const Rational& d = metric.NodeDistance(nodes[pick], nodes[i]);
      if (!reached[i] || d < best[i]) {
        reached[i] = true;
        best[i] = d;
        parent[i] = pick;
      }
    }
  }
  return parent;
}

}  // namespace

bool RootedTree::Contains(Node v) const { return std::binary_search(nodes.begin(), nodes.end(), v); }

Rational PathCost(const std::vector<Node>& nodes, const CostOracle& metric) {
  Rational total = 0;
  for (size_t i = 0; i + 1 < nodes.size(); ++i) total += metric.NodeDistance(nodes[i], nodes[i + 1]);
  return total;
}

Rational TreeCost(const RootedTree& tree, const CostOracle& metric) {
  Rational total = 0;
  for (const auto& [a, b] : tree.edges) total += metric.NodeDistance(a, b);
  return total;
}

Rational FractionalPathCost(const FractionalPathSolution& fps, const CostOracle& metric) {
  Rational total = 0;
  for (Day t = 1; t <= fps.horizon(); ++t) {
    for (const WeightedPath& p : fps.paths(t)) total += p.weight * PathCost(p.nodes, metric);
  }
  return total;
}

Rational FpsCost(const FractionalPathSolution& fps, const CostOracle& metric) {
  Rational total = FractionalPathCost(fps, metric);
  for (Day t = 1; t <= fps.horizon(); ++t) total += TreeCost(fps.tree(t), metric);
  return total;
}

bool PathConnects(const WeightedPath& path, Node v, const RootedTree& tree) {
  if (tree.Contains(v)) return true;
  auto it = std::find(path.nodes.begin(), path.nodes.end(), v);
  for (; it != path.nodes.end(); ++it) {
    if (tree.Contains(*it)) return true;
  }
  return false;
}

bool ItemCovered(const FractionalPathSolution& fps, const DemandWindow& window) {
  for (Day t = window.start; t <= window.end; ++t) {
    if (fps.tree(t).Contains(window.item)) return true;
  }
  return false;
}

Rational DayConnectivity(const FractionalPathSolution& fps, ItemId v, Day t) {
  Rational total = 0;
  for (const WeightedPath& p : fps.paths(t)) {
    if (PathConnects(p, v, fps.tree(t))) total += p.weight;
  }
  return total;
}

std::vector<DemandWindow> UnconnectedWindows(const FractionalPathSolution& fps,
                                             const CoverInstance& instance) {
  std::vector<DemandWindow> out;
  for (const DemandWindow& w : instance.windows) {
    if (ItemCovered(fps, w)) continue;
    Rational mass = 0;
    for (Day t = w.start; t <= w.end && mass < 1; ++t) mass += DayConnectivity(fps, w.item, t);
    if (mass < 1) out.push_back(w);
  }
  return out;
}

void AddPathToTree(RootedTree& tree, const std::vector<Node>& path, const CostOracle& metric) {
  if (path.empty()) return;
  if (!tree.Contains(path.back())) {
    throw Error(ErrorCode::kInternal, "path head is not in the tree");
  }
  std::vector<Node> nodes = tree.nodes;
  nodes.insert(nodes.end(), path.begin(), path.end());
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  std::vector<std::tuple<Rational, Node, Node>> candidates;
  auto add = [&](Node a, Node b) {
    if (a == b) return;
    if (a > b) std::swap(a, b);
    candidates.emplace_back(metric.NodeDistance(a, b), a, b);
  };
  for (const auto& [a, b] : tree.edges) add(a, b);
  for (size_t i = 0; i + 1 < path.size(); ++i) add(path[i], path[i + 1]);
  std::sort(candidates.begin(), candidates.end());

  std::map<Node, Node> parent;
  for (Node v : nodes) parent[v] = v;
  std::function<Node(Node)> find = [&](Node v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  std::vector<TreeEdge> edges;
  for (const auto& [cost, a, b] : candidates) {
    const Node ra = find(a);
    const Node rb = find(b);
    if (ra == rb) continue;
    parent[ra] = rb;
    edges.push_back({a, b});
  }
  if (edges.size() + 1 != nodes.size()) {
    throw Error(ErrorCode::kInternal, "tree plus path is disconnected");
  }
  tree.nodes = std::move(nodes);
  tree.edges = std::move(edges);
}

FractionalPathSolution FpsFromSets(const FractionalSetSolution& y, const CostOracle& metric) {
  RequireMetric(metric);
  FractionalPathSolution fps(y.horizon(), metric.n_items());
  for (Day t = 1; t <= y.horizon(); ++t) {
    for (const WeightedSet& ws : y.at(t)) {
      if (ws.items.empty() || ws.weight == 0) continue;
      std::vector<Node> nodes = {CostOracle::kRootNode};
      nodes.insert(nodes.end(), ws.items.begin(), ws.items.end());
      const std::vector<int> parent = PrimParents(nodes, metric);
      std::vector<std::vector<int>> children(nodes.size());
      for (size_t i = 1; i < nodes.size(); ++i) children[parent[i]].push_back(static_cast<int>(i));
      std::vector<Node> order;
      std::function<void(int)> visit = [&](int i) {
        order.push_back(nodes[i]);
        for (int c : children[i]) visit(c);
      };
      visit(0);
      std::reverse(order.begin(), order.end());
      fps.paths(t).push_back({std::move(order), ws.weight});
    }
  }
  return fps;
}

Schedule ScheduleFromTrees(const FractionalPathSolution& fps) {
  Schedule schedule(fps.horizon());
  for (Day t = 1; t <= fps.horizon(); ++t) {
    for (Node v : fps.tree(t).nodes) {
      if (v != CostOracle::kRootNode) schedule.Add(t, v);
    }
  }
  return schedule;
}

}  // namespace covertime
