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

#include "covertime/round_irp.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "covertime/errors.h"
#include "covertime/intervals.h"
#include "covertime/random.h"

namespace covertime {
namespace {

// The single window of each item, or nullopt for items without demand.
std::vector<std::optional<DemandWindow>> WindowOfItem(const CoverInstance& instance) {
  std::vector<std::optional<DemandWindow>> by_item(instance.n_items);
  for (const DemandWindow& w : instance.windows) {
    if (by_item[w.item]) {
      throw Error(ErrorCode::kMalformedInput,
                  "iterative rounding needs one window per item; item " +
                      std::to_string(w.item) + " has several");
    }
    by_item[w.item] = w;
  }
  return by_item;
}

bool IsItem(Node v) { return v != CostOracle::kRootNode; }

// Merges identical paths of every day, capping the merged weight at one.
void MergeDuplicates(FractionalPathSolution& fps) {
  for (Day t = 1; t <= fps.horizon(); ++t) {
    std::map<std::vector<Node>, Rational> merged;
    std::vector<std::vector<Node>> order;
    for (WeightedPath& p : fps.paths(t)) {
      auto [it, inserted] = merged.try_emplace(p.nodes, 0);
      if (inserted) order.push_back(p.nodes);
      it->second += p.weight;
    }
    std::vector<WeightedPath> out;
    for (auto& nodes : order) {
      Rational w = merged[nodes];
      if (w > 1) w = 1;
      if (w > 0) out.push_back({std::move(nodes), w});
    }
    fps.paths(t) = std::move(out);
  }
}

void CheckMetricNice(const CoverInstance& instance, const FractionalPathSolution& fps) {
  if (instance.oracle.kind() != OracleKind::kMetricSteiner) {
    throw Error(ErrorCode::kUnsupportedOracle, "iterative rounding needs a metric oracle");
  }
  if (!instance.nice || !IsTower(instance.horizon) ||
      !FamilyIsLeftAligned([&] {
        std::vector<Interval> family;
        for (const DemandWindow& w : instance.windows) family.push_back({w.start, w.end});
        return family;
      }())) {
    throw Error(ErrorCode::kMalformedInput, "iterative rounding needs a nice instance");
  }
  if (fps.horizon() != instance.horizon || fps.n_items() != instance.n_items) {
    throw Error(ErrorCode::kMalformedInput, "path solution does not match the instance");
  }
}

}  // namespace

int DefaultKConstant(Day tower) {
  const int k = LogLogHorizon(tower);
  const double log_t = std::max(1, Log2Exact(tower));
  int big_k = 1;
  while (std::exp(-big_k * k / 2.0) > 1.0 / (8.0 * log_t)) ++big_k;
  return big_k;
}

int DefaultIterationCap(int n_items) {
  return static_cast<int>(std::ceil(64.0 * std::log2(n_items + 1.0)));
}

SowReap ComputeSowReap(const FractionalPathSolution& fps, const CoverInstance& instance) {
  SowReap result;
  result.split.assign(instance.n_items, 0);
  for (const auto& window : WindowOfItem(instance)) {
    if (!window) continue;
    const DemandWindow& w = *window;
    if (ItemCovered(fps, w)) {
      result.split[w.item] = w.end;
      continue;
    }
    std::vector<Rational> mass(w.end - w.start + 1);
    Rational total = 0;
    for (Day t = w.start; t <= w.end; ++t) {
      mass[t - w.start] = DayConnectivity(fps, w.item, t);
      total += mass[t - w.start];
    }
    if (total < 1) {
      throw Error(ErrorCode::kInfeasibleInput,
                  "item " + std::to_string(w.item) + " has connectivity below one");
    }
    // Largest m whose suffix [m, b] still holds half a unit.
    Rational tail = 0;
    Day m = w.start;
    for (Day t = w.end; t >= w.start; --t) {
      tail += mass[t - w.start];
      if (2 * tail >= 1) {
        m = t;
        break;
      }
    }
    result.split[w.item] = m;
  }
  return result;
}

SampleStats SamplePaths(FractionalPathSolution& fps, const CostOracle& metric,
                        const Rational& scale, uint64_t seed, int iteration) {
  SampleStats stats;
  for (Day t = 1; t <= fps.horizon(); ++t) {
    if (fps.paths(t).empty()) continue;
    std::mt19937_64 rng = SubstreamRng(seed, "irp/sample", iteration, t);
    std::vector<const WeightedPath*> chosen;
    for (const WeightedPath& p : fps.paths(t)) {
      const Rational probability = scale * p.weight;
      // Draw even when the outcome is certain so that the stream position
      // depends only on the path index.
      const double u = UniformUnit(rng);
      if (probability >= 1 || u < ToDouble(probability)) chosen.push_back(&p);
    }
    RootedTree& tree = fps.tree(t);
    const Rational before = TreeCost(tree, metric);
    for (const WeightedPath* p : chosen) AddPathToTree(tree, p->nodes, metric);
    stats.sampled += static_cast<int>(chosen.size());
    stats.added_cost += TreeCost(tree, metric) - before;
  }
  return stats;
}

void ReapRestrict(FractionalPathSolution& fps, const CoverInstance& instance,
                  const SowReap& sow_reap) {
  const auto by_item = WindowOfItem(instance);
  for (Day t = 1; t <= fps.horizon(); ++t) {
    for (WeightedPath& p : fps.paths(t)) {
      std::vector<Node> kept;
      for (size_t j = 0; j + 1 < p.nodes.size(); ++j) {
        const Node u = p.nodes[j];
        if (IsItem(u) && by_item[u] && sow_reap.InReap(*by_item[u], t)) kept.push_back(u);
      }
      kept.push_back(p.head());
      p.nodes = std::move(kept);
      p.weight *= 2;
    }
  }
  MergeDuplicates(fps);
}

std::vector<bool> Germination(const FractionalPathSolution& fps, const CoverInstance& instance,
                              const SowReap& sow_reap) {
  std::vector<bool> germinated(instance.n_items, true);
  for (const auto& window : WindowOfItem(instance)) {
    if (!window) continue;
    bool found = false;
    for (Day t = window->start; t <= sow_reap.split[window->item] && !found; ++t) {
      found = fps.tree(t).Contains(window->item);
    }
    germinated[window->item] = found;
  }
  return germinated;
}

std::vector<bool> FullyRedundantEdges(const std::vector<Node>& nodes,
                                      const std::vector<int>& levels,
                                      const std::vector<bool>& germinated, int log_horizon) {
  std::vector<bool> redundant(nodes.empty() ? 0 : nodes.size() - 1, false);
  // last[i]: the latest node so far with level at most i, or the root
  // marker when there is none.
  std::vector<Node> last(log_horizon + 1, CostOracle::kRootNode);
  for (size_t j = 0; j < redundant.size(); ++j) {
    const Node u = nodes[j];
    if (!IsItem(u)) {
      throw Error(ErrorCode::kInternal, "the root appears before the head of a path");
    }
    for (int i = std::max(0, levels[u]); i <= log_horizon; ++i) last[i] = u;
    bool all = true;
    for (int i = 0; i <= log_horizon && all; ++i) {
      all = !IsItem(last[i]) || germinated[last[i]];
    }
    redundant[j] = all;
  }
  return redundant;
}

SplitStats SplitAndShift(FractionalPathSolution& fps, const CoverInstance& instance,
                         const std::vector<int>& levels, const std::vector<bool>& germinated) {
  const auto by_item = WindowOfItem(instance);
  const int log_t = Log2Exact(instance.horizon);
  const CostOracle& metric = instance.oracle;
  SplitStats stats;
  std::vector<std::vector<WeightedPath>> next(fps.horizon() + 1);
  auto serves = [&](const std::vector<Node>& nodes, Day t) {
    for (Node u : nodes) {
      if (IsItem(u) && by_item[u] && by_item[u]->Contains(t) && !ItemCovered(fps, *by_item[u])) {
        return true;
      }
    }
    return false;
  };
  auto emit = [&](std::vector<Node> nodes, Day t, const Rational& weight) {
    if (serves(nodes, t)) next[t].push_back({std::move(nodes), weight});
  };

  for (Day t = 1; t <= fps.horizon(); ++t) {
    for (const WeightedPath& p : fps.paths(t)) {
      const std::vector<bool> redundant = FullyRedundantEdges(p.nodes, levels, germinated, log_t);
      stats.edges += static_cast<int>(redundant.size());
      std::vector<Node> piece;
      for (size_t j = 0; j < p.nodes.size(); ++j) {
        piece.push_back(p.nodes[j]);
        const bool last_node = j + 1 == p.nodes.size();
        if (!last_node && !redundant[j]) continue;
        if (!last_node) {
          ++stats.redundant_edges;
          stats.removed_cost += p.weight * metric.NodeDistance(p.nodes[j], p.nodes[j + 1]);
        }
        if (last_node) {
          emit(std::move(piece), t, p.weight);
        } else {
          const Node head = piece.back();
          for (Node u : piece) {
            if (levels[u] < levels[head]) {
              throw Error(ErrorCode::kInternal, "split piece head is not of minimal level");
            }
          }
          const DemandWindow& w = *by_item[head];
          Day target = 0;
          for (Day s = std::min(t, w.end); s >= w.start; --s) {
            if (fps.tree(s).Contains(head)) {
              target = s;
              break;
            }
          }
          if (target == 0) {
            throw Error(ErrorCode::kInternal, "no earlier tree day for a split piece head");
          }
          emit(std::move(piece), target, p.weight);
        }
        piece.clear();
      }
    }
  }
  for (Day t = 1; t <= fps.horizon(); ++t) fps.paths(t) = std::move(next[t]);
  MergeDuplicates(fps);
  return stats;
}

IrpResult RoundIrp(const CoverInstance& instance, const FractionalPathSolution& fps,
                   const IrpOptions& options) {
  instance.Validate();
  CheckMetricNice(instance, fps);
  const auto by_item = WindowOfItem(instance);
  const CostOracle& metric = instance.oracle;
  const int k = LogLogHorizon(instance.horizon);

  IrpResult result;
  result.k_constant = options.k_constant.value_or(DefaultKConstant(instance.horizon));
  if (result.k_constant < 1) throw Error(ErrorCode::kUsage, "K must be positive");
  const int cap = options.max_iterations.value_or(DefaultIterationCap(instance.n_items));
  const Rational scale(result.k_constant * k);

  std::vector<int> levels(instance.n_items, 0);
  for (const auto& w : by_item) {
    if (w) levels[w->item] = IntervalLevel({w->start, w->end});
  }

  FractionalPathSolution current = fps;
  if (!UnconnectedWindows(current, instance).empty()) {
    throw Error(ErrorCode::kInfeasibleInput, "fractional path solution is not feasible");
  }
  // Paths that serve nobody are dropped up front.
  SplitAndShift(current, instance, levels, std::vector<bool>(instance.n_items, false));

  auto any_paths = [&] {
    for (Day t = 1; t <= current.horizon(); ++t) {
      if (!current.paths(t).empty()) return true;
    }
    return false;
  };
  while (any_paths()) {
    if (result.iterations >= cap) {
      throw Error(ErrorCode::kNontermination,
                  "iterative rounding exceeded " + std::to_string(cap) + " iterations");
    }
    IrpIterationTrace step;
    step.iteration = ++result.iterations;
    step.fractional_cost_before = FractionalPathCost(current, metric);

    const SowReap sow_reap = ComputeSowReap(current, instance);
    const SampleStats sampled =
        SamplePaths(current, metric, scale, options.seed, step.iteration);
    step.sampled_paths = sampled.sampled;
    step.added_tree_cost = sampled.added_cost;

    ReapRestrict(current, instance, sow_reap);
    if (options.check_invariants) {
      for (const auto& w : by_item) {
        if (!w || ItemCovered(current, *w)) continue;
        Rational mass = 0;
        for (Day t = sow_reap.split[w->item]; t <= w->end; ++t) {
          mass += DayConnectivity(current, w->item, t);
        }
        if (mass < 1) {
          throw Error(ErrorCode::kInternal, "reap restriction lost connectivity");
        }
      }
    }
    const std::vector<bool> germinated = Germination(current, instance, sow_reap);
    const SplitStats split = SplitAndShift(current, instance, levels, germinated);
    step.edges = split.edges;
    step.redundant_edges = split.redundant_edges;
    step.removed_edge_cost = split.removed_cost;
    step.remaining_fractional_cost = FractionalPathCost(current, metric);
    if (options.check_invariants && !UnconnectedWindows(current, instance).empty()) {
      throw Error(ErrorCode::kInternal, "split and shift lost connectivity");
    }
    result.trace.push_back(std::move(step));
  }

  if (!UnconnectedWindows(current, instance).empty()) {
    throw Error(ErrorCode::kInternal, "rounded trees miss a window");
  }
  result.schedule = ScheduleFromTrees(current);
  result.cost = 0;
  for (Day t = 1; t <= current.horizon(); ++t) result.cost += TreeCost(current.tree(t), metric);
  result.trees = std::move(current);
  return result;
}

}  // namespace covertime
