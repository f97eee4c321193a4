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

// Instance reductions. Each one produces sub-instances together with a
// mapping back to the instance they came from, so that schedules for the
// pieces can be translated and united into a schedule for the whole.

#ifndef COVERTIME_REDUCE_H_
#define COVERTIME_REDUCE_H_

#include <map>
#include <tuple>
#include <vector>

#include "covertime/instance.h"

namespace covertime {

// Translates items and days of a derived instance into its parent.
struct InstanceMapping {
  // item_map[i] is the parent item of derived item i.
  std::vector<ItemId> item_map;
  // day_map[t - 1] is the parent day of derived day t, or 0 for a padding
  // day with no parent counterpart.
  std::vector<Day> day_map;

  static InstanceMapping Identity(int n_items, Day horizon);
  Day ParentDay(Day t) const { return day_map.at(t - 1); }
  friend bool operator==(const InstanceMapping&, const InstanceMapping&) = default;
};

// outer maps mid -> parent and inner maps child -> mid.
InstanceMapping ComposeMappings(const InstanceMapping& outer, const InstanceMapping& inner);

// A derived instance, an LP solution for it, and the way back.
struct SubInstance {
  CoverInstance instance;
  FractionalSetSolution y;
  InstanceMapping mapping;
};

// Translates a schedule of a derived instance into the parent with horizon
// `parent_horizon`. Orders on padding days are dropped. Throws
// Error(kMalformedInput) if the schedule does not fit the mapping.
Schedule MapSchedule(const Schedule& schedule, const InstanceMapping& mapping,
                     Day parent_horizon);

// Daywise union of the translated sub-schedules.
Schedule Recombine(const std::vector<std::pair<Schedule, InstanceMapping>>& parts,
                   Day parent_horizon);

// Turns an inventory LP solution into a cover instance: each positive demand
// (v, t) gets the window [s, t] where s is the latest day with at least half
// of the assignment x[(v, ., t)] at or after s. Returns 2y alongside.
// Throws Error(kInfeasibleInput) if some demand is assigned less than one.
SubInstance MedianWindows(const InventoryInstance& inventory,
                          const std::map<std::tuple<ItemId, Day, Day>, Rational>& x,
                          const FractionalSetSolution& y);

struct AlignedSplit {
  // Left-aligned windows; y is 2y of the input.
  SubInstance left;
  // Right-aligned windows in the original day numbering; y is 2y.
  SubInstance right;
};

// Splits every window at its highest-power-of-two cut and keeps the part
// that y covers at least half (the left part wins ties). Throws
// Error(kInfeasibleInput) if y leaves a window uncovered.
AlignedSplit SplitLeftRight(const CoverInstance& instance, const FractionalSetSolution& y);

// Reflects days t -> P + 1 - t with P the next power of two >= T, which
// turns a right-aligned family into a left-aligned one. Days without a
// preimage are padding.
SubInstance MirrorToLeft(const CoverInstance& instance, const FractionalSetSolution& y);

// Groups of items whose singleton costs are within a factor N of each
// other: starting from V_1 = V, items of V_j costing less than
// max_{V_j} f / |V_j| move on to V_{j+1}. Each group keeps its windows and
// the restriction of y to its items.
std::vector<SubInstance> WellSeparatedPartition(const CoverInstance& instance,
                                                const FractionalSetSolution& y);
std::vector<SubInstance> WellSeparatedPartition(const CoverInstance& instance);

// Returns a solution of cost at most twice that of y in which every day has
// total weight 0 or at least 1. Runs of light days are closed at the first
// day m where their mass reaches one, and the whole run's sets are copied
// onto both ends; a light tail is folded into the day before it. Throws
// Error(kInfeasibleInput) if y is infeasible.
FractionalSetSolution Sparsify(const FractionalSetSolution& y, const CoverInstance& instance);

struct HorizonBound {
  // Pieces with horizon at most N^2, N the item count of the input.
  std::vector<SubInstance> chunks;
  // Full orders of a group, already in the input's numbering, that cover
  // every window not handed to a chunk.
  Schedule resets;
};

// Per well-separated group: sparsify y, delete days without coverage, order
// the whole group every N^2 surviving days, and cut the remaining days into
// chunks between those resets. Windows through a reset day are dropped.
// Chunk windows need not be left aligned after the deletion.
HorizonBound BoundTimeHorizon(const CoverInstance& instance, const FractionalSetSolution& y);

// One copy of an item per window and the horizon padded to the next
// 2^(2^k). Throws Error(kMalformedInput) unless the windows are left
// aligned. The returned y is empty.
SubInstance Nicify(const CoverInstance& instance);

}  // namespace covertime

#endif  // COVERTIME_REDUCE_H_
