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

#ifndef COVERTIME_INSTANCE_H_
#define COVERTIME_INSTANCE_H_

#include <map>
#include <tuple>
#include <vector>

#include "covertime/cost_oracle.h"
#include "covertime/item_set.h"
#include "covertime/rational.h"

namespace covertime {

struct DemandWindow {
  ItemId item = 0;
  Day start = 1;
  Day end = 1;

  bool Contains(Day t) const { return start <= t && t <= end; }
  friend bool operator==(const DemandWindow&, const DemandWindow&) = default;
};

// Covering problem: every window needs its item ordered on some day inside
// it, and each day t costs f(S_t).
struct CoverInstance {
  int n_items = 0;
  Day horizon = 0;
  std::vector<DemandWindow> windows;
  CostOracle oracle;
  // Claims the instance is nice: left aligned, one window per item and a
  // horizon of the form 2^(2^k). Validate() checks the claim.
  bool nice = false;

  // Throws Error(kMalformedInput) on out-of-range items or days, or an
  // oracle defined over a different number of items.
  void Validate() const;
};

struct Demand {
  ItemId item = 0;
  Day day = 1;
  Rational quantity;
};

// The inventory problem before the reduction to windows: demands and
// holding costs h^v_{st} for serving the demand of day t from an order on
// day s <= t. Absent holding entries are zero.
struct InventoryInstance {
  int n_items = 0;
  Day horizon = 0;
  std::vector<Demand> demands;
  std::map<std::tuple<ItemId, Day, Day>, Rational> holding;
  CostOracle oracle;

  const Rational& Holding(ItemId v, Day s, Day t) const;
  void Validate() const;
};

// Integral solution: one item set per day.
class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(Day horizon) : sets_(horizon) {}

  Day horizon() const { return static_cast<Day>(sets_.size()); }
  const ItemSet& at(Day t) const { return sets_.at(t - 1); }
  ItemSet& at(Day t) { return sets_.at(t - 1); }
  void Add(Day t, ItemId v) { SetInsert(at(t), v); }
  void AddAll(Day t, const ItemSet& s) { at(t) = SetUnion(at(t), s); }
  bool Contains(Day t, ItemId v) const { return SetContains(at(t), v); }

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::vector<ItemSet> sets_;
};

struct WeightedSet {
  ItemSet items;
  Rational weight;
};

// The configuration-LP object: per day, a list of weighted item sets.
class FractionalSetSolution {
 public:
  FractionalSetSolution() = default;
  explicit FractionalSetSolution(Day horizon) : days_(horizon) {}

  Day horizon() const { return static_cast<Day>(days_.size()); }
  const std::vector<WeightedSet>& at(Day t) const { return days_.at(t - 1); }
  std::vector<WeightedSet>& at(Day t) { return days_.at(t - 1); }

  // Adds weight to (t, items), merging with an existing entry for the same
  // set. Zero weights are ignored.
  void Add(Day t, const ItemSet& items, const Rational& weight);

  Rational DayMass(Day t) const;
  // Total weight of sets on day t that contain v.
  Rational Coverage(Day t, ItemId v) const;
  // Coverage of the item of w summed over the days of w.
  Rational WindowCoverage(const DemandWindow& w) const;
  void Scale(const Rational& factor);

 private:
  std::vector<std::vector<WeightedSet>> days_;
};

Rational ScheduleCost(const CoverInstance& instance, const Schedule& schedule);

// Returns the windows not served by `schedule`, in instance order.
std::vector<DemandWindow> CheckFeasible(const CoverInstance& instance,
                                        const Schedule& schedule);

// Sum over days and sets of f(S) * y_t^S. Throws Error(kMalformedInput) on a
// negative weight.
Rational SetSolutionValue(const FractionalSetSolution& y, const CostOracle& oracle);

// Returns the windows whose LP coverage under y is below one.
std::vector<DemandWindow> UncoveredWindows(const CoverInstance& instance,
                                           const FractionalSetSolution& y);

// Daywise union of two schedules over the same horizon.
Schedule UnionSchedules(const Schedule& a, const Schedule& b);

}  // namespace covertime

#endif  // COVERTIME_INSTANCE_H_
