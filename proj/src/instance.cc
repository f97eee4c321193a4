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

#include "covertime/instance.h"

#include <string>

#include "covertime/errors.h"
#include "covertime/intervals.h"

namespace covertime {
namespace {

[[noreturn]] void Malformed(const std::string& message) {
  throw Error(ErrorCode::kMalformedInput, message);
}

}  // namespace

void CoverInstance::Validate() const {
  if (n_items < 0) Malformed("negative item count");
  if (horizon < 1) Malformed("horizon must be at least 1");
  if (oracle.n_items() != n_items) {
    Malformed("oracle is defined over " + std::to_string(oracle.n_items()) +
              " items, instance has " + std::to_string(n_items));
  }
  for (const DemandWindow& w : windows) {
    if (w.item < 0 || w.item >= n_items) Malformed("window item out of range");
    if (w.start < 1 || w.end < w.start || w.end > horizon) {
      Malformed("window [" + std::to_string(w.start) + "," + std::to_string(w.end) +
                "] does not fit the horizon");
    }
  }
  if (!nice) return;
  if (!IsTower(horizon)) Malformed("nice instance needs a horizon 2^(2^k)");
  std::vector<int> count(n_items, 0);
  std::vector<Interval> family;
  for (const DemandWindow& w : windows) {
    ++count[w.item];
    family.push_back({w.start, w.end});
  }
  for (int c : count) {
    if (c != 1) Malformed("nice instance needs exactly one window per item");
  }
  if (!FamilyIsLeftAligned(family)) Malformed("nice instance must be left aligned");
}

const Rational& InventoryInstance::Holding(ItemId v, Day s, Day t) const {
  static const Rational kZero(0);
  auto it = holding.find({v, s, t});
  return it == holding.end() ? kZero : it->second;
}

void InventoryInstance::Validate() const {
  if (n_items < 0) Malformed("negative item count");
  if (horizon < 1) Malformed("horizon must be at least 1");
  if (oracle.n_items() != n_items) Malformed("oracle item count mismatch");
  for (const Demand& d : demands) {
    if (d.item < 0 || d.item >= n_items) Malformed("demand item out of range");
    if (d.day < 1 || d.day > horizon) Malformed("demand day out of range");
    if (d.quantity < 0) Malformed("negative demand");
  }
  for (const auto& [key, h] : holding) {
    const auto& [v, s, t] = key;
    if (v < 0 || v >= n_items) Malformed("holding item out of range");
    if (s < 1 || s > t || t > horizon) Malformed("holding days out of range");
    if (h < 0) Malformed("negative holding cost");
  }
}

void FractionalSetSolution::Add(Day t, const ItemSet& items, const Rational& weight) {
  if (weight == 0) return;
  for (WeightedSet& ws : at(t)) {
    if (ws.items == items) {
      ws.weight += weight;
      return;
    }
  }
  at(t).push_back({items, weight});
}

Rational FractionalSetSolution::DayMass(Day t) const {
  Rational total = 0;
  for (const WeightedSet& ws : at(t)) total += ws.weight;
  return total;
}

Rational FractionalSetSolution::Coverage(Day t, ItemId v) const {
  Rational total = 0;
  for (const WeightedSet& ws : at(t)) {
    if (SetContains(ws.items, v)) total += ws.weight;
  }
  return total;
}

Rational FractionalSetSolution::WindowCoverage(const DemandWindow& w) const {
  Rational total = 0;
  for (Day t = w.start; t <= w.end && t <= horizon(); ++t) total += Coverage(t, w.item);
  return total;
}

void FractionalSetSolution::Scale(const Rational& factor) {
  for (auto& day : days_) {
    for (WeightedSet& ws : day) ws.weight *= factor;
  }
}

Rational ScheduleCost(const CoverInstance& instance, const Schedule& schedule) {
  Rational total = 0;
  for (Day t = 1; t <= schedule.horizon(); ++t) {
    total += instance.oracle.Evaluate(schedule.at(t));
  }
  return total;
}

std::vector<DemandWindow> CheckFeasible(const CoverInstance& instance,
                                        const Schedule& schedule) {
  std::vector<DemandWindow> violated;
  for (const DemandWindow& w : instance.windows) {
    bool served = false;
    for (Day t = w.start; t <= w.end && t <= schedule.horizon() && !served; ++t) {
      served = schedule.Contains(t, w.item);
    }
    if (!served) violated.push_back(w);
  }
  return violated;
}

Rational SetSolutionValue(const FractionalSetSolution& y, const CostOracle& oracle) {
  Rational total = 0;
  for (Day t = 1; t <= y.horizon(); ++t) {
    for (const WeightedSet& ws : y.at(t)) {
      if (ws.weight < 0) Malformed("negative set weight");
      total += oracle.Evaluate(ws.items) * ws.weight;
    }
  }
  return total;
}

std::vector<DemandWindow> UncoveredWindows(const CoverInstance& instance,
                                           const FractionalSetSolution& y) {
  std::vector<DemandWindow> out;
  for (const DemandWindow& w : instance.windows) {
    if (y.WindowCoverage(w) < 1) out.push_back(w);
  }
  return out;
}

Schedule UnionSchedules(const Schedule& a, const Schedule& b) {
  if (a.horizon() != b.horizon()) {
    throw Error(ErrorCode::kMalformedInput, "schedules differ in horizon");
  }
  Schedule out = a;
  for (Day t = 1; t <= b.horizon(); ++t) out.AddAll(t, b.at(t));
  return out;
}

}  // namespace covertime
