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

#include "covertime/reduce.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "covertime/errors.h"
#include "covertime/intervals.h"

namespace covertime {
namespace {

[[noreturn]] void Malformed(const std::string& message) {
  throw Error(ErrorCode::kMalformedInput, message);
}

void RequireFeasible(const CoverInstance& instance, const FractionalSetSolution& y,
                     const char* what) {
  if (y.horizon() != instance.horizon) Malformed(std::string(what) + ": horizon mismatch");
  const std::vector<DemandWindow> uncovered = UncoveredWindows(instance, y);
  if (!uncovered.empty()) {
    const DemandWindow& w = uncovered.front();
    throw Error(ErrorCode::kInfeasibleInput,
                std::string(what) + ": window [" + std::to_string(w.start) + "," +
                    std::to_string(w.end) + "] of item " + std::to_string(w.item) +
                    " has coverage below one");
  }
}

Rational IntervalCoverage(const FractionalSetSolution& y, ItemId v, const Interval& iv) {
  Rational total = 0;
  for (Day t = iv.start; t <= iv.end; ++t) total += y.Coverage(t, v);
  return total;
}

FractionalSetSolution Doubled(const FractionalSetSolution& y) {
  FractionalSetSolution out = y;
  out.Scale(2);
  return out;
}

// Restriction of y to the items of `items` (sorted), renumbered to their
// positions in `items`.
FractionalSetSolution RestrictItems(const FractionalSetSolution& y,
                                    const std::vector<ItemId>& items) {
  FractionalSetSolution out(y.horizon());
  for (Day t = 1; t <= y.horizon(); ++t) {
    for (const WeightedSet& ws : y.at(t)) {
      ItemSet image;
      for (ItemId v : ws.items) {
        auto it = std::lower_bound(items.begin(), items.end(), v);
        if (it != items.end() && *it == v) image.push_back(static_cast<ItemId>(it - items.begin()));
      }
      if (!image.empty()) out.Add(t, image, ws.weight);
    }
  }
  return out;
}

}  // namespace

InstanceMapping InstanceMapping::Identity(int n_items, Day horizon) {
  InstanceMapping mapping;
  mapping.item_map.resize(n_items);
  std::iota(mapping.item_map.begin(), mapping.item_map.end(), 0);
  mapping.day_map.resize(horizon);
  std::iota(mapping.day_map.begin(), mapping.day_map.end(), 1);
  return mapping;
}

InstanceMapping ComposeMappings(const InstanceMapping& outer, const InstanceMapping& inner) {
  InstanceMapping out;
  for (ItemId v : inner.item_map) {
    if (v < 0 || v >= static_cast<int>(outer.item_map.size())) {
      Malformed("item mapping does not compose");
    }
    out.item_map.push_back(outer.item_map[v]);
  }
  for (Day t : inner.day_map) {
    if (t < 0 || t > static_cast<Day>(outer.day_map.size())) Malformed("day mapping does not compose");
    out.day_map.push_back(t == 0 ? 0 : outer.day_map[t - 1]);
  }
  return out;
}

Schedule MapSchedule(const Schedule& schedule, const InstanceMapping& mapping,
                     Day parent_horizon) {
  if (schedule.horizon() != static_cast<Day>(mapping.day_map.size())) {
    Malformed("schedule horizon " + std::to_string(schedule.horizon()) +
              " does not match day mapping of length " + std::to_string(mapping.day_map.size()));
  }
  Schedule out(parent_horizon);
  for (Day t = 1; t <= schedule.horizon(); ++t) {
    const Day parent = mapping.ParentDay(t);
    if (parent < 0 || parent > parent_horizon) Malformed("day mapping leaves the parent horizon");
    if (parent == 0) continue;
    for (ItemId v : schedule.at(t)) {
      if (v < 0 || v >= static_cast<int>(mapping.item_map.size())) {
        Malformed("scheduled item " + std::to_string(v) + " has no parent");
      }
      out.Add(parent, mapping.item_map[v]);
    }
  }
  return out;
}

Schedule Recombine(const std::vector<std::pair<Schedule, InstanceMapping>>& parts,
                   Day parent_horizon) {
  Schedule out(parent_horizon);
  for (const auto& [schedule, mapping] : parts) {
    out = UnionSchedules(out, MapSchedule(schedule, mapping, parent_horizon));
  }
  return out;
}

SubInstance MedianWindows(const InventoryInstance& inventory,
                          const std::map<std::tuple<ItemId, Day, Day>, Rational>& x,
                          const FractionalSetSolution& y) {
  inventory.Validate();
  SubInstance out;
  out.instance.n_items = inventory.n_items;
  out.instance.horizon = inventory.horizon;
  out.instance.oracle = inventory.oracle;
  for (const Demand& d : inventory.demands) {
    if (d.quantity <= 0) continue;
    std::vector<Rational> mass(d.day + 1);
    Rational total = 0;
    for (Day s = 1; s <= d.day; ++s) {
      auto it = x.find({d.item, s, d.day});
      if (it == x.end()) continue;
      if (it->second < 0) Malformed("negative assignment");
      mass[s] = it->second;
      total += it->second;
    }
    if (total < 1) {
      throw Error(ErrorCode::kInfeasibleInput,
                  "demand of item " + std::to_string(d.item) + " on day " +
                      std::to_string(d.day) + " is assigned less than one unit");
    }
    Rational tail = 0;
    Day start = d.day;
    for (Day s = d.day; s >= 1; --s) {
      tail += mass[s];
      if (2 * tail >= 1) {
        start = s;
        break;
      }
    }
    out.instance.windows.push_back({d.item, start, d.day});
  }
  out.instance.Validate();
  out.y = Doubled(y);
  out.mapping = InstanceMapping::Identity(inventory.n_items, inventory.horizon);
  return out;
}

AlignedSplit SplitLeftRight(const CoverInstance& instance, const FractionalSetSolution& y) {
  instance.Validate();
  RequireFeasible(instance, y, "split_left_right");
  AlignedSplit out;
  for (SubInstance* part : {&out.left, &out.right}) {
    part->instance.n_items = instance.n_items;
    part->instance.horizon = instance.horizon;
    part->instance.oracle = instance.oracle;
    part->y = Doubled(y);
    part->mapping = InstanceMapping::Identity(instance.n_items, instance.horizon);
  }
  for (const DemandWindow& w : instance.windows) {
    const SplitParts parts = SplitLr({w.start, w.end});
    if (parts.left && 2 * IntervalCoverage(y, w.item, *parts.left) >= 1) {
      out.left.instance.windows.push_back({w.item, parts.left->start, parts.left->end});
    } else {
      out.right.instance.windows.push_back({w.item, parts.right->start, parts.right->end});
    }
  }
  return out;
}

SubInstance MirrorToLeft(const CoverInstance& instance, const FractionalSetSolution& y) {
  instance.Validate();
  const Day horizon = instance.horizon;
  const Day p = NextPowerOfTwo(std::max<Day>(horizon, 1));
  SubInstance out;
  out.instance.n_items = instance.n_items;
  out.instance.horizon = p;
  out.instance.oracle = instance.oracle;
  for (const DemandWindow& w : instance.windows) {
    out.instance.windows.push_back({w.item, p + 1 - w.end, p + 1 - w.start});
  }
  out.y = FractionalSetSolution(p);
  out.mapping.item_map = InstanceMapping::Identity(instance.n_items, 0).item_map;
  for (Day u = 1; u <= p; ++u) {
    const Day t = p + 1 - u;
    out.mapping.day_map.push_back(t <= horizon ? t : 0);
    if (t <= horizon && t <= y.horizon()) {
      for (const WeightedSet& ws : y.at(t)) out.y.Add(u, ws.items, ws.weight);
    }
  }
  return out;
}

std::vector<SubInstance> WellSeparatedPartition(const CoverInstance& instance,
                                                const FractionalSetSolution& y) {
  instance.Validate();
  std::vector<ItemId> current(instance.n_items);
  std::iota(current.begin(), current.end(), 0);
  std::vector<Rational> singleton(instance.n_items);
  for (ItemId v = 0; v < instance.n_items; ++v) singleton[v] = instance.oracle.Singleton(v);

  std::vector<SubInstance> groups;
  while (!current.empty()) {
    Rational mu = 0;
    for (ItemId v : current) mu = Max(mu, singleton[v]);
    const Rational threshold = mu / static_cast<long>(current.size());
    std::vector<ItemId> keep, next;
    for (ItemId v : current) (singleton[v] < threshold ? next : keep).push_back(v);

    SubInstance group;
    group.instance.n_items = static_cast<int>(keep.size());
    group.instance.horizon = instance.horizon;
    group.instance.oracle = instance.oracle.Restrict(keep);
    for (const DemandWindow& w : instance.windows) {
      auto it = std::lower_bound(keep.begin(), keep.end(), w.item);
      if (it != keep.end() && *it == w.item) {
        group.instance.windows.push_back(
            {static_cast<ItemId>(it - keep.begin()), w.start, w.end});
      }
    }
    group.y = y.horizon() == instance.horizon ? RestrictItems(y, keep)
                                              : FractionalSetSolution(instance.horizon);
    group.mapping.item_map = keep;
    group.mapping.day_map = InstanceMapping::Identity(0, instance.horizon).day_map;
    groups.push_back(std::move(group));
    current = std::move(next);
  }
  return groups;
}

std::vector<SubInstance> WellSeparatedPartition(const CoverInstance& instance) {
  return WellSeparatedPartition(instance, FractionalSetSolution(instance.horizon));
}

FractionalSetSolution Sparsify(const FractionalSetSolution& y, const CoverInstance& instance) {
  RequireFeasible(instance, y, "sparsify");
  const Day horizon = y.horizon();
  std::vector<Rational> mass(horizon + 1);
  for (Day t = 1; t <= horizon; ++t) mass[t] = y.DayMass(t);
  auto bad = [&](Day t) { return mass[t] > 0 && mass[t] < 1; };

  FractionalSetSolution out = y;
  Day t = 1;
  while (t <= horizon) {
    if (!bad(t)) {
      ++t;
      continue;
    }
    const Day first = t;
    Rational run = mass[first];
    Day last = first + 1;
    while (last <= horizon && run + mass[last] < 1) run += mass[last++];
    if (last <= horizon) {
      // Days first..last carry at least one unit together; every window
      // meeting the run contains one of its ends.
      FractionalSetSolution combined(1);
      for (Day r = first; r <= last; ++r) {
        for (const WeightedSet& ws : y.at(r)) combined.Add(1, ws.items, ws.weight);
      }
      for (Day r = first; r <= last; ++r) out.at(r).clear();
      out.at(first) = combined.at(1);
      out.at(last) = combined.at(1);
      t = last + 1;
    } else {
      // The tail from `first` on carries less than a unit, so every window
      // meeting it also contains first - 1.
      for (Day r = first; r <= horizon; ++r) {
        if (first > 1) {
          for (const WeightedSet& ws : y.at(r)) out.Add(first - 1, ws.items, ws.weight);
        }
        out.at(r).clear();
      }
      break;
    }
  }
  if (!UncoveredWindows(instance, out).empty()) {
    throw Error(ErrorCode::kInternal, "sparsify lost feasibility");
  }
  return out;
}

HorizonBound BoundTimeHorizon(const CoverInstance& instance, const FractionalSetSolution& y) {
  instance.Validate();
  RequireFeasible(instance, y, "bound_time_horizon");
  HorizonBound out;
  out.resets = Schedule(instance.horizon);
  const Day chunk = static_cast<Day>(instance.n_items) * instance.n_items;
  for (const SubInstance& group : WellSeparatedPartition(instance, y)) {
    if (group.instance.windows.empty()) continue;
    const FractionalSetSolution sparse = Sparsify(group.y, group.instance);
    std::vector<Day> days;  // surviving days, in the input's numbering
    for (Day t = 1; t <= instance.horizon; ++t) {
      if (sparse.DayMass(t) > 0) days.push_back(t);
    }
    const Day compressed_horizon = static_cast<Day>(days.size());
    ItemSet everyone(group.instance.n_items);
    std::iota(everyone.begin(), everyone.end(), 0);
    for (Day c = chunk; c < compressed_horizon; c += chunk) {
      for (ItemId v : everyone) out.resets.Add(days[c - 1], group.mapping.item_map[v]);
    }

    // Compressed windows, bucketed by chunk.
    const int n_chunks = static_cast<int>((compressed_horizon + chunk - 1) / chunk);
    std::vector<std::vector<DemandWindow>> windows(n_chunks);
    for (const DemandWindow& w : group.instance.windows) {
      const Day s = static_cast<Day>(std::lower_bound(days.begin(), days.end(), w.start) -
                                     days.begin()) + 1;
      const Day e = static_cast<Day>(std::upper_bound(days.begin(), days.end(), w.end) -
                                     days.begin());
      if (s > e) throw Error(ErrorCode::kInternal, "window lost all of its days");
      const int j = static_cast<int>((s - 1) / chunk);
      const Day reset = static_cast<Day>(j + 1) * chunk;
      if (e >= reset && reset < compressed_horizon) continue;
      windows[j].push_back({w.item, s - j * chunk, e - j * chunk});
    }
    for (int j = 0; j < n_chunks; ++j) {
      if (windows[j].empty()) continue;
      const Day first = static_cast<Day>(j) * chunk + 1;
      const Day last = std::min<Day>(first + chunk - 1, compressed_horizon);
      SubInstance piece;
      piece.instance.n_items = group.instance.n_items;
      piece.instance.horizon = last - first + 1;
      piece.instance.oracle = group.instance.oracle;
      piece.instance.windows = std::move(windows[j]);
      piece.y = FractionalSetSolution(piece.instance.horizon);
      piece.mapping.item_map = group.mapping.item_map;
      for (Day c = first; c <= last; ++c) {
        piece.y.at(c - first + 1) = sparse.at(days[c - 1]);
        piece.mapping.day_map.push_back(days[c - 1]);
      }
      out.chunks.push_back(std::move(piece));
    }
  }
  return out;
}

SubInstance Nicify(const CoverInstance& instance) {
  instance.Validate();
  std::vector<Interval> family;
  for (const DemandWindow& w : instance.windows) family.push_back({w.start, w.end});
  if (!FamilyIsLeftAligned(family)) Malformed("nicify needs a left-aligned window family");
  SubInstance out;
  out.instance.n_items = static_cast<int>(instance.windows.size());
  out.instance.horizon = NextTower(std::max<Day>(instance.horizon, 1));
  out.instance.nice = true;
  for (size_t k = 0; k < instance.windows.size(); ++k) {
    const DemandWindow& w = instance.windows[k];
    out.mapping.item_map.push_back(w.item);
    out.instance.windows.push_back({static_cast<ItemId>(k), w.start, w.end});
  }
  out.instance.oracle = instance.oracle.Restrict(out.mapping.item_map);
  for (Day t = 1; t <= out.instance.horizon; ++t) {
    out.mapping.day_map.push_back(t <= instance.horizon ? t : 0);
  }
  out.y = FractionalSetSolution(out.instance.horizon);
  out.instance.Validate();
  return out;
}

}  // namespace covertime
