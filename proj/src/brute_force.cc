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

#include "covertime/brute_force.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "covertime/errors.h"

namespace covertime {
BruteForceResult BruteForceOptimum(const CoverInstance& instance,
                                   const BruteForceOptions& options) {
  instance.Validate();
  std::vector<DemandWindow> windows = instance.windows;
  double product = 1;
  for (const DemandWindow& w : windows) {
    product *= static_cast<double>(w.end - w.start + 1);
    if (product > static_cast<double>(options.max_assignments)) {
      throw Error(ErrorCode::kCapacity, "too many assignments for exhaustive search");
    }
  }
  // Short windows first keeps the branching factor low near the root.
  std::stable_sort(windows.begin(), windows.end(), [](const auto& a, const auto& b) {
    return a.end - a.start < b.end - b.start;
  });

  // For a cost that is not monotone (the terminal MST) a day may profit from
  // buying items nobody asks for. Searching over the closure
  // g(S) = min over supersets T of f(T) and then buying the minimizing
  // superset keeps the search exact.
  const int n = instance.n_items;
  const bool use_closure = !instance.oracle.is_submodular();
  std::vector<Rational> closure;
  std::vector<uint32_t> closure_arg;
  if (use_closure) {
    if (n > kMaxClosureItems) {
      throw Error(ErrorCode::kCapacity, "too many items for the superset closure");
    }
    const uint32_t full = (uint32_t{1} << n) - 1;
    closure.resize(size_t{full} + 1);
    closure_arg.resize(size_t{full} + 1);
    for (uint32_t mask = 0; mask <= full; ++mask) {
      closure[mask] = instance.oracle.Evaluate(MaskToSet(mask));
      closure_arg[mask] = mask;
    }
    for (uint32_t mask = full + 1; mask-- > 0;) {
      for (int v = 0; v < n; ++v) {
        const uint32_t up = mask | (uint32_t{1} << v);
        if (up != mask && closure[up] < closure[mask]) {
          closure[mask] = closure[up];
          closure_arg[mask] = closure_arg[up];
        }
      }
    }
  }
  auto day_value = [&](const ItemSet& s) {
    return use_closure ? closure[SetToMask(s)] : instance.oracle.Evaluate(s);
  };

  BruteForceResult result;
  Schedule current(instance.horizon);
  std::vector<Rational> day_cost(instance.horizon + 1);
  Rational current_cost = 0;
  std::optional<Rational> best;

  std::function<void(size_t)> search = [&](size_t k) {
    ++result.nodes;
    if (best && current_cost >= *best) return;
    if (k == windows.size()) {
      best = current_cost;
      result.schedule = current;
      return;
    }
    const DemandWindow& w = windows[k];
    for (Day t = w.start; t <= w.end; ++t) {
      if (current.Contains(t, w.item)) {
        search(k + 1);
        return;
      }
    }
    for (Day t = w.start; t <= w.end; ++t) {
      const ItemSet saved = current.at(t);
      const Rational saved_cost = day_cost[t];
      current.Add(t, w.item);
      day_cost[t] = day_value(current.at(t));
      current_cost += day_cost[t] - saved_cost;
      search(k + 1);
      current_cost -= day_cost[t] - saved_cost;
      day_cost[t] = saved_cost;
      current.at(t) = saved;
    }
  };
  search(0);
  result.cost = best.value_or(Rational(0));
  if (!best) result.schedule = Schedule(instance.horizon);
  if (use_closure) {
    for (Day t = 1; t <= instance.horizon; ++t) {
      result.schedule.at(t) = MaskToSet(closure_arg[SetToMask(result.schedule.at(t))]);
    }
  }
  return result;
}

RatioReport MakeRatioReport(const Rational& alg_cost, const Rational& opt_cost,
                            const Rational& lp_value) {
  if (opt_cost <= 0) {
    throw Error(ErrorCode::kMalformedInput, "ratio report needs a positive optimum");
  }
  RatioReport report;
  report.alg_over_opt = ToDouble(alg_cost / opt_cost);
  report.alg_over_lp = lp_value > 0 ? ToDouble(alg_cost / lp_value) : 0.0;
  report.lp_at_most_opt = lp_value <= opt_cost;
  report.opt_at_most_alg = opt_cost <= alg_cost;
  return report;
}

}  // namespace covertime
