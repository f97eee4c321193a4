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

#include "covertime/round_sjrp.h"

#include <string>

#include "covertime/errors.h"
#include "covertime/intervals.h"

namespace covertime {
namespace {

Rational Potential(const FractionalVectorSolution& x, const CostOracle& oracle) {
  Rational total = 0;
  for (Day t = 1; t <= x.horizon(); ++t) total += LovaszValue(oracle, x.at(t));
  return total;
}

// 2^(-e) for integral e, or a dyadic upper bound on it otherwise.
Rational TwoToMinus(const Rational& e) {
  mpz_class floor_e = e.get_num() / e.get_den();
  Rational out = 1;
  for (mpz_class j = 0; j < floor_e; ++j) out /= 2;
  return out;
}

}  // namespace

void MergeStep(FractionalVectorSolution& x, int i) {
  const Day horizon = x.horizon();
  if (i < 1 || i > 62 || horizon % (Day{1} << i) != 0) {
    throw Error(ErrorCode::kMalformedInput,
                "merge step " + std::to_string(i) + " needs 2^i to divide the horizon");
  }
  const Day block = Day{1} << i;
  const Day half = block / 2;
  for (Day t = 0; t < horizon; t += block) {
    Vector& to = x.at(t + 1);
    Vector& from = x.at(t + half + 1);
    for (size_t v = 0; v < to.size(); ++v) {
      to[v] += from[v];
      if (to[v] > 1) to[v] = 1;
      from[v] = 0;
    }
  }
}

SjrpResult RoundSjrp(const CoverInstance& instance, const FractionalVectorSolution& x_in,
                     const SjrpOptions& options) {
  instance.Validate();
  const CostOracle& oracle = instance.oracle;
  if (!oracle.is_submodular()) {
    throw Error(ErrorCode::kUnsupportedOracle, "rounding the Lovasz program needs a submodular oracle");
  }
  std::vector<Interval> family;
  for (const DemandWindow& w : instance.windows) family.push_back({w.start, w.end});
  if (!IsTower(instance.horizon) || !FamilyIsLeftAligned(family)) {
    throw Error(ErrorCode::kMalformedInput, "rounding the Lovasz program needs a nice instance");
  }
  if (x_in.horizon() != instance.horizon || x_in.n_items() != instance.n_items) {
    throw Error(ErrorCode::kMalformedInput, "vector solution does not match the instance");
  }

  // Keep only mass inside windows; that can only lower f^.
  std::vector<std::vector<bool>> inside(instance.horizon + 1,
                                        std::vector<bool>(instance.n_items, false));
  for (const DemandWindow& w : instance.windows) {
    for (Day t = w.start; t <= w.end; ++t) inside[t][w.item] = true;
  }
  FractionalVectorSolution x(instance.horizon, instance.n_items);
  for (Day t = 1; t <= instance.horizon; ++t) {
    for (ItemId v = 0; v < instance.n_items; ++v) {
      const Rational& value = x_in.at(t)[v];
      if (value < 0 || value > 1) {
        throw Error(ErrorCode::kMalformedInput, "vector solution entries must lie in [0,1]");
      }
      if (inside[t][v]) x.at(t)[v] = value;
    }
  }
  for (const DemandWindow& w : instance.windows) {
    Rational sum = 0;
    for (Day t = w.start; t <= w.end; ++t) sum += x.at(t)[w.item];
    if (sum < 1) {
      throw Error(ErrorCode::kInfeasibleInput,
                  "window of item " + std::to_string(w.item) + " has coverage below one");
    }
  }

  SjrpResult result;
  const int log_t = Log2Exact(instance.horizon);
  result.alpha = options.alpha.value_or(Rational(1, LogLogHorizon(instance.horizon)));
  result.alpha.canonicalize();
  if (result.alpha <= 0 || result.alpha > 1) {
    throw Error(ErrorCode::kUsage, "alpha must lie in (0, 1]");
  }
  const Rational beta = result.alpha / 32;
  result.initial_potential = Potential(x, oracle);
  result.cost_bound = (32 / result.alpha + (log_t + 1) * TwoToMinus(1 / result.alpha)) *
                      result.initial_potential;
  result.schedule = Schedule(instance.horizon);

  // Zeroes x^t_v unless t lies in a window of v that is still unserved.
  // Served windows need no more mass, and removing it only lowers f^, so
  // neither the charging argument nor feasibility is affected.
  auto prune = [&] {
    std::vector<std::vector<bool>> needed(instance.horizon + 1,
                                          std::vector<bool>(instance.n_items, false));
    for (const DemandWindow& w : instance.windows) {
      bool served = false;
      for (Day t = w.start; t <= w.end && !served; ++t) {
        served = result.schedule.Contains(t, w.item);
      }
      if (served) continue;
      for (Day t = w.start; t <= w.end; ++t) needed[t][w.item] = true;
    }
    for (Day t = 1; t <= instance.horizon; ++t) {
      for (ItemId v = 0; v < instance.n_items; ++v) {
        if (!needed[t][v]) x.at(t)[v] = 0;
      }
    }
  };

  // One selection per day; the last pass has no merge after it.
  for (int pass = 1; pass <= log_t + 1; ++pass) {
    for (Day t = 1; t <= instance.horizon; ++t) {
      Vector& xt = x.at(t);
      const LevelProfile profile = ComputeLevelProfile(oracle, xt);
      if (profile.values.empty()) continue;
      SjrpExtraction step{pass, t, FindSupportedTheta(profile, beta), 0, 0};
      ItemSet chosen;
      if (step.theta) {
        chosen = LevelSet(xt, *step.theta);
        const Vector truncated = Truncate(xt, *step.theta);
        step.lovasz_drop = LovaszValue(profile) - LovaszValue(oracle, truncated);
        xt = truncated;
      } else {
        chosen = LevelSet(xt, 1);
      }
      step.set_cost = oracle.Evaluate(chosen);
      result.schedule.AddAll(t, chosen);
      result.trace.push_back(std::move(step));
    }
    prune();
    if (pass <= log_t) {
      const Rational before = options.check_invariants ? Potential(x, oracle) : Rational(0);
      MergeStep(x, pass);
      prune();
      const Rational after = Potential(x, oracle);
      if (options.check_invariants && after > before) {
        throw Error(ErrorCode::kInternal, "merging increased the Lovasz potential");
      }
      result.potential_after_pass.push_back(after);
    }
  }

  result.cost = ScheduleCost(instance, result.schedule);
  if (options.check_invariants) {
    if (result.cost > result.cost_bound) {
      throw Error(ErrorCode::kInternal, "rounded cost exceeds the proven bound");
    }
    if (!CheckFeasible(instance, result.schedule).empty()) {
      throw Error(ErrorCode::kInternal, "rounded schedule misses a window");
    }
  }
  return result;
}

}  // namespace covertime
