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

#include "covertime/lovasz_solver.h"

#include <algorithm>
#include <vector>

#include "covertime/errors.h"
#include "covertime/simplex.h"

namespace covertime {

// The master problem
//   min sum_t z_t  s.t.  z_t >= g.x^t for every cut g of day t,
//                        sum_{t in W} x_v^t >= 1 for every window W,
// is solved as its dual
//   max sum_W mu_W  s.t.  sum_{W ni (v,t)} mu_W - sum_c lambda_c g^c_v <= 0,
//                         sum_{c of day t} lambda_c <= 1,
// whose slack basis is feasible. Primal x and z are the negated duals.
LovaszSolverResult SolveLovasz(const CoverInstance& instance,
                               const LovaszSolverOptions& options) {
  instance.Validate();
  if (!instance.oracle.is_submodular()) {
    throw Error(ErrorCode::kUnsupportedOracle,
                "the Lovasz program needs a submodular oracle");
  }
  const int n = instance.n_items;
  const Day horizon = instance.horizon;
  LovaszSolverResult result;
  result.x = FractionalVectorSolution(horizon, n);
  if (instance.windows.empty()) return result;

  std::vector<std::vector<int>> row_of(horizon + 1, std::vector<int>(n, -1));
  int rows = 0;
  for (const DemandWindow& w : instance.windows) {
    for (Day t = w.start; t <= w.end; ++t) {
      if (row_of[t][w.item] < 0) row_of[t][w.item] = rows++;
    }
  }
  std::vector<int> day_row(horizon + 1, -1);
  std::vector<Day> active_days;
  for (Day t = 1; t <= horizon; ++t) {
    bool any = false;
    for (ItemId v = 0; v < n; ++v) any = any || row_of[t][v] >= 0;
    if (any) {
      day_row[t] = rows++;
      active_days.push_back(t);
    }
  }

  std::vector<double> rhs(rows, 0.0);
  for (Day t : active_days) rhs[day_row[t]] = 1.0;
  DenseSimplex<double> lp(rhs);
  for (int i = 0; i < rows; ++i) {
    lp.MarkInitialBasic(lp.AddColumn({{i, 1.0}}, 0.0), i);
  }
  for (const DemandWindow& w : instance.windows) {
    DenseSimplex<double>::SparseColumn column;
    for (Day t = w.start; t <= w.end; ++t) column.push_back({row_of[t][w.item], 1.0});
    lp.AddColumn(std::move(column), -1.0);
  }

  auto add_cut = [&](Day t, const std::vector<double>& g) {
    DenseSimplex<double>::SparseColumn column;
    for (ItemId v = 0; v < n; ++v) {
      if (row_of[t][v] >= 0 && g[v] != 0.0) column.push_back({row_of[t][v], -g[v]});
    }
    column.push_back({day_row[t], 1.0});
    lp.AddColumn(std::move(column), 0.0);
    ++result.cuts;
  };

  for (Day t : active_days) {
    std::vector<double> indicator(n, 0.0);
    for (ItemId v = 0; v < n; ++v) indicator[v] = row_of[t][v] >= 0 ? 1.0 : 0.0;
    add_cut(t, GreedyVertex(instance.oracle, indicator));
  }

  std::vector<std::vector<double>> x(horizon + 1, std::vector<double>(n, 0.0));
  for (result.rounds = 1; result.rounds <= options.max_rounds; ++result.rounds) {
    if (lp.Solve() != SimplexStatus::kOptimal) {
      throw Error(ErrorCode::kInternal, "cutting-plane master problem not optimal");
    }
    const std::vector<double> duals = lp.Duals();
    const double lower = -lp.Objective();
    double upper = 0;
    int added = 0;
    for (Day t : active_days) {
      for (ItemId v = 0; v < n; ++v) {
        x[t][v] = row_of[t][v] >= 0 ? std::max(0.0, -duals[row_of[t][v]]) : 0.0;
      }
      const double z = std::max(0.0, -duals[day_row[t]]);
      const std::vector<double> g = GreedyVertex(instance.oracle, x[t]);
      double value = 0;
      for (ItemId v = 0; v < n; ++v) value += g[v] * x[t][v];
      upper += value;
      if (value > z + 1e-12 * std::max(1.0, value)) {
        add_cut(t, g);
        ++added;
      }
    }
    result.lower_bound = lower;
    if (upper - lower <= options.relative_gap * std::max(1.0, upper) || added == 0) break;
  }
  if (result.rounds > options.max_rounds) {
    throw Error(ErrorCode::kNontermination, "cutting-plane method did not converge");
  }

  // Round to a dyadic grid, repair windows that fell short of one by
  // rounding, then renormalize exactly.
  constexpr long kGrid = 1L << 32;
  FractionalVectorSolution rounded(horizon, n);
  for (Day t : active_days) {
    for (ItemId v = 0; v < n; ++v) rounded.at(t)[v] = RoundToGrid(x[t][v], kGrid);
  }
  for (const DemandWindow& w : instance.windows) {
    Rational sum = 0;
    Day largest = w.start;
    for (Day t = w.start; t <= w.end; ++t) {
      sum += rounded.at(t)[w.item];
      if (rounded.at(t)[w.item] > rounded.at(largest)[w.item]) largest = t;
    }
    if (sum < 1) rounded.at(largest)[w.item] += 1 - sum;
  }
  result.x = NormalizeToWindows(instance, rounded);
  result.objective = VectorSolutionValue(result.x, instance.oracle);
  return result;
}

}  // namespace covertime
