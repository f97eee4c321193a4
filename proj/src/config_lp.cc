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

#include "covertime/config_lp.h"

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <utility>

#include "covertime/errors.h"
#include "covertime/simplex.h"

namespace covertime {
namespace {

constexpr double kPricingTolerance = 1e-9;
constexpr int kColumnsPerPattern = 3;

// Days with the same set of covering windows have identical columns, so
// pricing runs once per distinct pattern.
struct DayPattern {
  Day representative = 0;
  std::vector<int> windows;
};

// Fills `pattern_of_day[t]` with the pattern index of day t, or -1 for days
// outside every window.
std::vector<DayPattern> GroupDays(const CoverInstance& instance,
                                  std::vector<int>* pattern_of_day) {
  std::map<std::vector<int>, int> seen;
  std::vector<DayPattern> patterns;
  pattern_of_day->assign(instance.horizon + 1, -1);
  for (Day t = 1; t <= instance.horizon; ++t) {
    std::vector<int> covering;
    for (int w = 0; w < static_cast<int>(instance.windows.size()); ++w) {
      if (instance.windows[w].Contains(t)) covering.push_back(w);
    }
    if (covering.empty()) continue;
    auto [it, inserted] = seen.emplace(covering, static_cast<int>(patterns.size()));
    if (inserted) patterns.push_back({t, std::move(covering)});
    (*pattern_of_day)[t] = it->second;
  }
  return patterns;
}

}  // namespace

SubsetTable::SubsetTable(const CostOracle& oracle, int max_items) : n_(oracle.n_items()) {
  if (n_ > max_items || n_ > 24) {
    throw Error(ErrorCode::kCapacity,
                "subset enumeration over " + std::to_string(n_) +
                    " items exceeds the cap of " + std::to_string(max_items) +
                    "; use the Lovasz solver instead");
  }
  const uint32_t count = uint32_t{1} << n_;
  exact_.resize(count);
  approx_.resize(count);
  for (uint32_t mask = 0; mask < count; ++mask) {
    exact_[mask] = oracle.Evaluate(MaskToSet(mask));
    approx_[mask] = exact_[mask].get_d();
  }
}

std::vector<SubsetTable::Candidate> SubsetTable::NegativeDouble(
    const std::vector<double>& p, double tolerance, int limit) const {
  const uint32_t count = uint32_t{1} << n_;
  std::vector<double> prefix(count, 0.0);
  std::vector<Candidate> found;
  for (uint32_t mask = 1; mask < count; ++mask) {
    prefix[mask] = prefix[mask & (mask - 1)] + p[std::countr_zero(mask)];
    const double rc = approx_[mask] - prefix[mask];
    if (rc < -tolerance) found.push_back({mask, rc});
  }
  const size_t keep = std::min<size_t>(found.size(), limit);
  std::partial_sort(found.begin(), found.begin() + keep, found.end(),
                    [](const Candidate& a, const Candidate& b) {
                      return a.reduced_cost < b.reduced_cost;
                    });
  found.resize(keep);
  return found;
}

uint32_t SubsetTable::MinimizeExact(const std::vector<Rational>& p, Rational* value) const {
  const uint32_t count = uint32_t{1} << n_;
  std::vector<Rational> prefix(count);
  uint32_t best = 0;
  Rational best_value;
  for (uint32_t mask = 1; mask < count; ++mask) {
    prefix[mask] = prefix[mask & (mask - 1)] + p[std::countr_zero(mask)];
    Rational rc = exact_[mask] - prefix[mask];
    if (best == 0 || rc < best_value) {
      best = mask;
      best_value = std::move(rc);
    }
  }
  *value = best_value;
  return best;
}

ConfigLpResult SolveConfigLp(const CoverInstance& instance, const ConfigLpOptions& options) {
  instance.Validate();
  ConfigLpResult result;
  result.y = FractionalSetSolution(instance.horizon);
  const int m = static_cast<int>(instance.windows.size());
  if (m == 0) return result;

  const SubsetTable table(instance.oracle, options.max_items);
  std::vector<int> pattern_of_day;
  const std::vector<DayPattern> patterns = GroupDays(instance, &pattern_of_day);

  DenseSimplex<Rational> lp(std::vector<Rational>(m, Rational(1)));
  for (int w = 0; w < m; ++w) lp.AddColumn({{w, Rational(-1)}}, Rational(0));

  struct Generated {
    int pattern;
    uint32_t mask;
    int column;
  };
  std::vector<Generated> generated;
  std::set<std::pair<int, uint32_t>> present;
  auto add_column = [&](int k, uint32_t mask) {
    if (!present.insert({k, mask}).second) return false;
    DenseSimplex<Rational>::SparseColumn column;
    for (int w : patterns[k].windows) {
      if (mask & (uint32_t{1} << instance.windows[w].item)) {
        column.push_back({w, Rational(1)});
      }
    }
    const int index = lp.AddColumn(std::move(column), table.Value(mask));
    generated.push_back({k, mask, index});
    return true;
  };

  // Singleton orders at each window's first day make the LP feasible.
  for (const DemandWindow& w : instance.windows) {
    add_column(pattern_of_day[w.start], uint32_t{1} << w.item);
  }

  while (true) {
    if (lp.Solve() != SimplexStatus::kOptimal) {
      throw Error(ErrorCode::kInternal, "configuration LP not solved to optimality");
    }
    const std::vector<Rational> duals = lp.Duals();
    std::vector<double> duals_d(m);
    for (int w = 0; w < m; ++w) duals_d[w] = duals[w].get_d();

    int added = 0;
    for (int k = 0; k < static_cast<int>(patterns.size()); ++k) {
      std::vector<double> p(table.n_items(), 0.0);
      for (int w : patterns[k].windows) p[instance.windows[w].item] += duals_d[w];
      for (const auto& cand : table.NegativeDouble(p, kPricingTolerance, kColumnsPerPattern)) {
        if (add_column(k, cand.mask)) ++added;
      }
    }
    if (added > 0) continue;

    // Exact certificate pass.
    for (int k = 0; k < static_cast<int>(patterns.size()); ++k) {
      std::vector<Rational> p(table.n_items());
      for (int w : patterns[k].windows) p[instance.windows[w].item] += duals[w];
      Rational rc;
      const uint32_t mask = table.MinimizeExact(p, &rc);
      if (rc < 0) {
        if (!add_column(k, mask)) {
          throw Error(ErrorCode::kInternal, "existing column priced out negative");
        }
        ++added;
      }
    }
    if (added == 0) {
      Rational dual_objective = 0;
      for (int w = 0; w < m; ++w) {
        if (duals[w] < 0) throw Error(ErrorCode::kInternal, "negative window dual");
        dual_objective += duals[w];
      }
      result.value = lp.Objective();
      if (dual_objective != result.value) {
        throw Error(ErrorCode::kInternal, "configuration LP duality gap");
      }
      result.window_duals = duals;
      break;
    }
  }

  for (const Generated& g : generated) {
    Rational v = lp.Value(g.column);
    if (v > 0) result.y.Add(patterns[g.pattern].representative, MaskToSet(g.mask), v);
  }
  result.columns = lp.num_columns();
  result.pivots = lp.pivots();
  return result;
}

InventoryLpResult SolveInventoryLp(const InventoryInstance& instance,
                                   const ConfigLpOptions& options) {
  instance.Validate();
  InventoryLpResult result;
  result.y = FractionalSetSolution(instance.horizon);

  // Aggregate demands per (item, day).
  std::map<std::pair<ItemId, Day>, Rational> demand;
  for (const Demand& d : instance.demands) {
    if (d.quantity > 0) demand[{d.item, d.day}] += d.quantity;
  }
  if (demand.empty()) return result;
  const SubsetTable table(instance.oracle, options.max_items);

  std::vector<std::pair<ItemId, Day>> demand_rows;
  std::map<std::pair<ItemId, Day>, int> demand_index;
  for (const auto& [key, q] : demand) {
    demand_index[key] = static_cast<int>(demand_rows.size());
    demand_rows.push_back(key);
  }
  const int num_demand = static_cast<int>(demand_rows.size());
  std::map<std::tuple<ItemId, Day, Day>, int> link_index;
  std::vector<std::tuple<ItemId, Day, Day>> link_rows;
  for (const auto& [v, t] : demand_rows) {
    for (Day s = 1; s <= t; ++s) {
      link_index[{v, s, t}] = num_demand + static_cast<int>(link_rows.size());
      link_rows.push_back({v, s, t});
    }
  }
  const int rows = num_demand + static_cast<int>(link_rows.size());
  std::vector<double> rhs(rows, 0.0);
  for (int i = 0; i < num_demand; ++i) rhs[i] = 1.0;
  DenseSimplex<double> lp(rhs);
  for (int i = 0; i < rows; ++i) lp.AddColumn({{i, -1.0}}, 0.0);

  std::map<std::tuple<ItemId, Day, Day>, int> x_column;
  for (const auto& key : link_rows) {
    const auto& [v, s, t] = key;
    const double cost = Rational(demand[{v, t}] * instance.Holding(v, s, t)).get_d();
    x_column[key] = lp.AddColumn({{demand_index[{v, t}], 1.0}, {link_index[key], -1.0}}, cost);
  }

  std::set<std::pair<Day, uint32_t>> present;
  std::vector<std::pair<std::pair<Day, uint32_t>, int>> y_columns;
  auto add_y = [&](Day s, uint32_t mask) {
    if (!present.insert({s, mask}).second) return false;
    DenseSimplex<double>::SparseColumn column;
    for (const auto& [key, row] : link_index) {
      const auto& [v, s2, t] = key;
      if (s2 == s && (mask & (uint32_t{1} << v))) column.push_back({row, 1.0});
    }
    y_columns.push_back({{s, mask}, lp.AddColumn(std::move(column), table.Value(mask).get_d())});
    return true;
  };
  for (const auto& [v, t] : demand_rows) add_y(t, uint32_t{1} << v);

  while (true) {
    if (lp.Solve() != SimplexStatus::kOptimal) {
      throw Error(ErrorCode::kInternal, "inventory LP not solved to optimality");
    }
    const std::vector<double> duals = lp.Duals();
    int added = 0;
    for (Day s = 1; s <= instance.horizon; ++s) {
      std::vector<double> p(table.n_items(), 0.0);
      for (const auto& [key, row] : link_index) {
        if (std::get<1>(key) == s) p[std::get<0>(key)] += duals[row];
      }
      for (const auto& cand : table.NegativeDouble(p, 1e-7, kColumnsPerPattern)) {
        if (add_y(s, cand.mask)) ++added;
      }
    }
    if (added == 0) break;
  }
  result.value = lp.Objective();

  constexpr long kGrid = 1L << 32;
  for (const auto& [key, column] : y_columns) {
    const Rational v = RoundToGrid(std::max(0.0, lp.Value(column)), kGrid);
    if (v > 0) result.y.Add(key.first, MaskToSet(key.second), v);
  }
  for (const auto& [v, t] : demand_rows) {
    Rational total = 0;
    std::vector<std::pair<Day, Rational>> parts;
    for (Day s = 1; s <= t; ++s) {
      Rational q = RoundToGrid(std::max(0.0, lp.Value(x_column[{v, s, t}])), kGrid);
      total += q;
      parts.push_back({s, q});
    }
    if (total == 0) throw Error(ErrorCode::kInternal, "inventory LP left a demand unserved");
    for (auto& [s, q] : parts) {
      if (q > 0) result.x[{v, s, t}] = q / total;
    }
  }
  return result;
}

}  // namespace covertime
