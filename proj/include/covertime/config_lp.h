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

#ifndef COVERTIME_CONFIG_LP_H_
#define COVERTIME_CONFIG_LP_H_

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "covertime/cost_oracle.h"
#include "covertime/instance.h"
#include "covertime/rational.h"

namespace covertime {

// f tabulated over every subset of a small ground set, with a subset-sum
// search for the set minimizing f(S) - p(S).
class SubsetTable {
 public:
  // Throws Error(kCapacity) when n exceeds `max_items`.
  SubsetTable(const CostOracle& oracle, int max_items);

  int n_items() const { return n_; }
  const Rational& Value(uint32_t mask) const { return exact_[mask]; }

  struct Candidate {
    uint32_t mask = 0;
    double reduced_cost = 0;
  };
  // Masks with f(S) - p(S) < -tolerance, most negative first, at most
  // `limit` of them.
  std::vector<Candidate> NegativeDouble(const std::vector<double>& p, double tolerance,
                                        int limit) const;

  // The exact minimizer of f(S) - p(S) over nonempty S.
  uint32_t MinimizeExact(const std::vector<Rational>& p, Rational* value) const;

 private:
  int n_ = 0;
  std::vector<Rational> exact_;
  std::vector<double> approx_;
};

struct ConfigLpOptions {
  // Largest item count accepted; the subset table has 2^N entries.
  int max_items = 12;
};

struct ConfigLpResult {
  FractionalSetSolution y;
  Rational value;
  // Dual value per window, in instance order.
  std::vector<Rational> window_duals;
  int columns = 0;
  int64_t pivots = 0;
};

// Solves the configuration LP
//   min sum_t sum_S f(S) y_t^S
//   s.t. sum_{t in W} sum_{S ni v} y_t^S >= 1 for every window W of item v
// exactly. Columns are generated by enumeration pricing over all subsets;
// the final pricing pass runs in exact arithmetic, so the returned solution
// is certified optimal: no column has negative reduced cost and the dual
// objective equals the primal value.
ConfigLpResult SolveConfigLp(const CoverInstance& instance,
                             const ConfigLpOptions& options = {});

struct InventoryLpResult {
  // x[(v, s, t)]: fraction of demand (v, t) served from day s. Sums to one
  // per positive demand.
  std::map<std::tuple<ItemId, Day, Day>, Rational> x;
  FractionalSetSolution y;
  double value = 0;
};

// The inventory LP with holding costs, solved in floating point and then
// rounded to a 2^-32 grid with assignments renormalized exactly. Only the
// assignment shape matters downstream, so the rounding is harmless.
InventoryLpResult SolveInventoryLp(const InventoryInstance& instance,
                                   const ConfigLpOptions& options = {});

}  // namespace covertime

#endif  // COVERTIME_CONFIG_LP_H_
