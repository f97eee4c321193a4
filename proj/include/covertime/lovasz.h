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

// Lovasz extension machinery: level sets, truncation, supported thresholds
// and the conversions between per-day vectors and per-day set systems.

#ifndef COVERTIME_LOVASZ_H_
#define COVERTIME_LOVASZ_H_

#include <optional>
#include <vector>

#include "covertime/cost_oracle.h"
#include "covertime/instance.h"
#include "covertime/rational.h"

namespace covertime {

using Vector = std::vector<Rational>;

// x^t in [0,1]^V for every day t.
class FractionalVectorSolution {
 public:
  FractionalVectorSolution() = default;
  FractionalVectorSolution(Day horizon, int n_items)
      : n_items_(n_items), x_(horizon, Vector(n_items)) {}

  Day horizon() const { return static_cast<Day>(x_.size()); }
  int n_items() const { return n_items_; }
  const Vector& at(Day t) const { return x_.at(t - 1); }
  Vector& at(Day t) { return x_.at(t - 1); }

 private:
  int n_items_ = 0;
  std::vector<Vector> x_;
};

// The chain of nonempty level sets of x: values b_1 > ... > b_n > 0 with
// sets S_j = {v : x_v >= b_j} and costs F_j = f(S_j).
struct LevelProfile {
  std::vector<Rational> values;
  std::vector<ItemSet> sets;
  std::vector<Rational> costs;
};

LevelProfile ComputeLevelProfile(const CostOracle& oracle, const Vector& x);

// Integral of f(L_theta(x)) over theta in [0,1], via the breakpoints.
Rational LovaszValue(const CostOracle& oracle, const Vector& x);
Rational LovaszValue(const LevelProfile& profile);

// {v : x_v >= theta}.
ItemSet LevelSet(const Vector& x, const Rational& theta);

// Entrywise min(x_v, theta).
Vector Truncate(const Vector& x, const Rational& theta);

// Returns a theta in (0, max x] with
//   f^(x) - f^(x truncated at theta) >= alpha * f(L_theta(x)),
// or nullopt when none exists. Thresholds in (max x, 1] are excluded since
// their level set is empty. Between consecutive breakpoints the level set is
// fixed and the left side is affine in theta, so the whole continuum is
// searched exactly. The returned theta lies in the lowest breakpoint
// interval that contains a solution and is the largest solution there.
std::optional<Rational> FindSupportedTheta(const CostOracle& oracle, const Vector& x,
                                           const Rational& alpha);
std::optional<Rational> FindSupportedTheta(const LevelProfile& profile,
                                           const Rational& alpha);

// Threshold decomposition of each day's vector into a chain of sets.
FractionalSetSolution XToY(const FractionalVectorSolution& x);

// x_v^t = total weight of day-t sets containing v.
FractionalVectorSolution YToX(const FractionalSetSolution& y, int n_items);

// Sum over days of the Lovasz extension.
Rational VectorSolutionValue(const FractionalVectorSolution& x, const CostOracle& oracle);

// Zeroes entries outside each item's windows and, for items with a single
// window, scales the window's entries so that they sum to exactly one.
// Throws Error(kInfeasibleInput) when some window has coverage below one.
FractionalVectorSolution NormalizeToWindows(const CoverInstance& instance,
                                            const FractionalVectorSolution& x);

// A vertex of the base polytope of f that is maximal in direction x: items
// sorted by decreasing x (ties by index) receive their marginal costs. Its
// inner product with x equals the Lovasz extension.
std::vector<Rational> GreedyVertex(const CostOracle& oracle, const Vector& x);
std::vector<double> GreedyVertex(const CostOracle& oracle, const std::vector<double>& x);

}  // namespace covertime

#endif  // COVERTIME_LOVASZ_H_
