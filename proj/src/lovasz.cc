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

#include "covertime/lovasz.h"

#include <algorithm>
#include <numeric>

#include "covertime/errors.h"

namespace covertime {
namespace {

template <typename T>
std::vector<int> DecreasingOrder(const std::vector<T>& x) {
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return x[a] > x[b]; });
  return order;
}

}  // namespace

LevelProfile ComputeLevelProfile(const CostOracle& oracle, const Vector& x) {
  LevelProfile profile;
  const std::vector<int> order = DecreasingOrder(x);
  ItemSet current;
  for (size_t i = 0; i < order.size(); ++i) {
    const Rational& value = x[order[i]];
    if (value < 0 || value > 1) {
      throw Error(ErrorCode::kMalformedInput, "vector entry outside [0,1]");
    }
    if (value == 0) break;
    SetInsert(current, order[i]);
    const bool last_of_value = i + 1 == order.size() || x[order[i + 1]] != value;
    if (!last_of_value) continue;
    profile.values.push_back(value);
    profile.sets.push_back(current);
    profile.costs.push_back(oracle.Evaluate(current));
  }
  return profile;
}

Rational LovaszValue(const LevelProfile& profile) {
  Rational total = 0;
  const size_t n = profile.values.size();
  for (size_t j = 0; j < n; ++j) {
    const Rational next = j + 1 < n ? profile.values[j + 1] : Rational(0);
    total += profile.costs[j] * (profile.values[j] - next);
  }
  return total;
}

Rational LovaszValue(const CostOracle& oracle, const Vector& x) {
  return LovaszValue(ComputeLevelProfile(oracle, x));
}

ItemSet LevelSet(const Vector& x, const Rational& theta) {
  ItemSet out;
  for (int v = 0; v < static_cast<int>(x.size()); ++v) {
    if (x[v] >= theta) out.push_back(v);
  }
  return out;
}

Vector Truncate(const Vector& x, const Rational& theta) {
  Vector out(x.size());
  for (size_t v = 0; v < x.size(); ++v) out[v] = Min(x[v], theta);
  return out;
}

std::optional<Rational> FindSupportedTheta(const LevelProfile& profile,
                                           const Rational& alpha) {
  const int n = static_cast<int>(profile.values.size());
  // gap[j] = integral of f(L_eta) over [b_j, b_1].
  std::vector<Rational> gap(n);
  for (int j = 1; j < n; ++j) {
    gap[j] = gap[j - 1] + profile.costs[j - 1] * (profile.values[j - 1] - profile.values[j]);
  }
  for (int j = n - 1; j >= 0; --j) {
    const Rational lower = j + 1 < n ? profile.values[j + 1] : Rational(0);
    const Rational& b = profile.values[j];
    const Rational& cost = profile.costs[j];
    if (cost == 0) return b;
    // For theta in (lower, b]: the gap is (b - theta) * cost + gap[j].
    Rational candidate = b + gap[j] / cost - alpha;
    if (candidate > b) candidate = b;
    if (candidate > lower) return candidate;
  }
  return std::nullopt;
}

std::optional<Rational> FindSupportedTheta(const CostOracle& oracle, const Vector& x,
                                           const Rational& alpha) {
  return FindSupportedTheta(ComputeLevelProfile(oracle, x), alpha);
}

FractionalSetSolution XToY(const FractionalVectorSolution& x) {
  FractionalSetSolution y(x.horizon());
  for (Day t = 1; t <= x.horizon(); ++t) {
    const Vector& xt = x.at(t);
    const std::vector<int> order = DecreasingOrder(xt);
    ItemSet current;
    for (size_t i = 0; i < order.size(); ++i) {
      const Rational& value = xt[order[i]];
      if (value <= 0) break;
      SetInsert(current, order[i]);
      if (i + 1 < order.size() && xt[order[i + 1]] == value) continue;
      const Rational next =
          i + 1 < order.size() ? Max(xt[order[i + 1]], Rational(0)) : Rational(0);
      y.Add(t, current, value - next);
    }
  }
  return y;
}

FractionalVectorSolution YToX(const FractionalSetSolution& y, int n_items) {
  FractionalVectorSolution x(y.horizon(), n_items);
  for (Day t = 1; t <= y.horizon(); ++t) {
    for (const WeightedSet& ws : y.at(t)) {
      for (ItemId v : ws.items) x.at(t)[v] += ws.weight;
    }
  }
  return x;
}

Rational VectorSolutionValue(const FractionalVectorSolution& x, const CostOracle& oracle) {
  Rational total = 0;
  for (Day t = 1; t <= x.horizon(); ++t) total += LovaszValue(oracle, x.at(t));
  return total;
}

FractionalVectorSolution NormalizeToWindows(const CoverInstance& instance,
                                            const FractionalVectorSolution& x) {
  if (x.horizon() != instance.horizon || x.n_items() != instance.n_items) {
    throw Error(ErrorCode::kMalformedInput, "vector solution does not match instance");
  }
  FractionalVectorSolution out(instance.horizon, instance.n_items);
  std::vector<std::vector<const DemandWindow*>> by_item(instance.n_items);
  for (const DemandWindow& w : instance.windows) by_item[w.item].push_back(&w);
  for (ItemId v = 0; v < instance.n_items; ++v) {
    const auto& windows = by_item[v];
    for (const DemandWindow* w : windows) {
      Rational sum = 0;
      for (Day t = w->start; t <= w->end; ++t) sum += Max(x.at(t)[v], Rational(0));
      if (sum < 1) {
        throw Error(ErrorCode::kInfeasibleInput, "window coverage below one");
      }
      for (Day t = w->start; t <= w->end; ++t) {
        Rational value = Max(x.at(t)[v], Rational(0));
        if (windows.size() == 1) {
          value /= sum;
        } else if (value > 1) {
          value = 1;
        }
        out.at(t)[v] = value;
      }
    }
  }
  return out;
}

std::vector<Rational> GreedyVertex(const CostOracle& oracle, const Vector& x) {
  const std::vector<int> order = DecreasingOrder(x);
  std::vector<Rational> g(x.size());
  ItemSet prefix;
  Rational previous = 0;
  for (int v : order) {
    SetInsert(prefix, v);
    Rational value = oracle.Evaluate(prefix);
    g[v] = value - previous;
    previous = std::move(value);
  }
  return g;
}

std::vector<double> GreedyVertex(const CostOracle& oracle, const std::vector<double>& x) {
  const std::vector<int> order = DecreasingOrder(x);
  std::vector<double> g(x.size());
  ItemSet prefix;
  Rational previous = 0;
  for (int v : order) {
    SetInsert(prefix, v);
    Rational value = oracle.Evaluate(prefix);
    g[v] = Rational(value - previous).get_d();
    previous = std::move(value);
  }
  return g;
}

}  // namespace covertime
