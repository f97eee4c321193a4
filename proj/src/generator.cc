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

#include "covertime/generator.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "covertime/errors.h"
#include "covertime/intervals.h"
#include "covertime/random.h"

namespace covertime {
namespace {

constexpr InstanceKind kAllKinds[] = {
    InstanceKind::kIrp, InstanceKind::kSjrpModular, InstanceKind::kSjrpCardinality,
    InstanceKind::kSjrpCoverage, InstanceKind::kSjrpLaminar};

Rational RandomWeight(std::mt19937_64& rng, int lo, int hi) {
  return Rational(UniformInt(rng, lo, hi));
}

CostOracle RandomLaminar(int n, std::mt19937_64& rng) {
  std::vector<ItemId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<ItemSet> sets;
  std::vector<Rational> weights;
  // Recursively cut a permuted range into two or three contiguous parts;
  // every range becomes a set, so the family is laminar by construction.
  std::function<void(int, int, int)> split = [&](int lo, int hi, int depth) {
    const int size = hi - lo;
    if (size <= 0) return;
    sets.push_back(MakeItemSet({perm.begin() + lo, perm.begin() + hi}));
    weights.push_back(depth == 0 ? RandomWeight(rng, 1, 10) : RandomWeight(rng, 0, 6));
    if (size == 1) return;
    const int parts = std::min(size, UniformInt(rng, 2, 3));
    std::vector<int> cuts = {lo, hi};
    while (static_cast<int>(cuts.size()) < parts + 1) {
      const int c = UniformInt(rng, lo + 1, hi - 1);
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i) split(cuts[i], cuts[i + 1], depth + 1);
  };
  split(0, n, 0);
  return CostOracle::Laminar(n, std::move(sets), std::move(weights));
}

}  // namespace

const char* InstanceKindName(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kIrp:
      return "irp";
    case InstanceKind::kSjrpModular:
      return "sjrp-modular";
    case InstanceKind::kSjrpCardinality:
      return "sjrp-cardinality";
    case InstanceKind::kSjrpCoverage:
      return "sjrp-coverage";
    case InstanceKind::kSjrpLaminar:
      return "sjrp-laminar";
  }
  return "unknown";
}

InstanceKind ParseInstanceKind(std::string_view name) {
  for (InstanceKind kind : kAllKinds) {
    if (name == InstanceKindName(kind)) return kind;
  }
  throw Error(ErrorCode::kUsage, "unknown instance kind '" + std::string(name) + "'");
}

OracleKind OracleKindFor(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kIrp:
      return OracleKind::kMetricSteiner;
    case InstanceKind::kSjrpModular:
      return OracleKind::kModular;
    case InstanceKind::kSjrpCardinality:
      return OracleKind::kCardinality;
    case InstanceKind::kSjrpCoverage:
      return OracleKind::kCoverage;
    case InstanceKind::kSjrpLaminar:
      return OracleKind::kLaminar;
  }
  throw Error(ErrorCode::kInternal, "unhandled instance kind");
}

const char* WindowStyleName(WindowStyle style) {
  return style == WindowStyle::kLeftAligned ? "left-aligned" : "arbitrary";
}

WindowStyle ParseWindowStyle(std::string_view name) {
  if (name == "left-aligned") return WindowStyle::kLeftAligned;
  if (name == "arbitrary") return WindowStyle::kArbitrary;
  throw Error(ErrorCode::kUsage, "unknown window style '" + std::string(name) + "'");
}

CostOracle RandomOracle(OracleKind kind, int n, std::mt19937_64& rng) {
  switch (kind) {
    case OracleKind::kModular: {
      std::vector<Rational> weights(n);
      for (auto& w : weights) w = RandomWeight(rng, 1, 10);
      Rational base = RandomWeight(rng, 0, 10);
      return CostOracle::Modular(std::move(base), std::move(weights));
    }
    case OracleKind::kCardinality: {
      std::vector<Rational> g = {Rational(0)};
      int increment = UniformInt(rng, 2, 10);
      for (int j = 1; j <= n; ++j) {
        g.push_back(g.back() + increment);
        increment = std::max(0, increment - UniformInt(rng, 0, 2));
      }
      return CostOracle::Cardinality(n, std::move(g));
    }
    case OracleKind::kCoverage: {
      const int m = std::max(1, 2 * n);
      std::vector<Rational> weights(m);
      for (auto& w : weights) w = RandomWeight(rng, 1, 10);
      std::vector<std::vector<int>> covers(n);
      for (auto& list : covers) {
        const int k = UniformInt(rng, 1, 3);
        for (int i = 0; i < k; ++i) list.push_back(UniformInt(rng, 0, m - 1));
      }
      return CostOracle::Coverage(n, std::move(weights), std::move(covers));
    }
    case OracleKind::kLaminar:
      return RandomLaminar(n, rng);
    case OracleKind::kMetricSteiner: {
      std::vector<std::pair<double, double>> points(n + 1);
      for (auto& [px, py] : points) {
        px = UniformUnit(rng);
        py = UniformUnit(rng);
      }
      DistanceMatrix d(n + 1, std::vector<Rational>(n + 1));
      for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const double dist = std::hypot(points[i].first - points[j].first,
                                         points[i].second - points[j].second);
          Rational q(static_cast<long>(std::llround(dist * 1e6)), 1000000L);
          q.canonicalize();
          d[i][j] = q;
          d[j][i] = q;
        }
      }
      return CostOracle::MetricSteiner(std::move(d), 0);
    }
  }
  throw Error(ErrorCode::kInternal, "unhandled oracle kind");
}

DemandWindow RandomWindow(ItemId item, Day horizon, WindowStyle style,
                          std::mt19937_64& rng) {
  if (style == WindowStyle::kArbitrary) {
    Day s = UniformInt(rng, 1, horizon);
    Day t = UniformInt(rng, 1, horizon);
    if (s > t) std::swap(s, t);
    return {item, s, t};
  }
  // Largest level whose blocks fit in the horizon.
  int max_level = 0;
  while ((Day{2} << max_level) <= horizon) ++max_level;
  const int level = UniformInt(rng, 0, max_level);
  const Day block = Day{1} << level;
  const int k = UniformInt(rng, 0, horizon / block - 1);
  const Day start = k * block + 1;
  const Day end = start + UniformInt(rng, 0, block - 1);
  return {item, start, end};
}

CoverInstance GenerateInstance(const GeneratorOptions& options) {
  if (options.n_items < 1) throw Error(ErrorCode::kUsage, "n must be at least 1");
  if (options.horizon < 1) throw Error(ErrorCode::kUsage, "T must be at least 1");
  if (options.windows_per_item < 1) {
    throw Error(ErrorCode::kUsage, "windows per item must be at least 1");
  }
  CoverInstance instance;
  instance.n_items = options.n_items;
  instance.horizon = options.horizon;
  std::mt19937_64 oracle_rng = SubstreamRng(options.seed, "gen/oracle");
  instance.oracle = RandomOracle(OracleKindFor(options.kind), options.n_items, oracle_rng);
  std::mt19937_64 window_rng = SubstreamRng(options.seed, "gen/windows");
  for (ItemId v = 0; v < options.n_items; ++v) {
    for (int k = 0; k < options.windows_per_item; ++k) {
      instance.windows.push_back(RandomWindow(v, options.horizon, options.style, window_rng));
    }
  }
  instance.Validate();
  return instance;
}

}  // namespace covertime
