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

// Seeded random instances. Everything is drawn from named substreams of the
// seed, so a (kind, n, T, seed, style) tuple always yields the same instance.

#ifndef COVERTIME_GENERATOR_H_
#define COVERTIME_GENERATOR_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "covertime/cost_oracle.h"
#include "covertime/instance.h"

namespace covertime {

enum class InstanceKind {
  kIrp,
  kSjrpModular,
  kSjrpCardinality,
  kSjrpCoverage,
  kSjrpLaminar,
};

const char* InstanceKindName(InstanceKind kind);
// Throws Error(kUsage) on an unknown name.
InstanceKind ParseInstanceKind(std::string_view name);
OracleKind OracleKindFor(InstanceKind kind);

enum class WindowStyle {
  // Each window is a prefix of a dyadic block, so the family is left aligned.
  kLeftAligned,
  kArbitrary,
};

const char* WindowStyleName(WindowStyle style);
WindowStyle ParseWindowStyle(std::string_view name);

struct GeneratorOptions {
  InstanceKind kind = InstanceKind::kSjrpModular;
  int n_items = 4;
  Day horizon = 16;
  uint64_t seed = 0;
  WindowStyle style = WindowStyle::kLeftAligned;
  int windows_per_item = 1;
};

// Throws Error(kUsage) on n < 1, T < 1 or windows_per_item < 1.
CoverInstance GenerateInstance(const GeneratorOptions& options);

// Random oracle of the given kind over n items. Metric oracles come from
// n + 1 uniform points in the unit square (the root is point 0) with
// Euclidean distances rounded to a 1e-6 grid.
CostOracle RandomOracle(OracleKind kind, int n_items, std::mt19937_64& rng);

DemandWindow RandomWindow(ItemId item, Day horizon, WindowStyle style,
                          std::mt19937_64& rng);

}  // namespace covertime

#endif  // COVERTIME_GENERATOR_H_
