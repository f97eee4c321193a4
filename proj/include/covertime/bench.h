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

// Benchmark suites: generate, solve and compare against the LP and, where
// it fits, the exact optimum, aggregating ratios and runtimes per entry.

#ifndef COVERTIME_BENCH_H_
#define COVERTIME_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covertime/generator.h"
#include "covertime/json_io.h"
#include "covertime/pipeline.h"

namespace covertime {

struct BenchEntry {
  InstanceKind kind = InstanceKind::kSjrpModular;
  int n_items = 4;
  Day horizon = 8;
  WindowStyle style = WindowStyle::kLeftAligned;
  int windows_per_item = 1;
  uint64_t first_seed = 0;
  int seeds = 100;
};

struct BenchSuite {
  std::vector<BenchEntry> entries;
  // Exact optima are attempted up to this many window assignments.
  int64_t brute_force_cap = 200'000;
  int threads = 0;  // 0 picks the hardware concurrency
  SolveOptions solve;
};

// All five instance kinds at (N, T) in {(4, 8), (8, 16)}, left aligned,
// 100 seeds each.
BenchSuite DefaultBenchSuite();

// {"entries": [{"kind", "n", "T", "style", "windows_per_item",
// "first_seed", "seeds"}...], "brute_force_cap"}; omitted fields take the
// BenchEntry defaults.
BenchSuite BenchSuiteFromJson(const Json& j);

struct BenchRow {
  BenchEntry entry;
  int runs = 0;
  int failures = 0;
  double mean_alg_over_lp = 0;
  double max_alg_over_lp = 0;
  // Absent when no run of the entry fit the brute-force cap.
  int opt_runs = 0;
  std::optional<double> mean_alg_over_opt;
  std::optional<double> max_alg_over_opt;
  double mean_ms = 0;
  double max_ms = 0;
  std::vector<std::string> errors;
};

std::vector<BenchRow> RunBench(const BenchSuite& suite);

Json BenchRowsToJson(const std::vector<BenchRow>& rows);
std::string BenchRowsToCsv(const std::vector<BenchRow>& rows);

}  // namespace covertime

#endif  // COVERTIME_BENCH_H_
