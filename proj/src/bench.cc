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

#include "covertime/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "covertime/brute_force.h"
#include "covertime/errors.h"

namespace covertime {
namespace {

struct RunResult {
  bool ok = false;
  std::string error;
  double alg_over_lp = 0;
  std::optional<double> alg_over_opt;
  double ms = 0;
};

RunResult RunOne(const BenchEntry& entry, uint64_t seed, const BenchSuite& suite) {
  RunResult out;
  const auto start = std::chrono::steady_clock::now();
  try {
    GeneratorOptions gen;
    gen.kind = entry.kind;
    gen.n_items = entry.n_items;
    gen.horizon = entry.horizon;
    gen.seed = seed;
    gen.style = entry.style;
    gen.windows_per_item = entry.windows_per_item;
    const CoverInstance instance = GenerateInstance(gen);
    SolveOptions options = suite.solve;
    options.seed = seed;
    const SolveReport report = SolveCover(instance, options);
    if (!CheckFeasible(instance, report.schedule).empty()) {
      throw Error(ErrorCode::kInternal, "infeasible schedule");
    }
    out.alg_over_lp = report.lp_value > 0 ? ToDouble(report.cost / report.lp_value) : 1.0;
    try {
      const BruteForceResult opt =
          BruteForceOptimum(instance, {.max_assignments = suite.brute_force_cap});
      out.alg_over_opt = opt.cost > 0 ? ToDouble(report.cost / opt.cost) : 1.0;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kCapacity) throw;
    }
    out.ok = true;
  } catch (const std::exception& e) {
    out.error = "seed " + std::to_string(seed) + ": " + e.what();
  }
  out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
               .count();
  return out;
}

}  // namespace

BenchSuite DefaultBenchSuite() {
  BenchSuite suite;
  for (InstanceKind kind : {InstanceKind::kSjrpModular, InstanceKind::kSjrpCardinality,
                            InstanceKind::kSjrpCoverage, InstanceKind::kSjrpLaminar,
                            InstanceKind::kIrp}) {
    for (auto [n, horizon] : {std::pair{4, 8}, std::pair{8, 16}}) {
      BenchEntry entry;
      entry.kind = kind;
      entry.n_items = n;
      entry.horizon = horizon;
      suite.entries.push_back(entry);
    }
  }
  return suite;
}

BenchSuite BenchSuiteFromJson(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kUsage, "a bench suite is a JSON object");
  BenchSuite suite;
  suite.brute_force_cap = j.value("brute_force_cap", suite.brute_force_cap);
  for (const Json& e : j.value("entries", Json::array())) {
    BenchEntry entry;
    try {
      entry.kind = ParseInstanceKind(e.value("kind", std::string("sjrp-modular")));
      entry.n_items = e.value("n", entry.n_items);
      entry.horizon = e.value("T", entry.horizon);
      entry.style = ParseWindowStyle(e.value("style", std::string("left-aligned")));
      entry.windows_per_item = e.value("windows_per_item", entry.windows_per_item);
      entry.first_seed = e.value("first_seed", entry.first_seed);
      entry.seeds = e.value("seeds", entry.seeds);
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorCode::kUsage, std::string("bad bench entry: ") + ex.what());
    }
    if (entry.seeds < 0) throw Error(ErrorCode::kUsage, "seeds must be nonnegative");
    suite.entries.push_back(entry);
  }
  return suite;
}

std::vector<BenchRow> RunBench(const BenchSuite& suite) {
  struct Job {
    size_t row;
    uint64_t seed;
  };
  std::vector<Job> jobs;
  for (size_t r = 0; r < suite.entries.size(); ++r) {
    for (int s = 0; s < suite.entries[r].seeds; ++s) {
      jobs.push_back({r, suite.entries[r].first_seed + static_cast<uint64_t>(s)});
    }
  }
  std::vector<RunResult> results(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < jobs.size(); i = next++) {
      results[i] = RunOne(suite.entries[jobs[i].row], jobs[i].seed, suite);
    }
  };
  const int threads = std::max(
      1, suite.threads > 0 ? suite.threads : static_cast<int>(std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  std::vector<BenchRow> rows(suite.entries.size());
  for (size_t r = 0; r < rows.size(); ++r) rows[r].entry = suite.entries[r];
  for (size_t i = 0; i < jobs.size(); ++i) {
    BenchRow& row = rows[jobs[i].row];
    const RunResult& run = results[i];
    ++row.runs;
    row.mean_ms += run.ms;
    row.max_ms = std::max(row.max_ms, run.ms);
    if (!run.ok) {
      ++row.failures;
      row.errors.push_back(run.error);
      continue;
    }
    row.mean_alg_over_lp += run.alg_over_lp;
    row.max_alg_over_lp = std::max(row.max_alg_over_lp, run.alg_over_lp);
    if (run.alg_over_opt) {
      ++row.opt_runs;
      row.mean_alg_over_opt = row.mean_alg_over_opt.value_or(0) + *run.alg_over_opt;
      row.max_alg_over_opt = std::max(row.max_alg_over_opt.value_or(0), *run.alg_over_opt);
    }
  }
  for (BenchRow& row : rows) {
    const int solved = row.runs - row.failures;
    if (row.runs > 0) row.mean_ms /= row.runs;
    if (solved > 0) row.mean_alg_over_lp /= solved;
    if (row.opt_runs > 0) *row.mean_alg_over_opt /= row.opt_runs;
  }
  return rows;
}

Json BenchRowsToJson(const std::vector<BenchRow>& rows) {
  Json out = Json::array();
  for (const BenchRow& row : rows) {
    Json j;
    j["kind"] = InstanceKindName(row.entry.kind);
    j["n"] = row.entry.n_items;
    j["T"] = row.entry.horizon;
    j["style"] = WindowStyleName(row.entry.style);
    j["runs"] = row.runs;
    j["failures"] = row.failures;
    j["mean_alg_over_lp"] = row.mean_alg_over_lp;
    j["max_alg_over_lp"] = row.max_alg_over_lp;
    j["opt_runs"] = row.opt_runs;
    j["mean_alg_over_opt"] = row.mean_alg_over_opt ? Json(*row.mean_alg_over_opt) : Json();
    j["max_alg_over_opt"] = row.max_alg_over_opt ? Json(*row.max_alg_over_opt) : Json();
    j["mean_ms"] = row.mean_ms;
    j["max_ms"] = row.max_ms;
    if (!row.errors.empty()) j["errors"] = row.errors;
    out.push_back(j);
  }
  return out;
}

std::string BenchRowsToCsv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "kind,n,T,style,runs,failures,mean_alg_over_lp,max_alg_over_lp,opt_runs,"
         "mean_alg_over_opt,max_alg_over_opt,mean_ms,max_ms\n";
  for (const BenchRow& row : rows) {
    out << InstanceKindName(row.entry.kind) << ',' << row.entry.n_items << ','
        << row.entry.horizon << ',' << WindowStyleName(row.entry.style) << ',' << row.runs << ','
        << row.failures << ',' << row.mean_alg_over_lp << ',' << row.max_alg_over_lp << ','
        << row.opt_runs << ',';
    // Empty cells mark an absent optimum.
    if (row.mean_alg_over_opt) out << *row.mean_alg_over_opt;
    out << ',';
    if (row.max_alg_over_opt) out << *row.max_alg_over_opt;
    out << ',' << row.mean_ms << ',' << row.max_ms << '\n';
  }
  return out.str();
}

}  // namespace covertime
