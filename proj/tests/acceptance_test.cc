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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// fails. Every sample is seeded, so the numbers are reproducible.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "covertime/brute_force.h"
#include "covertime/config_lp.h"
#include "covertime/errors.h"
#include "covertime/generator.h"
#include "covertime/intervals.h"
#include "covertime/json_io.h"
#include "covertime/lovasz.h"
#include "covertime/lovasz_solver.h"
#include "covertime/path_solution.h"
#include "covertime/pipeline.h"
#include "covertime/random.h"
#include "covertime/reduce.h"
#include "covertime/round_irp.h"

namespace covertime {
namespace {

// Pinned tolerances and thresholds.
constexpr double kConcentrationTolerance = 1e-9;
constexpr double kRelaxationTolerance = 1e-6;
constexpr double kRedundancyThreshold = 0.70;
constexpr double kTerminationThreshold = 0.99;
constexpr double kSweepSeconds = 600;

constexpr OracleKind kSubmodular[] = {OracleKind::kModular, OracleKind::kCardinality,
                                      OracleKind::kCoverage, OracleKind::kLaminar};
constexpr InstanceKind kSjrpKinds[] = {InstanceKind::kSjrpModular, InstanceKind::kSjrpCardinality,
                                       InstanceKind::kSjrpCoverage, InstanceKind::kSjrpLaminar};

int failures = 0;

void Report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string Fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof(buffer), format, args...);
  return buffer;
}

// Runs body(i) for i in [0, count) on all cores.
void ParallelFor(int count, const std::function<void(int)>& body) {
  std::atomic<int> next{0};
  const int threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) body(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

CoverInstance Generate(InstanceKind kind, int n, Day horizon, uint64_t seed, WindowStyle style) {
  GeneratorOptions options;
  options.kind = kind;
  options.n_items = n;
  options.horizon = horizon;
  options.seed = seed;
  options.style = style;
  return GenerateInstance(options);
}

Vector RandomUnitVector(int n, std::mt19937_64& rng) {
  const int denominator = UniformInt(rng, 2, 64);
  Vector x(n);
  for (Rational& value : x) {
    const int r = UniformInt(rng, 0, 5);
    value = r == 0 ? Rational(0) : r == 1 ? Rational(1) : Rational(UniformInt(rng, 0, denominator), denominator);
    value.canonicalize();
  }
  return x;
}

CoverInstance RandomNice(const CostOracle& oracle, Day horizon, std::mt19937_64& rng) {
  CoverInstance instance;
  instance.n_items = oracle.n_items();
  instance.horizon = horizon;
  instance.oracle = oracle;
  for (ItemId v = 0; v < instance.n_items; ++v) {
    instance.windows.push_back(RandomWindow(v, horizon, WindowStyle::kLeftAligned, rng));
  }
  instance.nice = IsTower(horizon);
  return instance;
}

// Criteria 1 and 2: gen -> solve -> verify sweeps; the Lovasz rounding
// bound is checked on every leaf of the SJRP runs.
void FeasibilitySweep() {
  const auto start = std::chrono::steady_clock::now();
  std::atomic<int> sjrp_ok{0}, irp_ok{0}, bound_violations{0}, leaves{0};
  std::mutex mu;
  std::string first_error;
  double worst_bound_ratio = 0;
  ParallelFor(2000, [&](int i) {
    const bool sjrp = i < 1000;
    const uint64_t seed = static_cast<uint64_t>(i % 1000);
    const InstanceKind kind = sjrp ? kSjrpKinds[seed % 4] : InstanceKind::kIrp;
    const int n = 1 + static_cast<int>(seed % (sjrp ? 16 : 12));
    const Day horizon = (seed / 2) % 2 == 0 ? 4 : 16;
    const WindowStyle style = (seed / 4) % 2 == 0 ? WindowStyle::kLeftAligned : WindowStyle::kArbitrary;
    try {
      const CoverInstance instance = Generate(kind, n, horizon, seed, style);
      const Json solution = SolveReportToJson(SolveCover(instance, {.seed = seed}));
      const VerifyReport verdict = VerifySolution(instance, ParseJson(solution.dump()));
      if (!verdict.ok()) throw Error(ErrorCode::kInternal, verdict.violations[0]);
      (sjrp ? sjrp_ok : irp_ok)++;
      if (sjrp) {
        for (const Json& leaf : solution["leaves"]) {
          ++leaves;
          const Rational cost = RationalFromJson(leaf["cost"]);
          const Rational bound = RationalFromJson(leaf["cost_bound"]);
          if (cost > bound) ++bound_violations;
          if (bound > 0) {
            std::lock_guard<std::mutex> lock(mu);
            worst_bound_ratio = std::max(worst_bound_ratio, ToDouble(cost / bound));
          }
        }
      }
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(mu);
      if (first_error.empty()) {
        first_error = std::string(InstanceKindName(kind)) + " seed " + std::to_string(seed) + ": " + e.what();
      }
    }
  });
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Report(1, sjrp_ok == 1000 && irp_ok == 1000 && seconds < kSweepSeconds,
         Fmt("verify clean on %d/1000 sjrp and %d/1000 irp runs in %.1f s (limit %.0f s)%s",
             sjrp_ok.load(), irp_ok.load(), seconds, kSweepSeconds,
             first_error.empty() ? "" : ("; first error: " + first_error).c_str()));
  Report(2, bound_violations == 0 && sjrp_ok == 1000,
         Fmt("%d violations of cost <= (32 loglogT + 1) sum f^(x_initial) over %d leaves; "
             "largest cost/bound %.4f",
             bound_violations.load(), leaves.load(), worst_bound_ratio));
}

void Concentration() {
  const Rational alphas[] = {Rational(1, 2), Rational(1, 4), Rational(1, 8)};
  int none = 0;
  int violations = 0;
  double worst_slack = -1e300;
  for (uint64_t seed = 0; seed < 500; ++seed) {
    std::mt19937_64 rng = SubstreamRng(seed, "acceptance/concentration");
    const int n = UniformInt(rng, 1, 10);
    const CostOracle oracle = RandomOracle(kSubmodular[seed % 4], n, rng);
    const Vector x = RandomUnitVector(n, rng);
    const Rational& alpha = alphas[seed % 3];
    if (FindSupportedTheta(oracle, x, alpha / 32)) continue;
    ++none;
    const double lhs = std::pow(2.0, 1.0 / ToDouble(alpha)) * ToDouble(oracle.Evaluate(LevelSet(x, 1)));
    const double rhs = ToDouble(LovaszValue(oracle, x));
    worst_slack = std::max(worst_slack, lhs - rhs);
    if (lhs > rhs + kConcentrationTolerance) ++violations;
  }
  Report(3, violations == 0,
         Fmt("%d violations among %d of 500 triples with no supported level set "
             "(tolerance %.0e)",
             violations, none, kConcentrationTolerance));
}

void ReductionConstants() {
  int split_bad = 0, sparsify_bad = 0, separated_bad = 0, separated_cases = 0;
  double split_worst = 0, sparsify_worst = 0, separated_worst = 0;
  for (uint64_t seed = 0; seed < 300; ++seed) {
    std::mt19937_64 rng = SubstreamRng(seed, "acceptance/reduce");
    const int n = UniformInt(rng, 1, 6);
    const Day horizon = UniformInt(rng, 1, 16);
    const CostOracle oracle = RandomOracle(kSubmodular[seed % 4], n, rng);
    CoverInstance instance;
    instance.n_items = n;
    instance.horizon = horizon;
    instance.oracle = oracle;
    for (ItemId v = 0; v < n; ++v) {
      for (int k = UniformInt(rng, 1, 2); k > 0; --k) {
        instance.windows.push_back(RandomWindow(v, horizon, WindowStyle::kArbitrary, rng));
      }
    }
    const ConfigLpResult lp = SolveConfigLp(instance);

    const AlignedSplit split = SplitLeftRight(instance, lp.y);
    Rational combined = 0;
    for (const SubInstance* part : {&split.left, &split.right}) {
      if (!part->instance.windows.empty()) combined += SolveConfigLp(part->instance).value;
    }
    if (combined > 4 * lp.value) ++split_bad;
    if (lp.value > 0) split_worst = std::max(split_worst, ToDouble(combined / lp.value));

    const FractionalSetSolution sparse = Sparsify(lp.y, instance);
    const Rational sparse_cost = SetSolutionValue(sparse, oracle);
    bool sparse_ok = sparse_cost <= 2 * lp.value;
    for (const DemandWindow& w : instance.windows) sparse_ok = sparse_ok && sparse.WindowCoverage(w) >= 1;
    for (Day t = 1; t <= horizon; ++t) {
      const Rational mass = sparse.DayMass(t);
      sparse_ok = sparse_ok && (mass == 0 || mass >= 1);
    }
    if (!sparse_ok) ++sparsify_bad;
    if (lp.value > 0) sparsify_worst = std::max(sparsify_worst, ToDouble(sparse_cost / lp.value));

    // Brute force needs a small search space.
    CoverInstance small = instance;
    small.horizon = std::min<Day>(horizon, 6);
    small.windows.clear();
    for (DemandWindow w : instance.windows) {
      if (w.start > small.horizon) continue;
      w.end = std::min(w.end, small.horizon);
      small.windows.push_back(w);
    }
    const Rational opt = BruteForceOptimum(small).cost;
    std::vector<std::pair<Schedule, InstanceMapping>> parts;
    for (const SubInstance& group : WellSeparatedPartition(small)) {
      parts.push_back({BruteForceOptimum(group.instance).schedule, group.mapping});
    }
    const Rational united = ScheduleCost(small, Recombine(parts, small.horizon));
    ++separated_cases;
    if (united > 3 * opt || !CheckFeasible(small, Recombine(parts, small.horizon)).empty()) ++separated_bad;
    if (opt > 0) separated_worst = std::max(separated_worst, ToDouble(united / opt));
  }
  Report(4, split_bad == 0 && sparsify_bad == 0 && separated_bad == 0,
         Fmt("violations over 300 cases each: split %d (max LP ratio %.3f <= 4), sparsify %d "
             "(max %.3f <= 2), well-separated %d of %d (max %.3f <= 3)",
             split_bad, split_worst, sparsify_bad, sparsify_worst, separated_bad, separated_cases,
             separated_worst));
}

void OracleRatios() {
  struct Stats {
    int ordering_bad = 0;
    int bound_bad = 0;
    double max_alg_over_opt = 0;
    double max_alg_over_lp = 0;
  };
  Stats sjrp, irp;
  std::mutex mu;
  std::string first_error;
  ParallelFor(400, [&](int i) {
    const bool is_sjrp = i < 200;
    const uint64_t seed = static_cast<uint64_t>(i % 200);
    std::mt19937_64 rng = SubstreamRng(seed, is_sjrp ? "acceptance/ratio-sjrp" : "acceptance/ratio-irp");
    const int n = UniformInt(rng, 1, 6);
    const Day horizon = UniformInt(rng, 1, 8);
    const InstanceKind kind = is_sjrp ? kSjrpKinds[seed % 4] : InstanceKind::kIrp;
    const WindowStyle style = seed % 2 ? WindowStyle::kArbitrary : WindowStyle::kLeftAligned;
    try {
      const CoverInstance instance = Generate(kind, n, horizon, seed, style);
      const SolveReport report = SolveCover(instance, {.lp = LpKind::kConfig, .seed = seed});
      const Rational opt = BruteForceOptimum(instance).cost;
      const bool ordered = report.lp_value <= opt && opt <= report.cost;
      bool bound_ok = true;
      double alg_over_opt = opt > 0 ? ToDouble(report.cost / opt) : 1.0;
      double alg_over_lp = report.lp_value > 0 ? ToDouble(report.cost / report.lp_value) : 1.0;
      for (const LeafReport& leaf : report.leaves) {
        const int k = LogLogHorizon(leaf.instance.horizon);
        if (is_sjrp) {
          bound_ok = bound_ok && report.cost <= (32 * k + 1) * opt;
        } else {
          bound_ok = bound_ok && report.cost <= 8 * leaf.k_constant * k * report.lp_value;
        }
      }
      std::lock_guard<std::mutex> lock(mu);
      Stats& s = is_sjrp ? sjrp : irp;
      if (!ordered) ++s.ordering_bad;
      if (!bound_ok) ++s.bound_bad;
      s.max_alg_over_opt = std::max(s.max_alg_over_opt, alg_over_opt);
      s.max_alg_over_lp = std::max(s.max_alg_over_lp, alg_over_lp);
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(mu);
      ++(is_sjrp ? sjrp : irp).ordering_bad;
      if (first_error.empty()) first_error = e.what();
    }
  });
  Report(5,
         sjrp.ordering_bad + sjrp.bound_bad + irp.ordering_bad + irp.bound_bad == 0,
         Fmt("200 seeds each: LP<=OPT<=ALG violations sjrp %d irp %d; sjrp ALG/OPT <= 32k+1 "
             "violations %d, max ALG/OPT %.4f; irp ALG/LP <= 8Kk violations %d, max ALG/LP %.4f, "
             "max ALG/OPT %.4f%s",
             sjrp.ordering_bad, irp.ordering_bad, sjrp.bound_bad, sjrp.max_alg_over_opt,
             irp.bound_bad, irp.max_alg_over_lp, irp.max_alg_over_opt,
             first_error.empty() ? "" : ("; error: " + first_error).c_str()));
}

// Random nice metric instance with the path solution of its LP.
struct IrpCase {
  CoverInstance instance;
  FractionalPathSolution fps;
};

IrpCase RandomIrpCase(uint64_t seed, const char* stream, int max_items) {
  std::mt19937_64 rng = SubstreamRng(seed, stream);
  const int n = UniformInt(rng, 1, max_items);
  const Day horizon = seed % 2 ? 16 : 4;
  const CostOracle metric = RandomOracle(OracleKind::kMetricSteiner, n, rng);
  IrpCase c{RandomNice(metric, horizon, rng), {}};
  c.fps = FpsFromSets(SolveConfigLp(c.instance).y, metric);
  return c;
}

void Redundancy() {
  long edges = 0, redundant = 0;
  int samples = 0;
  for (uint64_t seed = 0; samples < 2000 && seed < 100000; ++seed) {
    const IrpCase c = RandomIrpCase(seed, "acceptance/redundancy", 10);
    const IrpResult result = RoundIrp(c.instance, c.fps, {.seed = seed});
    for (const IrpIterationTrace& step : result.trace) {
      if (step.edges == 0 || samples >= 2000) continue;
      ++samples;
      edges += step.edges;
      redundant += step.redundant_edges;
    }
  }
  const double rate = edges > 0 ? static_cast<double>(redundant) / edges : 0;
  Report(6, samples == 2000 && rate >= kRedundancyThreshold,
         Fmt("fully redundant edge frequency %.4f (%ld of %ld edges) over %d iterations at the "
             "design-rule K; threshold %.2f",
             rate, redundant, edges, samples, kRedundancyThreshold));
}

void RelaxationEquivalence() {
  int bad = 0;
  double worst = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng = SubstreamRng(seed, "acceptance/relaxations");
    const int n = UniformInt(rng, 1, 8);
    const Day horizon = UniformInt(rng, 1, 16);
    const CostOracle oracle = RandomOracle(kSubmodular[seed % 4], n, rng);
    CoverInstance instance;
    instance.n_items = n;
    instance.horizon = horizon;
    instance.oracle = oracle;
    for (ItemId v = 0; v < n; ++v) {
      instance.windows.push_back(RandomWindow(
          v, horizon, seed % 2 ? WindowStyle::kArbitrary : WindowStyle::kLeftAligned, rng));
    }
    const double config = ToDouble(SolveConfigLp(instance).value);
    const double lovasz = ToDouble(SolveLovasz(instance).objective);
    const double relative = std::abs(lovasz - config) / std::max(1.0, std::abs(config));
    worst = std::max(worst, relative);
    if (relative > kRelaxationTolerance) ++bad;
  }
  Report(7, bad == 0,
         Fmt("%d of 100 instances differ by more than %.0e relative; largest difference %.3e", bad,
             kRelaxationTolerance, worst));
}

void FpsConstruction() {
  int bad = 0;
  double worst = 0;
  for (uint64_t seed = 0; seed < 300; ++seed) {
    std::mt19937_64 rng = SubstreamRng(seed, "acceptance/fps");
    const int n = UniformInt(rng, 1, 8);
    const Day horizon = UniformInt(rng, 1, 8);
    const CostOracle metric = RandomOracle(OracleKind::kMetricSteiner, n, rng);
    CoverInstance instance;
    instance.n_items = n;
    instance.horizon = horizon;
    instance.oracle = metric;
    for (ItemId v = 0; v < n; ++v) {
      instance.windows.push_back(RandomWindow(v, horizon, WindowStyle::kArbitrary, rng));
    }
    const FractionalSetSolution y = SolveConfigLp(instance).y;
    const FractionalPathSolution fps = FpsFromSets(y, metric);
    const Rational set_value = SetSolutionValue(y, metric);
    const Rational cost = FpsCost(fps, metric);
    if (cost > 2 * set_value || !UnconnectedWindows(fps, instance).empty()) ++bad;
    if (set_value > 0) worst = std::max(worst, ToDouble(cost / set_value));
  }
  Report(8, bad == 0,
         Fmt("%d of 300 cases exceed 2x the set value or lose connectivity; largest ratio %.4f",
             bad, worst));
}

void Termination() {
  std::atomic<int> finished{0};
  std::atomic<int> max_iterations{0};
  ParallelFor(1000, [&](int i) {
    const IrpCase c = RandomIrpCase(static_cast<uint64_t>(i), "acceptance/termination", 12);
    try {
      const IrpResult result = RoundIrp(c.instance, c.fps, {.seed = static_cast<uint64_t>(i)});
      ++finished;
      int seen = max_iterations.load();
      while (result.iterations > seen && !max_iterations.compare_exchange_weak(seen, result.iterations)) {
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNontermination) throw;
    }
  });
  const double rate = finished / 1000.0;
  Report(9, rate >= kTerminationThreshold,
         Fmt("%d of 1000 runs finished within ceil(64 log2(N+1)) iterations (threshold %.0f%%); "
             "most iterations used %d",
             finished.load(), kTerminationThreshold * 100, max_iterations.load()));
}

}  // namespace
}  // namespace covertime

int main() {
  using namespace covertime;
  const auto guarded = [](int criterion, void (*run)()) {
    try {
      run();
    } catch (const std::exception& e) {
      Report(criterion, false, std::string("aborted: ") + e.what());
    }
  };
  guarded(1, FeasibilitySweep);  // also reports criterion 2
  guarded(3, Concentration);
  guarded(4, ReductionConstants);
  guarded(5, OracleRatios);
  guarded(6, Redundancy);
  guarded(7, RelaxationEquivalence);
  guarded(8, FpsConstruction);
  guarded(9, Termination);
  return failures == 0 ? 0 : 1;
}
