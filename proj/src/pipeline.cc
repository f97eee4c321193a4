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

#include "covertime/pipeline.h"

#include <algorithm>
#include <string>

#include "covertime/config_lp.h"
#include "covertime/errors.h"
#include "covertime/intervals.h"
#include "covertime/lovasz.h"
#include "covertime/lovasz_solver.h"
#include "covertime/path_solution.h"
#include "covertime/random.h"
#include "covertime/round_irp.h"
#include "covertime/round_sjrp.h"

namespace covertime {
namespace {

constexpr int kConfigLpMaxItems = 12;

std::vector<Interval> Family(const CoverInstance& instance) {
  std::vector<Interval> family;
  for (const DemandWindow& w : instance.windows) family.push_back({w.start, w.end});
  return family;
}

LpKind ResolveLp(LpKind requested, Algorithm algorithm, int n_items) {
  if (requested == LpKind::kLovasz && algorithm == Algorithm::kIrp) {
    throw Error(ErrorCode::kUsage, "the Lovasz program needs a submodular oracle");
  }
  if (requested != LpKind::kAuto) return requested;
  if (n_items <= kConfigLpMaxItems || algorithm == Algorithm::kIrp) return LpKind::kConfig;
  return LpKind::kLovasz;
}

struct LpSolution {
  Rational value;
  FractionalSetSolution y;
  // Filled for the Lovasz program only.
  std::optional<FractionalVectorSolution> x;
};

LpSolution SolveLp(const CoverInstance& instance, LpKind lp) {
  LpSolution out;
  if (lp == LpKind::kConfig) {
    ConfigLpResult result = SolveConfigLp(instance, {.max_items = kConfigLpMaxItems});
    out.value = result.value;
    out.y = std::move(result.y);
  } else {
    LovaszSolverResult result = SolveLovasz(instance);
    out.value = result.objective;
    out.y = XToY(result.x);
    out.x = std::move(result.x);
  }
  return out;
}

// Carries y over to a nicified instance: a set S on the parent day of t
// becomes the copies of S's items whose window contains t. Each copy's
// window keeps the coverage of the window it came from. The cost does not
// grow for a monotone f; the terminal MST of a subset can cost up to twice
// as much.
FractionalSetSolution TransportToNice(const FractionalSetSolution& y, const SubInstance& nice) {
  const CoverInstance& leaf = nice.instance;
  FractionalSetSolution out(leaf.horizon);
  for (Day t = 1; t <= leaf.horizon; ++t) {
    const Day parent = nice.mapping.ParentDay(t);
    if (parent == 0) continue;
    for (const WeightedSet& ws : y.at(parent)) {
      ItemSet image;
      for (const DemandWindow& w : leaf.windows) {
        if (w.Contains(t) && std::binary_search(ws.items.begin(), ws.items.end(),
                                                nice.mapping.item_map[w.item])) {
          image.push_back(w.item);
        }
      }
      if (!image.empty()) out.Add(t, MakeItemSet(std::move(image)), ws.weight);
    }
  }
  return out;
}

class Solver {
 public:
  Solver(const CoverInstance& root, const SolveOptions& options, SolveReport& report)
      : root_(root), options_(options), report_(report) {}

  void Reduce(const CoverInstance& instance, const FractionalSetSolution& y,
              const InstanceMapping& to_root, bool may_bound) {
    if (instance.windows.empty()) return;
    if (FamilyIsLeftAligned(Family(instance))) {
      ReduceAligned(instance, y, to_root, may_bound);
      return;
    }
    report_.steps.push_back("split_left_right");
    AlignedSplit split = SplitLeftRight(instance, y);
    ReduceAligned(split.left.instance, split.left.y,
                  ComposeMappings(to_root, split.left.mapping), may_bound);
    if (split.right.instance.windows.empty()) return;
    report_.steps.push_back("mirror_to_left");
    SubInstance mirrored = MirrorToLeft(split.right.instance, split.right.y);
    const InstanceMapping right_to_root = ComposeMappings(to_root, split.right.mapping);
    ReduceAligned(mirrored.instance, mirrored.y, ComposeMappings(right_to_root, mirrored.mapping),
                  may_bound);
  }

 private:
  void ReduceAligned(const CoverInstance& instance, const FractionalSetSolution& y,
                     const InstanceMapping& to_root, bool may_bound) {
    if (instance.windows.empty()) return;
    const Day n = instance.n_items;
    if (may_bound && instance.horizon > n * n) {
      report_.steps.push_back("bound_time_horizon");
      HorizonBound bound = BoundTimeHorizon(instance, y);
      const Schedule resets = MapSchedule(bound.resets, to_root, root_.horizon);
      for (Day t = 1; t <= root_.horizon; ++t) report_.resets.AddAll(t, resets.at(t));
      // Chunks are short already; their renumbered windows may need a
      // fresh split.
      for (const SubInstance& chunk : bound.chunks) {
        Reduce(chunk.instance, chunk.y, ComposeMappings(to_root, chunk.mapping), false);
      }
      return;
    }
    report_.steps.push_back("nicify");
    SubInstance nice = Nicify(instance);
    Leaf(nice.instance, TransportToNice(y, nice), ComposeMappings(to_root, nice.mapping));
  }

  // `transported` is a feasible LP solution for the leaf, used when the
  // configuration LP would be too large to solve afresh.
  void Leaf(const CoverInstance& instance, const FractionalSetSolution& transported,
            const InstanceMapping& to_root) {
    LeafReport leaf;
    leaf.instance = instance;
    leaf.mapping = to_root;
    leaf.lp = ResolveLp(options_.lp, report_.algorithm, instance.n_items);
    LpSolution lp;
    if (leaf.lp == LpKind::kConfig && instance.n_items > kConfigLpMaxItems) {
      leaf.lp = LpKind::kTransported;
      lp.y = transported;
      lp.value = SetSolutionValue(lp.y, instance.oracle);
    } else {
      lp = SolveLp(instance, leaf.lp);
    }
    leaf.lp_value = lp.value;
    if (report_.algorithm == Algorithm::kSjrp) {
      const FractionalVectorSolution x = lp.x ? *lp.x : YToX(lp.y, instance.n_items);
      SjrpResult rounded = RoundSjrp(instance, x, {.alpha = options_.alpha});
      leaf.schedule = std::move(rounded.schedule);
      leaf.cost = rounded.cost;
      leaf.potential = rounded.initial_potential;
      leaf.alpha = rounded.alpha;
    } else {
      const FractionalPathSolution fps = FpsFromSets(lp.y, instance.oracle);
      IrpOptions irp;
      irp.seed = MixBits(options_.seed ^ MixBits(report_.leaves.size() + 1));
      irp.k_constant = options_.k_constant;
      IrpResult rounded = RoundIrp(instance, fps, irp);
      leaf.schedule = std::move(rounded.schedule);
      leaf.cost = rounded.cost;
      leaf.iterations = rounded.iterations;
      leaf.k_constant = rounded.k_constant;
      for (const IrpIterationTrace& step : rounded.trace) {
        leaf.edges += step.edges;
        leaf.redundant_edges += step.redundant_edges;
      }
    }
    report_.leaves.push_back(std::move(leaf));
  }

  const CoverInstance& root_;
  const SolveOptions& options_;
  SolveReport& report_;
};

Json StepsJson(const std::vector<std::string>& steps) {
  Json out = Json::array();
  for (const std::string& s : steps) out.push_back(s);
  return out;
}

}  // namespace

const char* AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kAuto:
      return "auto";
    case Algorithm::kSjrp:
      return "sjrp";
    case Algorithm::kIrp:
      return "irp";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kAuto, Algorithm::kSjrp, Algorithm::kIrp}) {
    if (name == AlgorithmName(a)) return a;
  }
  throw Error(ErrorCode::kUsage, "unknown algorithm '" + std::string(name) + "'");
}

const char* LpKindName(LpKind lp) {
  switch (lp) {
    case LpKind::kAuto:
      return "auto";
    case LpKind::kConfig:
      return "config";
    case LpKind::kLovasz:
      return "lovasz";
    case LpKind::kTransported:
      return "transported";
  }
  return "unknown";
}

LpKind ParseLpKind(std::string_view name) {
  for (LpKind lp : {LpKind::kAuto, LpKind::kConfig, LpKind::kLovasz}) {
    if (name == LpKindName(lp)) return lp;
  }
  throw Error(ErrorCode::kUsage, "unknown LP '" + std::string(name) + "'");
}

SolveReport SolveCover(const CoverInstance& instance, const SolveOptions& options) {
  instance.Validate();
  SolveReport report;
  const bool metric = instance.oracle.kind() == OracleKind::kMetricSteiner;
  report.algorithm = options.algorithm;
  if (report.algorithm == Algorithm::kAuto) {
    report.algorithm = metric ? Algorithm::kIrp : Algorithm::kSjrp;
  }
  if ((report.algorithm == Algorithm::kIrp) != metric) {
    throw Error(ErrorCode::kUsage, std::string(AlgorithmName(report.algorithm)) +
                                       " does not apply to a " +
                                       OracleKindName(instance.oracle.kind()) + " oracle");
  }
  report.lp = ResolveLp(options.lp, report.algorithm, instance.n_items);
  report.resets = Schedule(instance.horizon);

  const LpSolution lp = SolveLp(instance, report.lp);
  report.lp_value = lp.value;
  Solver solver(instance, options, report);
  solver.Reduce(instance, lp.y, InstanceMapping::Identity(instance.n_items, instance.horizon),
                true);

  std::vector<std::pair<Schedule, InstanceMapping>> parts;
  for (const LeafReport& leaf : report.leaves) parts.push_back({leaf.schedule, leaf.mapping});
  report.schedule = Recombine(parts, instance.horizon);
  for (Day t = 1; t <= instance.horizon; ++t) report.schedule.AddAll(t, report.resets.at(t));
  report.cost = ScheduleCost(instance, report.schedule);
  if (!CheckFeasible(instance, report.schedule).empty()) {
    throw Error(ErrorCode::kInternal, "recombined schedule misses a window");
  }
  return report;
}

Json SolveReportToJson(const SolveReport& report) {
  Json j;
  j["format"] = "covertime-solution";
  j["algorithm"] = AlgorithmName(report.algorithm);
  j["lp"] = LpKindName(report.lp);
  j["cost"] = RationalToJson(report.cost);
  j["lp_value"] = RationalToJson(report.lp_value);
  j["alg_over_lp"] = report.lp_value > 0 ? ToDouble(report.cost / report.lp_value) : 1.0;
  j["schedule"] = ScheduleToJson(report.schedule);
  j["steps"] = StepsJson(report.steps);
  j["resets"] = ScheduleToJson(report.resets);
  Json leaves = Json::array();
  for (const LeafReport& leaf : report.leaves) {
    Json l;
    l["n_items"] = leaf.instance.n_items;
    l["horizon"] = leaf.instance.horizon;
    l["lp"] = LpKindName(leaf.lp);
    l["lp_value"] = RationalToJson(leaf.lp_value);
    l["cost"] = RationalToJson(leaf.cost);
    if (report.algorithm == Algorithm::kSjrp) {
      const int k = LogLogHorizon(leaf.instance.horizon);
      l["potential"] = RationalToJson(leaf.potential);
      l["alpha"] = RationalToJson(leaf.alpha);
      l["cost_bound"] = RationalToJson((32 * k + 1) * leaf.potential);
    } else {
      l["iterations"] = leaf.iterations;
      l["k_constant"] = leaf.k_constant;
      l["edges"] = leaf.edges;
      l["redundant_edges"] = leaf.redundant_edges;
    }
    l["mapping"] = MappingToJson(leaf.mapping);
    l["schedule"] = ScheduleToJson(leaf.schedule);
    leaves.push_back(l);
  }
  j["leaves"] = leaves;
  return j;
}

VerifyReport VerifySolution(const CoverInstance& instance, const Json& solution) {
  if (!solution.is_object() || solution.value("format", "") != "covertime-solution") {
    throw Error(ErrorCode::kUsage, "not a covertime solution");
  }
  const Schedule schedule = ScheduleFromJson(solution.at("schedule"));
  if (schedule.horizon() != instance.horizon) {
    throw Error(ErrorCode::kUsage, "solution horizon " + std::to_string(schedule.horizon()) +
                                       " does not match instance horizon " +
                                       std::to_string(instance.horizon));
  }
  VerifyReport report;
  for (Day t = 1; t <= schedule.horizon(); ++t) {
    for (ItemId v : schedule.at(t)) {
      if (v < 0 || v >= instance.n_items) {
        throw Error(ErrorCode::kUsage, "solution orders item " + std::to_string(v) +
                                           " which the instance does not have");
      }
    }
  }
  for (const DemandWindow& w : CheckFeasible(instance, schedule)) {
    report.violations.push_back("window [" + std::to_string(w.start) + "," +
                                std::to_string(w.end) + "] of item " + std::to_string(w.item) +
                                " is not served");
  }
  report.recomputed_cost = ScheduleCost(instance, schedule);
  if (!solution.contains("cost")) {
    report.violations.push_back("cost is missing");
  } else {
    const Rational stated = RationalFromJson(solution.at("cost"));
    if (stated != report.recomputed_cost) {
      report.violations.push_back("stated cost " + FormatRational(stated) +
                                  " differs from recomputed cost " +
                                  FormatRational(report.recomputed_cost));
    }
  }
  if (solution.contains("leaves")) {
    std::vector<std::pair<Schedule, InstanceMapping>> parts;
    for (const Json& leaf : solution.at("leaves")) {
      parts.push_back({ScheduleFromJson(leaf.at("schedule")), MappingFromJson(leaf.at("mapping"))});
    }
    Schedule united = Recombine(parts, instance.horizon);
    if (solution.contains("resets")) {
      const Schedule resets = ScheduleFromJson(solution.at("resets"));
      if (resets.horizon() != instance.horizon) {
        report.violations.push_back("resets have the wrong horizon");
      } else {
        for (Day t = 1; t <= instance.horizon; ++t) united.AddAll(t, resets.at(t));
      }
    }
    for (Day t = 1; t <= instance.horizon; ++t) {
      if (united.at(t) != schedule.at(t)) {
        report.violations.push_back("day " + std::to_string(t) +
                                    " differs from the union of the leaf schedules");
      }
    }
  }
  return report;
}

Json VerifyReportToJson(const VerifyReport& report) {
  Json j;
  j["ok"] = report.ok();
  j["cost"] = RationalToJson(report.recomputed_cost);
  Json violations = Json::array();
  for (const std::string& v : report.violations) violations.push_back(v);
  j["violations"] = violations;
  return j;
}

}  // namespace covertime
