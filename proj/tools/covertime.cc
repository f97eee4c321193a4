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

// Command-line driver: gen, solve, verify and bench. Documents are JSON;
// "-" (the default) reads stdin or writes stdout, so commands pipe:
//
//   covertime gen --kind sjrp-modular --n 4 --T 16 --seed 7 |
//     covertime solve | tee solution.json
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error,
// 3 an instance exceeds a capacity limit.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "covertime/bench.h"
#include "covertime/errors.h"
#include "covertime/generator.h"
#include "covertime/json_io.h"
#include "covertime/pipeline.h"

namespace covertime {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::string ReadAll(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kUsage, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteAll(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kUsage, "cannot write '" + path + "'");
  out << text;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCapacity:
      return kExitCapacity;
    case ErrorCode::kUsage:
    case ErrorCode::kMalformedInput:
    case ErrorCode::kInfeasibleInput:
    case ErrorCode::kUnsupportedOracle:
      return kExitUsage;
    case ErrorCode::kNontermination:
    case ErrorCode::kInternal:
      return kExitFailed;
  }
  return kExitFailed;
}

int Main(int argc, char** argv) {
  CLI::App app{"Approximation algorithms for covering demand windows over time"};
  app.require_subcommand(1);

  GeneratorOptions gen;
  std::string gen_kind = "sjrp-modular";
  std::string gen_style = "left-aligned";
  std::string gen_out = "-";
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a seeded random instance");
  gen_cmd->add_option("--kind", gen_kind,
                      "irp, sjrp-modular, sjrp-cardinality, sjrp-coverage or sjrp-laminar")
      ->capture_default_str();
  gen_cmd->add_option("--n", gen.n_items, "Number of items")->capture_default_str();
  gen_cmd->add_option("--T", gen.horizon, "Time horizon")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--window-style", gen_style, "left-aligned or arbitrary")
      ->capture_default_str();
  gen_cmd->add_option("--windows-per-item", gen.windows_per_item)->capture_default_str();
  gen_cmd->add_option("-o,--output", gen_out, "Output file")->capture_default_str();

  std::string solve_in = "-";
  std::string solve_out = "-";
  std::string solve_algorithm = "auto";
  std::string solve_lp = "auto";
  std::string solve_alpha;
  SolveOptions solve;
  int k_constant = 0;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("instance", solve_in, "Instance file")->capture_default_str();
  solve_cmd->add_option("--algorithm", solve_algorithm, "sjrp, irp or auto")
      ->capture_default_str();
  solve_cmd->add_option("--seed", solve.seed, "Seed for the randomized rounding")
      ->capture_default_str();
  CLI::Option* k_option =
      solve_cmd->add_option("--k-constant", k_constant, "Sampling constant K for irp");
  solve_cmd->add_option("--alpha", solve_alpha, "Supported-set parameter for sjrp, e.g. 1/2");
  solve_cmd->add_option("--lp", solve_lp, "config, lovasz or auto")->capture_default_str();
  solve_cmd->add_option("-o,--output", solve_out, "Output file")->capture_default_str();

  std::string verify_instance;
  std::string verify_solution = "-";
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a solution against an instance");
  verify_cmd->add_option("instance", verify_instance, "Instance file")->required();
  verify_cmd->add_option("solution", verify_solution, "Solution file")->capture_default_str();

  std::string bench_suite;
  std::string bench_format = "json";
  std::string bench_out = "-";
  int bench_threads = 0;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
  bench_cmd->add_option("--suite", bench_suite, "Suite file; the default suite if absent");
  bench_cmd->add_option("--format", bench_format, "json or csv")->capture_default_str();
  bench_cmd->add_option("--threads", bench_threads, "Worker threads, 0 for all cores");
  bench_cmd->add_option("-o,--output", bench_out, "Output file")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) {
      gen.kind = ParseInstanceKind(gen_kind);
      gen.style = ParseWindowStyle(gen_style);
      WriteAll(gen_out, Dump(InstanceToJson(GenerateInstance(gen))));
      return kExitOk;
    }
    if (*solve_cmd) {
      const CoverInstance instance = InstanceFromJson(ParseJson(ReadAll(solve_in)));
      solve.algorithm = ParseAlgorithm(solve_algorithm);
      solve.lp = ParseLpKind(solve_lp);
      if (*k_option) solve.k_constant = k_constant;
      if (!solve_alpha.empty()) solve.alpha = ParseRational(solve_alpha);
      WriteAll(solve_out, Dump(SolveReportToJson(SolveCover(instance, solve))));
      return kExitOk;
    }
    if (*verify_cmd) {
      if (verify_instance == "-" && verify_solution == "-") {
        throw Error(ErrorCode::kUsage, "instance and solution cannot both come from stdin");
      }
      const CoverInstance instance = InstanceFromJson(ParseJson(ReadAll(verify_instance)));
      const VerifyReport report = VerifySolution(instance, ParseJson(ReadAll(verify_solution)));
      std::cout << Dump(VerifyReportToJson(report));
      return report.ok() ? kExitOk : kExitFailed;
    }
    if (*bench_cmd) {
      BenchSuite suite = bench_suite.empty() ? DefaultBenchSuite()
                                             : BenchSuiteFromJson(ParseJson(ReadAll(bench_suite)));
      suite.threads = bench_threads;
      const std::vector<BenchRow> rows = RunBench(suite);
      if (bench_format == "csv") {
        WriteAll(bench_out, BenchRowsToCsv(rows));
      } else if (bench_format == "json") {
        WriteAll(bench_out, Dump(BenchRowsToJson(rows)));
      } else {
        throw Error(ErrorCode::kUsage, "unknown format '" + bench_format + "'");
      }
      for (const BenchRow& row : rows) {
        if (row.failures > 0) return kExitFailed;
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "covertime: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "covertime: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace covertime

int main(int argc, char** argv) { return covertime::Main(argc, argv); }
