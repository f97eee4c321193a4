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

#ifndef COVERTIME_LOVASZ_SOLVER_H_
#define COVERTIME_LOVASZ_SOLVER_H_

#include "covertime/instance.h"
#include "covertime/lovasz.h"

namespace covertime {

struct LovaszSolverOptions {
  // Stop once (upper - lower) <= relative_gap * max(1, upper).
  double relative_gap = 1e-9;
  int max_rounds = 5000;
};

struct LovaszSolverResult {
  // Feasible for the Lovasz program; entries are multiples of 2^-32 before
  // the exact window normalization.
  FractionalVectorSolution x;
  // Exact objective of x.
  Rational objective;
  // Certified lower bound on the optimum (cutting-plane model value).
  double lower_bound = 0;
  int rounds = 0;
  int cuts = 0;
};

// Minimizes sum_t f^(x^t) subject to every window receiving total mass one,
// by Kelley's cutting-plane method: f^ is the maximum of g.x over base
// polytope vertices g, and each round adds, for every day whose model
// underestimates f^, the greedy vertex at the current point. The master LP
// is solved through its dual, to which cuts are columns, so every round
// warm-starts the simplex.
//
// Needs a submodular oracle; throws Error(kUnsupportedOracle) otherwise.
LovaszSolverResult SolveLovasz(const CoverInstance& instance,
                               const LovaszSolverOptions& options = {});

}  // namespace covertime

#endif  // COVERTIME_LOVASZ_SOLVER_H_
