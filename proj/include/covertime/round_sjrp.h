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

// Rounding of a Lovasz-program solution into a schedule for submodular
// cover over time on nice instances. Each pass buys, on every day, either a
// level set whose cost is paid for by the drop of f^ under truncation, or
// the top level set; then mass is merged into earlier days along the
// dyadic hierarchy.

#ifndef COVERTIME_ROUND_SJRP_H_
#define COVERTIME_ROUND_SJRP_H_

#include <optional>
#include <vector>

#include "covertime/instance.h"
#include "covertime/lovasz.h"

namespace covertime {

// For every t in {k 2^i}: x^{t+1} += x^{t+2^{i-1}+1} and the latter is
// zeroed; entries are then capped at one. Throws Error(kMalformedInput)
// unless 2^i divides the horizon and i >= 1.
void MergeStep(FractionalVectorSolution& x, int i);

struct SjrpOptions {
  // The supported-set parameter is alpha / 32. Defaults to 1 / log log T.
  std::optional<Rational> alpha;
  // Verify the cost bound and the potential after every merge.
  bool check_invariants = true;
};

struct SjrpExtraction {
  int pass = 0;
  Day day = 0;
  // Absent for a top level set bought because nothing was supported.
  std::optional<Rational> theta;
  Rational set_cost;
  Rational lovasz_drop;
};

struct SjrpResult {
  Schedule schedule;
  Rational cost;
  // Sum over days of f^(x^t) for the input, after zeroing outside windows.
  Rational initial_potential;
  // Proven upper bound on cost for the alpha in use:
  // (32 / alpha + (log T + 1) 2^(-1/alpha)) times the initial potential.
  Rational cost_bound;
  Rational alpha;
  std::vector<Rational> potential_after_pass;
  std::vector<SjrpExtraction> trace;
};

// Runs log T merge passes plus one final selection pass, needed for items
// whose window is the whole horizon. Throws Error(kMalformedInput) if the
// instance is not nice, Error(kUnsupportedOracle) for non-submodular
// oracles, Error(kInfeasibleInput) if x does not cover every window, and
// Error(kInternal) if the cost bound or the potential check fails.
SjrpResult RoundSjrp(const CoverInstance& instance, const FractionalVectorSolution& x,
                     const SjrpOptions& options = {});

}  // namespace covertime

#endif  // COVERTIME_ROUND_SJRP_H_
