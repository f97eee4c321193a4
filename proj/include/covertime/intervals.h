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

// Dyadic intervals [k*2^i + 1, (k+1)*2^i] over 1-based days, the alignment
// classes built on them, and horizon arithmetic for nice instances.

#ifndef COVERTIME_INTERVALS_H_
#define COVERTIME_INTERVALS_H_

#include <optional>
#include <vector>

#include "covertime/item_set.h"

namespace covertime {

struct Interval {
  Day start = 1;
  Day end = 1;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// The smallest dyadic interval containing `iv`.
Interval MinimalDyadic(const Interval& iv);

// The exponent i of MinimalDyadic(iv).
int IntervalLevel(const Interval& iv);

// Some dyadic interval starts at iv.start and reaches iv.end.
bool IsLeftAligned(const Interval& iv);
// Some dyadic interval ends at iv.end and reaches back to iv.start.
bool IsRightAligned(const Interval& iv);

enum class Alignment {
  kLeft,
  kRight,
  // Both left and right aligned.
  kLaminar,
  kNeither,
  // The empty family.
  kBothTrivially,
};

const char* AlignmentName(Alignment a);

Alignment AlignedKind(const std::vector<Interval>& family);

// True when AlignedKind is kLeft, kLaminar or kBothTrivially.
bool FamilyIsLeftAligned(const std::vector<Interval>& family);

struct SplitParts {
  // The right-aligned part [s, p]. Never empty for a valid interval.
  std::optional<Interval> right;
  // The left-aligned part [p + 1, t]; empty when p == t.
  std::optional<Interval> left;
};

// Cuts iv at p, the multiple of the largest power of two inside iv.
SplitParts SplitLr(const Interval& iv);

// Smallest power of two >= t (t >= 1).
Day NextPowerOfTwo(Day t);

// Smallest 2^(2^k) >= t, k >= 0. Horizons of 1 round up to 2.
Day NextTower(Day t);

bool IsTower(Day t);

// log2 of a power of two.
int Log2Exact(Day t);

// log log T for a tower horizon, with T <= 4 treated as 1 so that the
// rounding thresholds stay defined.
int LogLogHorizon(Day tower);

}  // namespace covertime

#endif  // COVERTIME_INTERVALS_H_
