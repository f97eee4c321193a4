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

#include "covertime/intervals.h"

#include <bit>
#include <cstdint>
#include <limits>

#include "covertime/errors.h"

namespace covertime {
namespace {

void CheckInterval(const Interval& iv) {
  if (iv.start < 1 || iv.end < iv.start) {
    throw Error(ErrorCode::kMalformedInput, "invalid interval");
  }
}

// 2-adic valuation of a positive integer.
int TwoAdic(int64_t x) { return std::countr_zero(static_cast<uint64_t>(x)); }

}  // namespace

Interval MinimalDyadic(const Interval& iv) {
  CheckInterval(iv);
  const int level = IntervalLevel(iv);
  const int64_t k = static_cast<int64_t>(iv.start - 1) >> level;
  return Interval{static_cast<Day>((k << level) + 1), static_cast<Day>((k + 1) << level)};
}

int IntervalLevel(const Interval& iv) {
  CheckInterval(iv);
  const uint64_t a = static_cast<uint64_t>(iv.start - 1);
  const uint64_t b = static_cast<uint64_t>(iv.end - 1);
  // Blocks of size 2^i agree on both endpoints exactly when a and b share
  // every bit from position i upward.
  return a == b ? 0 : std::bit_width(a ^ b);
}

bool IsLeftAligned(const Interval& iv) {
  CheckInterval(iv);
  if (iv.start == 1) return true;
  const int64_t s0 = iv.start - 1;
  return iv.end <= s0 + (int64_t{1} << TwoAdic(s0));
}

bool IsRightAligned(const Interval& iv) {
  CheckInterval(iv);
  const int64_t t = iv.end;
  return t - (int64_t{1} << TwoAdic(t)) + 1 <= iv.start;
}

const char* AlignmentName(Alignment a) {
  switch (a) {
    case Alignment::kLeft:
      return "left";
    case Alignment::kRight:
      return "right";
    case Alignment::kLaminar:
      return "laminar";
    case Alignment::kNeither:
      return "neither";
    case Alignment::kBothTrivially:
      return "both-trivially";
  }
  return "unknown";
}

Alignment AlignedKind(const std::vector<Interval>& family) {
  if (family.empty()) return Alignment::kBothTrivially;
  bool left = true;
  bool right = true;
  for (const Interval& iv : family) {
    left = left && IsLeftAligned(iv);
    right = right && IsRightAligned(iv);
  }
  if (left && right) return Alignment::kLaminar;
  if (left) return Alignment::kLeft;
  if (right) return Alignment::kRight;
  return Alignment::kNeither;
}

bool FamilyIsLeftAligned(const std::vector<Interval>& family) {
  const Alignment a = AlignedKind(family);
  return a == Alignment::kLeft || a == Alignment::kLaminar ||
         a == Alignment::kBothTrivially;
}

SplitParts SplitLr(const Interval& iv) {
  CheckInterval(iv);
  // The largest power of two with a multiple in [s, t] is the highest bit
  // on which s - 1 and t differ.
  const uint64_t a = static_cast<uint64_t>(iv.start - 1);
  const uint64_t b = static_cast<uint64_t>(iv.end);
  const int i = std::bit_width(a ^ b) - 1;
  const Day p = static_cast<Day>((b >> i) << i);
  SplitParts parts;
  parts.right = Interval{iv.start, p};
  if (p < iv.end) parts.left = Interval{p + 1, iv.end};
  return parts;
}

Day NextPowerOfTwo(Day t) {
  if (t < 1) throw Error(ErrorCode::kMalformedInput, "horizon must be positive");
  return static_cast<Day>(std::bit_ceil(static_cast<uint32_t>(t)));
}

Day NextTower(Day t) {
  if (t < 1) throw Error(ErrorCode::kMalformedInput, "horizon must be positive");
  int64_t tower = 2;
  while (tower < t) {
    tower *= tower;
    if (tower > std::numeric_limits<Day>::max()) {
      throw Error(ErrorCode::kCapacity, "horizon too large for a tower");
    }
  }
  return static_cast<Day>(tower);
}

bool IsTower(Day t) { return t >= 2 && NextTower(t) == t; }

int Log2Exact(Day t) {
  if (t < 1 || !std::has_single_bit(static_cast<uint32_t>(t))) {
    throw Error(ErrorCode::kInternal, "not a power of two");
  }
  return std::countr_zero(static_cast<uint32_t>(t));
}

int LogLogHorizon(Day tower) {
  if (!IsTower(tower)) throw Error(ErrorCode::kInternal, "horizon is not a tower");
  const int log_t = Log2Exact(tower);
  return log_t <= 2 ? 1 : Log2Exact(log_t);
}

}  // namespace covertime
