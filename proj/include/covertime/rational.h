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

#ifndef COVERTIME_RATIONAL_H_
#define COVERTIME_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace covertime {

// Exact arithmetic is the default everywhere costs, weights and LP values are
// compared. Never bind mpq expressions to `auto`: the expression templates
// hold references to temporaries.
using Rational = mpq_class;

// Parses "12", "-0.125", "3/8" or "1e-3"-free decimal strings exactly.
// Throws Error(kMalformedInput) on anything else.
Rational ParseRational(std::string_view text);

// Terminating decimals are printed as decimals ("0.125"), everything else as
// a reduced fraction ("1/3"). ParseRational(FormatRational(q)) == q.
std::string FormatRational(const Rational& q);

double ToDouble(const Rational& q);

// Exact: every finite double is a dyadic rational.
Rational RationalFromDouble(double value);

// Rounds `value` to the nearest multiple of 1/denominator.
Rational RoundToGrid(double value, long denominator);

inline Rational Min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational Max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace covertime

#endif  // COVERTIME_RATIONAL_H_
