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

#include "covertime/rational.h"

#include <cctype>
#include <cmath>
#include <string>

#include "covertime/errors.h"

namespace covertime {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput:
      return "malformed-input";
    case ErrorCode::kInfeasibleInput:
      return "infeasible-input";
    case ErrorCode::kCapacity:
      return "capacity";
    case ErrorCode::kUnsupportedOracle:
      return "unsupported-oracle";
    case ErrorCode::kNontermination:
      return "nontermination";
    case ErrorCode::kUsage:
      return "usage";
    case ErrorCode::kInternal:
      return "internal";
  }
  return "unknown";
}

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void BadNumber(std::string_view text) {
  throw Error(ErrorCode::kMalformedInput,
              "not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = body.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) BadNumber(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) BadNumber(text);
    result = Rational(mpz_class(std::string(num), 10), d);
  } else {
    const auto dot = body.find('.');
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos
                                     ? std::string_view()
                                     : body.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) BadNumber(text);
    if (!int_part.empty() && !AllDigits(int_part)) BadNumber(text);
    if (dot != std::string_view::npos && !AllDigits(frac_part)) BadNumber(text);
    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    result = Rational(mpz_class(digits, 10), scale);
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string FormatRational(const Rational& q) {
  mpz_class den = q.get_den();
  int twos = 0;
  int fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return q.get_str();
  const int places = std::max(twos, fives);
  if (places == 0) return q.get_num().get_str();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  const mpz_class scaled = q.get_num() * scale / q.get_den();
  mpz_class magnitude = abs(scaled);
  std::string digits = magnitude.get_str();
  if (digits.size() <= static_cast<size_t>(places)) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - places, ".");
  return (scaled < 0 ? "-" : "") + digits;
}

double ToDouble(const Rational& q) { return q.get_d(); }

Rational RationalFromDouble(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kMalformedInput, "non-finite value");
  }
  return Rational(value);
}

Rational RoundToGrid(double value, long denominator) {
  const double scaled = std::nearbyint(value * static_cast<double>(denominator));
  Rational q(mpz_class(RationalFromDouble(scaled).get_num()), mpz_class(denominator));
  q.canonicalize();
  return q;
}

}  // namespace covertime
