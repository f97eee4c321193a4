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

// JSON encodings of instances and solutions. Rationals are written as
// strings ("3/8", "0.125") so they round-trip exactly, and fields are
// emitted in a fixed order so equal objects serialize to identical bytes.

#ifndef COVERTIME_JSON_IO_H_
#define COVERTIME_JSON_IO_H_

#include <string>
#include <vector>

#include "covertime/instance.h"
#include "covertime/reduce.h"
#include "json.hpp"

namespace covertime {

using Json = nlohmann::ordered_json;

Json RationalToJson(const Rational& q);
// Accepts strings and integers. Throws Error(kMalformedInput) otherwise.
Rational RationalFromJson(const Json& j);

// Only unrestricted oracles can be written.
Json OracleToJson(const CostOracle& oracle);
CostOracle OracleFromJson(const Json& j);

Json InstanceToJson(const CoverInstance& instance);
// Validates the result. Throws Error(kMalformedInput) on bad input.
CoverInstance InstanceFromJson(const Json& j);

// A schedule is an array with one sorted item list per day.
Json ScheduleToJson(const Schedule& schedule);
Schedule ScheduleFromJson(const Json& j);

Json MappingToJson(const InstanceMapping& mapping);
InstanceMapping MappingFromJson(const Json& j);

// Parses text, turning parse failures into Error(kMalformedInput).
Json ParseJson(const std::string& text);

}  // namespace covertime

#endif  // COVERTIME_JSON_IO_H_
