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

#include "covertime/json_io.h"

#include "covertime/errors.h"

namespace covertime {
namespace {

[[noreturn]] void Malformed(const std::string& message) {
  throw Error(ErrorCode::kMalformedInput, message);
}

const Json& Field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) Malformed(std::string("missing field '") + name + "'");
  return j.at(name);
}

int IntField(const Json& j, const char* name) {
  const Json& value = Field(j, name);
  if (!value.is_number_integer()) Malformed(std::string("field '") + name + "' must be an integer");
  return value.get<int>();
}

Json RationalArray(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& q : values) out.push_back(RationalToJson(q));
  return out;
}

std::vector<Rational> RationalArrayFromJson(const Json& j) {
  if (!j.is_array()) Malformed("expected an array of rationals");
  std::vector<Rational> out;
  for (const Json& q : j) out.push_back(RationalFromJson(q));
  return out;
}

std::vector<int> IntArrayFromJson(const Json& j) {
  if (!j.is_array()) Malformed("expected an array of integers");
  std::vector<int> out;
  for (const Json& v : j) {
    if (!v.is_number_integer()) Malformed("expected an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Json RationalToJson(const Rational& q) { return FormatRational(q); }

Rational RationalFromJson(const Json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  Malformed("rationals must be strings or integers");
}

Json OracleToJson(const CostOracle& oracle) {
  if (oracle.is_restricted()) {
    throw Error(ErrorCode::kInternal, "restricted oracles are not serializable");
  }
  const OracleParams& p = oracle.params();
  Json j;
  j["kind"] = OracleKindName(oracle.kind());
  j["n_items"] = oracle.base_n_items();
  switch (oracle.kind()) {
    case OracleKind::kModular:
      j["base"] = RationalToJson(p.base);
      j["weights"] = RationalArray(p.weights);
      break;
    case OracleKind::kCardinality:
      j["g"] = RationalArray(p.g);
      break;
    case OracleKind::kCoverage:
      j["element_weights"] = RationalArray(p.element_weights);
      j["covers"] = p.covers;
      break;
    case OracleKind::kLaminar: {
      Json sets = Json::array();
      for (const ItemSet& s : p.laminar_sets) sets.push_back(s);
      j["sets"] = sets;
      j["weights"] = RationalArray(p.element_weights);
      break;
    }
    case OracleKind::kMetricSteiner: {
      Json rows = Json::array();
      for (const auto& row : p.distances) rows.push_back(RationalArray(row));
      j["root"] = p.root;
      j["distances"] = rows;
      break;
    }
  }
  return j;
}

CostOracle OracleFromJson(const Json& j) {
  const OracleKind kind = ParseOracleKind(Field(j, "kind").get<std::string>());
  const int n = IntField(j, "n_items");
  CostOracle oracle;
  switch (kind) {
    case OracleKind::kModular:
      oracle = CostOracle::Modular(RationalFromJson(Field(j, "base")),
                                   RationalArrayFromJson(Field(j, "weights")));
      break;
    case OracleKind::kCardinality:
      oracle = CostOracle::Cardinality(n, RationalArrayFromJson(Field(j, "g")));
      break;
    case OracleKind::kCoverage: {
      std::vector<std::vector<int>> covers;
      for (const Json& list : Field(j, "covers")) covers.push_back(IntArrayFromJson(list));
      oracle = CostOracle::Coverage(n, RationalArrayFromJson(Field(j, "element_weights")),
                                    std::move(covers));
      break;
    }
    case OracleKind::kLaminar: {
      std::vector<ItemSet> sets;
      for (const Json& s : Field(j, "sets")) sets.push_back(IntArrayFromJson(s));
      oracle = CostOracle::Laminar(n, std::move(sets), RationalArrayFromJson(Field(j, "weights")));
      break;
    }
    case OracleKind::kMetricSteiner: {
      DistanceMatrix d;
      for (const Json& row : Field(j, "distances")) d.push_back(RationalArrayFromJson(row));
      oracle = CostOracle::MetricSteiner(std::move(d), IntField(j, "root"));
      break;
    }
  }
  if (oracle.n_items() != n) Malformed("oracle item count does not match its parameters");
  return oracle;
}

Json InstanceToJson(const CoverInstance& instance) {
  Json j;
  j["format"] = "covertime-instance";
  j["n_items"] = instance.n_items;
  j["horizon"] = instance.horizon;
  j["nice"] = instance.nice;
  j["oracle"] = OracleToJson(instance.oracle);
  Json windows = Json::array();
  for (const DemandWindow& w : instance.windows) windows.push_back({w.item, w.start, w.end});
  j["windows"] = windows;
  return j;
}

CoverInstance InstanceFromJson(const Json& j) {
  if (!j.is_object() || j.value("format", "") != "covertime-instance") {
    Malformed("not a covertime instance");
  }
  CoverInstance instance;
  instance.n_items = IntField(j, "n_items");
  instance.horizon = IntField(j, "horizon");
  instance.nice = j.value("nice", false);
  instance.oracle = OracleFromJson(Field(j, "oracle"));
  const Json& windows = Field(j, "windows");
  if (!windows.is_array()) Malformed("windows must be an array");
  for (const Json& w : windows) {
    const std::vector<int> triple = IntArrayFromJson(w);
    if (triple.size() != 3) Malformed("a window is [item, start, end]");
    instance.windows.push_back({triple[0], triple[1], triple[2]});
  }
  instance.Validate();
  return instance;
}

Json ScheduleToJson(const Schedule& schedule) {
  Json out = Json::array();
  for (Day t = 1; t <= schedule.horizon(); ++t) out.push_back(schedule.at(t));
  return out;
}

Schedule ScheduleFromJson(const Json& j) {
  if (!j.is_array()) Malformed("a schedule is an array of item lists");
  Schedule schedule(static_cast<Day>(j.size()));
  for (Day t = 1; t <= schedule.horizon(); ++t) {
    schedule.AddAll(t, MakeItemSet(IntArrayFromJson(j[t - 1])));
  }
  return schedule;
}

Json MappingToJson(const InstanceMapping& mapping) {
  Json j;
  j["item_map"] = mapping.item_map;
  j["day_map"] = mapping.day_map;
  return j;
}

InstanceMapping MappingFromJson(const Json& j) {
  InstanceMapping mapping;
  mapping.item_map = IntArrayFromJson(Field(j, "item_map"));
  mapping.day_map = IntArrayFromJson(Field(j, "day_map"));
  return mapping;
}

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    Malformed(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace covertime
