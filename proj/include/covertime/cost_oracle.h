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

#ifndef COVERTIME_COST_ORACLE_H_
#define COVERTIME_COST_ORACLE_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "covertime/item_set.h"
#include "covertime/rational.h"

namespace covertime {

enum class OracleKind {
  kModular,
  kCardinality,
  kCoverage,
  kLaminar,
  kMetricSteiner,
};

const char* OracleKindName(OracleKind kind);
OracleKind ParseOracleKind(std::string_view name);

using DistanceMatrix = std::vector<std::vector<Rational>>;

// Parameters of an unrestricted oracle. Only the fields of the active kind
// are populated.
struct OracleParams {
  // kModular: f(S) = base + sum of weights, for nonempty S.
  Rational base;
  std::vector<Rational> weights;
  // kCardinality: f(S) = g[|S|].
  std::vector<Rational> g;
  // kCoverage and kLaminar: f(S) = total weight of the sets (elements) hit
  // by S. `covers[v]` lists the elements item v hits. For kLaminar the
  // element families are derived from `laminar_sets`.
  std::vector<Rational> element_weights;
  std::vector<std::vector<int>> covers;
  std::vector<ItemSet> laminar_sets;
  // kMetricSteiner: points 0..N, one of which is the root. Item i lives at
  // point i when i < root and at point i + 1 otherwise.
  DistanceMatrix distances;
  int root = 0;
};

// A subadditive set function with f(empty) = 0. Every kind except
// kMetricSteiner is monotone and submodular; the terminal MST is not
// monotone, since an extra point can act as a Steiner point. Instances are cheap
// to copy: the parameters are shared and immutable.
//
// An oracle may be restricted through an item map, in which case item i of
// the restricted oracle stands for item item_map[i] of the base oracle and
// f(S) = f_base(image of S). Several items may map to the same base item;
// this is how copies of one item are represented.
class CostOracle {
 public:
  // Marks the root in NodeDistance.
  static constexpr int kRootNode = -1;

  CostOracle();

  static CostOracle Modular(Rational base, std::vector<Rational> weights);
  static CostOracle Cardinality(int n_items, std::vector<Rational> g);
  static CostOracle Coverage(int n_items, std::vector<Rational> element_weights,
                             std::vector<std::vector<int>> covers);
  static CostOracle Laminar(int n_items, std::vector<ItemSet> sets,
                            std::vector<Rational> weights);
  static CostOracle MetricSteiner(DistanceMatrix distances, int root);

  OracleKind kind() const { return data_->kind; }
  int n_items() const;
  bool is_submodular() const { return kind() != OracleKind::kMetricSteiner; }
  bool is_restricted() const { return !item_map_.empty() || restricted_; }

  // Parameters of the base oracle, for serialization.
  const OracleParams& params() const { return data_->params; }
  int base_n_items() const { return data_->n_items; }

  // Throws Error(kMalformedInput) if some item is out of range.
  Rational Evaluate(const ItemSet& s) const;
  Rational Singleton(ItemId v) const { return Evaluate(ItemSet{v}); }

  CostOracle Restrict(const std::vector<ItemId>& item_map) const;

  // Maps an item of this oracle to the base oracle's item.
  ItemId BaseItem(ItemId v) const { return item_map_.empty() ? v : item_map_[v]; }

  // Shortest-path distance between two items (or kRootNode) in the metric
  // closure. Only valid for kMetricSteiner.
  const Rational& NodeDistance(int a, int b) const;

 private:
  struct Data {
    OracleKind kind = OracleKind::kModular;
    int n_items = 0;
    OracleParams params;
    DistanceMatrix closure;
  };

  explicit CostOracle(std::shared_ptr<const Data> data);
  Rational EvaluateBase(const ItemSet& base_items) const;
  int PointOf(int node) const;

  std::shared_ptr<const Data> data_;
  std::vector<ItemId> item_map_;
  // True for a restriction to zero items, where item_map_ is empty too.
  bool restricted_ = false;
};

// Cost of a minimum spanning tree over `points` plus `root` in the given
// distance matrix. Validates the matrix first.
Rational TerminalMstCost(const DistanceMatrix& distances, int root,
                         const std::vector<int>& points);

// Throws Error(kMalformedInput) unless `distances` is square, symmetric,
// nonnegative, with zero diagonal.
void ValidateDistanceMatrix(const DistanceMatrix& distances);

}  // namespace covertime

#endif  // COVERTIME_COST_ORACLE_H_
