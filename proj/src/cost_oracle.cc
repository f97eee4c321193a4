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

#include "covertime/cost_oracle.h"

#include <string>
#include <utility>

#include "covertime/errors.h"

namespace covertime {
namespace {

[[noreturn]] void Malformed(const std::string& message) {
  throw Error(ErrorCode::kMalformedInput, message);
}

void RequireNonnegative(const Rational& q, const char* what) {
  if (q < 0) Malformed(std::string(what) + " must be nonnegative");
}

// Prim's algorithm on a dense matrix; `nodes` are matrix indices.
Rational MstOverPoints(const DistanceMatrix& d, const std::vector<int>& nodes) {
  const size_t k = nodes.size();
  if (k <= 1) return Rational(0);
  std::vector<bool> in_tree(k, false);
  std::vector<Rational> best(k);
  std::vector<bool> has_best(k, false);
  Rational total = 0;
  in_tree[0] = true;
  for (size_t j = 1; j < k; ++j) {
    best[j] = d[nodes[0]][nodes[j]];
    has_best[j] = true;
  }
  for (size_t step = 1; step < k; ++step) {
    size_t pick = k;
    for (size_t j = 0; j < k; ++j) {
      if (in_tree[j]) continue;
      if (pick == k || best[j] < best[pick]) pick = j;
    }
    in_tree[pick] = true;
    total += best[pick];
    for (size_t j = 0; j < k; ++j) {
      if (in_tree[j]) continue;
      const Rational& cand = d[nodes[pick]][nodes[j]];
      if (cand < best[j]) best[j] = cand;
    }
  }
  return total;
}

}  // namespace

const char* OracleKindName(OracleKind kind) {
  switch (kind) {
    case OracleKind::kModular:
      return "modular";
    case OracleKind::kCardinality:
      return "cardinality";
    case OracleKind::kCoverage:
      return "coverage";
    case OracleKind::kLaminar:
      return "laminar";
    case OracleKind::kMetricSteiner:
      return "metric-steiner";
  }
  return "unknown";
}

OracleKind ParseOracleKind(std::string_view name) {
  for (OracleKind kind :
       {OracleKind::kModular, OracleKind::kCardinality, OracleKind::kCoverage,
        OracleKind::kLaminar, OracleKind::kMetricSteiner}) {
    if (name == OracleKindName(kind)) return kind;
  }
  Malformed("unknown oracle kind '" + std::string(name) + "'");
}

void ValidateDistanceMatrix(const DistanceMatrix& distances) {
  const size_t n = distances.size();
  for (size_t i = 0; i < n; ++i) {
    if (distances[i].size() != n) Malformed("distance matrix is not square");
  }
  for (size_t i = 0; i < n; ++i) {
    if (distances[i][i] != 0) Malformed("distance matrix has nonzero diagonal");
    for (size_t j = 0; j < n; ++j) {
      if (distances[i][j] < 0) Malformed("negative distance");
      if (distances[i][j] != distances[j][i]) {
        Malformed("distance matrix is not symmetric");
      }
    }
  }
}

Rational TerminalMstCost(const DistanceMatrix& distances, int root,
                         const std::vector<int>& points) {
  ValidateDistanceMatrix(distances);
  const int n = static_cast<int>(distances.size());
  if (root < 0 || root >= n) Malformed("root index out of range");
  std::vector<int> nodes = {root};
  for (int p : points) {
    if (p < 0 || p >= n) Malformed("point index out of range");
    if (p != root) nodes.push_back(p);
  }
  nodes = MakeItemSet(std::move(nodes));
  return MstOverPoints(distances, nodes);
}

CostOracle::CostOracle() : data_(std::make_shared<Data>()) {}

CostOracle::CostOracle(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

CostOracle CostOracle::Modular(Rational base, std::vector<Rational> weights) {
  RequireNonnegative(base, "modular base cost");
  for (const Rational& w : weights) RequireNonnegative(w, "modular weight");
  auto data = std::make_shared<Data>();
  data->kind = OracleKind::kModular;
  data->n_items = static_cast<int>(weights.size());
  data->params.base = std::move(base);
  data->params.weights = std::move(weights);
  return CostOracle(std::move(data));
}

CostOracle CostOracle::Cardinality(int n_items, std::vector<Rational> g) {
  if (n_items < 0) Malformed("negative item count");
  if (static_cast<int>(g.size()) < n_items + 1) {
    Malformed("cardinality table needs n_items + 1 entries");
  }
  if (g.empty() || g[0] != 0) Malformed("cardinality table must start at 0");
  for (size_t j = 1; j < g.size(); ++j) {
    if (g[j] < g[j - 1]) Malformed("cardinality table must be nondecreasing");
    if (j >= 2 && g[j] - g[j - 1] > g[j - 1] - g[j - 2]) {
      Malformed("cardinality table must have nonincreasing increments");
    }
  }
  auto data = std::make_shared<Data>();
  data->kind = OracleKind::kCardinality;
  data->n_items = n_items;
  data->params.g = std::move(g);
  return CostOracle(std::move(data));
}

CostOracle CostOracle::Coverage(int n_items, std::vector<Rational> element_weights,
                                std::vector<std::vector<int>> covers) {
  if (n_items < 0) Malformed("negative item count");
  if (static_cast<int>(covers.size()) != n_items) {
    Malformed("coverage oracle needs one element list per item");
  }
  for (const Rational& w : element_weights) RequireNonnegative(w, "element weight");
  const int m = static_cast<int>(element_weights.size());
  for (auto& list : covers) {
    for (int e : list) {
      if (e < 0 || e >= m) Malformed("coverage element index out of range");
    }
    list = MakeItemSet(std::move(list));
  }
  auto data = std::make_shared<Data>();
  data->kind = OracleKind::kCoverage;
  data->n_items = n_items;
  data->params.element_weights = std::move(element_weights);
  data->params.covers = std::move(covers);
  return CostOracle(std::move(data));
}

CostOracle CostOracle::Laminar(int n_items, std::vector<ItemSet> sets,
                               std::vector<Rational> weights) {
  if (n_items < 0) Malformed("negative item count");
  if (sets.size() != weights.size()) Malformed("laminar sets and weights differ in size");
  for (const Rational& w : weights) RequireNonnegative(w, "laminar weight");
  for (auto& s : sets) {
    s = MakeItemSet(std::move(s));
    for (ItemId v : s) {
      if (v < 0 || v >= n_items) Malformed("laminar set item out of range");
    }
  }
  for (size_t a = 0; a < sets.size(); ++a) {
    for (size_t b = a + 1; b < sets.size(); ++b) {
      ItemSet inter;
      std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(),
                            sets[b].end(), std::back_inserter(inter));
      if (!inter.empty() && inter.size() != sets[a].size() &&
          inter.size() != sets[b].size()) {
        Malformed("set family is not laminar");
      }
    }
  }
  auto data = std::make_shared<Data>();
  data->kind = OracleKind::kLaminar;
  data->n_items = n_items;
  data->params.covers.assign(n_items, {});
  for (size_t a = 0; a < sets.size(); ++a) {
    for (ItemId v : sets[a]) data->params.covers[v].push_back(static_cast<int>(a));
  }
  data->params.element_weights = std::move(weights);
  data->params.laminar_sets = std::move(sets);
  return CostOracle(std::move(data));
}

CostOracle CostOracle::MetricSteiner(DistanceMatrix distances, int root) {
  ValidateDistanceMatrix(distances);
  const int n = static_cast<int>(distances.size());
  if (n == 0 || root < 0 || root >= n) Malformed("metric root index out of range");
  auto data = std::make_shared<Data>();
  data->kind = OracleKind::kMetricSteiner;
  data->n_items = n - 1;
  data->closure = distances;
  // Floyd-Warshall; the instance data need not satisfy the triangle
  // inequality (decimal rounding of Euclidean distances breaks it).
  DistanceMatrix& c = data->closure;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (c[i][k] + c[k][j] < c[i][j]) c[i][j] = c[i][k] + c[k][j];
      }
    }
  }
  data->params.distances = std::move(distances);
  data->params.root = root;
  return CostOracle(std::move(data));
}

int CostOracle::n_items() const {
  if (!item_map_.empty()) return static_cast<int>(item_map_.size());
  return restricted_ ? 0 : data_->n_items;
}

CostOracle CostOracle::Restrict(const std::vector<ItemId>& item_map) const {
  CostOracle out(data_);
  out.item_map_.reserve(item_map.size());
  const int n = n_items();
  for (ItemId v : item_map) {
    if (v < 0 || v >= n) Malformed("restriction maps to an unknown item");
    out.item_map_.push_back(BaseItem(v));
  }
  out.restricted_ = true;
  return out;
}

Rational CostOracle::Evaluate(const ItemSet& s) const {
  const int n = n_items();
  for (ItemId v : s) {
    if (v < 0 || v >= n) {
      Malformed("item " + std::to_string(v) + " out of range for oracle over " +
                std::to_string(n) + " items");
    }
  }
  if (item_map_.empty()) return EvaluateBase(s);
  std::vector<ItemId> mapped;
  mapped.reserve(s.size());
  for (ItemId v : s) mapped.push_back(item_map_[v]);
  return EvaluateBase(MakeItemSet(std::move(mapped)));
}

Rational CostOracle::EvaluateBase(const ItemSet& items) const {
  if (items.empty()) return Rational(0);
  const OracleParams& p = data_->params;
  switch (data_->kind) {
    case OracleKind::kModular: {
      Rational total = p.base;
      for (ItemId v : items) total += p.weights[v];
      return total;
    }
    case OracleKind::kCardinality:
      return p.g[items.size()];
    case OracleKind::kCoverage:
    case OracleKind::kLaminar: {
      std::vector<int> hit;
      for (ItemId v : items) hit.insert(hit.end(), p.covers[v].begin(), p.covers[v].end());
      hit = MakeItemSet(std::move(hit));
      Rational total = 0;
      for (int e : hit) total += p.element_weights[e];
      return total;
    }
    case OracleKind::kMetricSteiner: {
      std::vector<int> nodes = {p.root};
      for (ItemId v : items) nodes.push_back(v < p.root ? v : v + 1);
      return MstOverPoints(data_->closure, nodes);
    }
  }
  throw Error(ErrorCode::kInternal, "unhandled oracle kind");
}

int CostOracle::PointOf(int node) const {
  const int root = data_->params.root;
  if (node == kRootNode) return root;
  const ItemId base = BaseItem(node);
  return base < root ? base : base + 1;
}

const Rational& CostOracle::NodeDistance(int a, int b) const {
  if (kind() != OracleKind::kMetricSteiner) {
    throw Error(ErrorCode::kUnsupportedOracle, "distances need a metric oracle");
  }
  return data_->closure[PointOf(a)][PointOf(b)];
}

}  // namespace covertime
