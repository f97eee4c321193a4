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

#ifndef COVERTIME_ITEM_SET_H_
#define COVERTIME_ITEM_SET_H_

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <vector>

namespace covertime {

// Items are 0-based; days are 1-based throughout the library.
using ItemId = int;
using Day = int;

// A sorted vector without duplicates. Small sets dominate, so a flat vector
// beats any node-based container here.
using ItemSet = std::vector<ItemId>;

inline ItemSet MakeItemSet(std::vector<ItemId> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

inline ItemSet SetUnion(const ItemSet& a, const ItemSet& b) {
  ItemSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool SetContains(const ItemSet& s, ItemId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline void SetInsert(ItemSet& s, ItemId v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
}

// Bitmask helpers for the enumeration-based solvers, which cap N well below
// 32.
inline ItemSet MaskToSet(uint32_t mask) {
  ItemSet out;
  for (int v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1u) out.push_back(v);
  }
  return out;
}

inline uint32_t SetToMask(const ItemSet& s) {
  uint32_t mask = 0;
  for (ItemId v : s) mask |= 1u << v;
  return mask;
}

}  // namespace covertime

#endif  // COVERTIME_ITEM_SET_H_
