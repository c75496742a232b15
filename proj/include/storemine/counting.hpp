// Copyright 2026 The storemine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "storemine/dataset.hpp"

namespace storemine {

/// Occurrence counts for an ordered pair (i, j) within one scope.
/// Invariant: n_ij <= min(n_i, n_j) <= n.
struct Counts {
  Count n_i = 0;
  Count n_j = 0;
  Count n_ij = 0;
  Count n = 0;

  Counts& operator+=(const Counts& other) noexcept {
    n_i += other.n_i;
    n_j += other.n_j;
    n_ij += other.n_ij;
    n += other.n;
    return *this;
  }
  bool operator==(const Counts&) const = default;
};

/// Counts for the scope that was asked for. `per_store` is indexed by
/// StoreId and is only populated for a per-store request; the top-level
/// fields then hold the aggregate.
struct PairCounts : Counts {
  std::optional<std::vector<Counts>> per_store;

  const Counts& aggregate() const noexcept { return *this; }
  bool operator==(const PairCounts&) const = default;
};

struct AggregateScope {};
struct PerStoreScope {};
using Scope = std::variant<AggregateScope, PerStoreScope, StoreId>;

/// Exact counts for `rule` over the scoped transactions.
/// Throws UnknownItem / UnknownStore for ids outside the dataset.
PairCounts count_pair(const Dataset& dataset, const Rule& rule, Scope scope = AggregateScope{});

struct PairCountOptions {
  /// 0 picks the hardware concurrency. Results are identical for any value.
  unsigned workers = 1;
};

/// Aggregate counts for every unordered pair of items that each occur in at
/// least `min_item_count` transactions, including pairs that never co-occur.
std::map<ItemPair, PairCounts> count_all_pairs(const Dataset& dataset, Count min_item_count,
                                               PairCountOptions options = {});

/// Pairs of items that each occur in at least `min_item_count` transactions
/// and co-occur in at least max(1, min_joint) of them, in pair order.
std::vector<std::pair<ItemPair, PairCounts>> count_cooccurring_pairs(const Dataset& dataset,
                                                                     Count min_item_count,
                                                                     Count min_joint,
                                                                     PairCountOptions options = {});

/// Number of stores X whose within-store support of the rule is at least
/// `per_store_min_support`.
std::uint32_t store_presence(const Dataset& dataset, const Rule& rule,
                             double per_store_min_support);

/// Same, from counts already scoped per store.
std::uint32_t store_presence(const std::vector<Counts>& per_store, double per_store_min_support);

}  // namespace storemine
