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

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace storemine {

using Count = std::uint64_t;

struct ItemId {
  std::uint32_t value = 0;
  auto operator<=>(const ItemId&) const = default;
};

struct StoreId {
  std::uint32_t value = 0;
  auto operator<=>(const StoreId&) const = default;
};

/// Directed rule `antecedent => consequent` over two distinct items.
class Rule {
 public:
  Rule(ItemId antecedent, ItemId consequent);

  ItemId antecedent() const noexcept { return antecedent_; }
  ItemId consequent() const noexcept { return consequent_; }
  Rule reversed() const { return Rule(consequent_, antecedent_); }

  auto operator<=>(const Rule&) const = default;

 private:
  ItemId antecedent_;
  ItemId consequent_;
};

/// Unordered item pair, stored with `low < high`.
struct ItemPair {
  ItemId low;
  ItemId high;

  static ItemPair of(ItemId a, ItemId b);
  static ItemPair of(const Rule& rule) { return of(rule.antecedent(), rule.consequent()); }
  Rule as_rule() const { return Rule(low, high); }

  auto operator<=>(const ItemPair&) const = default;
};

/// Bijection between external labels and dense ids in [0, size()).
class Vocabulary {
 public:
  std::uint32_t intern(std::string_view label);
  std::optional<std::uint32_t> find(std::string_view label) const;
  const std::string& label(std::uint32_t id) const;
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

struct Transaction {
  StoreId store;
  std::vector<ItemId> items;  // sorted ascending, unique, non-empty
  std::string label;
};

class DatasetBuilder;

/// Immutable store-partitioned transaction collection. Construction goes
/// through DatasetBuilder, which enforces the invariants: at least one
/// transaction, no empty store, no empty transaction.
class Dataset {
 public:
  std::span<const Transaction> transactions() const noexcept { return transactions_; }

  std::uint32_t item_count() const noexcept { return items_.size(); }
  std::uint32_t store_count() const noexcept { return stores_.size(); }
  Count total_txn_count() const noexcept { return transactions_.size(); }
  Count store_txn_count(StoreId store) const;

  const Vocabulary& items() const noexcept { return items_; }
  const Vocabulary& stores() const noexcept { return stores_; }
  const std::string& item_label(ItemId id) const { return items_.label(id.value); }
  const std::string& store_label(StoreId id) const { return stores_.label(id.value); }
  std::optional<ItemId> find_item(std::string_view label) const;
  std::optional<StoreId> find_store(std::string_view label) const;

  /// Indices of transactions containing `item`, ascending.
  std::span<const std::uint32_t> occurrences(ItemId item) const;
  Count item_txn_count(ItemId item) const { return occurrences(item).size(); }

  void require_item(ItemId item) const;
  void require_store(StoreId store) const;

 private:
  friend class DatasetBuilder;
  Dataset() = default;

  Vocabulary items_;
  Vocabulary stores_;
  std::vector<Transaction> transactions_;
  std::vector<Count> store_txn_counts_;
  std::vector<std::vector<std::uint32_t>> occurrences_;
};

class DatasetBuilder {
 public:
  StoreId add_store(std::string_view label);
  ItemId add_item(std::string_view label);

  /// Items are deduplicated. An empty label is replaced by `t<index>`;
  /// labels must be unique within a store.
  void add_transaction(StoreId store, std::span<const ItemId> items, std::string label = {});
  void add_transaction(std::string_view store, std::span<const std::string> items,
                       std::string label = {});

  std::size_t transaction_count() const noexcept { return transactions_.size(); }

  Dataset build() &&;

 private:
  Vocabulary items_;
  Vocabulary stores_;
  std::vector<Transaction> transactions_;
  std::unordered_set<std::string> txn_keys_;
};

}  // namespace storemine

template <>
struct std::hash<storemine::ItemId> {
  std::size_t operator()(storemine::ItemId id) const noexcept { return id.value; }
};

template <>
struct std::hash<storemine::StoreId> {
  std::size_t operator()(storemine::StoreId id) const noexcept { return id.value; }
};
