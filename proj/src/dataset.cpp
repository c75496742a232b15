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

#include "storemine/dataset.hpp"

#include <algorithm>

#include "storemine/error.hpp"

namespace storemine {

Rule::Rule(ItemId antecedent, ItemId consequent)
    : antecedent_(antecedent), consequent_(consequent) {
  if (antecedent == consequent) {
    throw Error(ErrorKind::InvalidArgument,
                "rule antecedent and consequent must differ (item " +
                    std::to_string(antecedent.value) + ")");
  }
}

ItemPair ItemPair::of(ItemId a, ItemId b) {
  if (a == b) {
    throw Error(ErrorKind::InvalidArgument, "item pair needs two distinct items");
  }
  return a < b ? ItemPair{a, b} : ItemPair{b, a};
}

std::uint32_t Vocabulary::intern(std::string_view label) {
  auto [it, inserted] = ids_.try_emplace(std::string(label), size());
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

std::optional<std::uint32_t> Vocabulary::find(std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& Vocabulary::label(std::uint32_t id) const {
  if (id >= labels_.size()) {
    throw Error(ErrorKind::InvalidArgument, "id " + std::to_string(id) + " outside vocabulary");
  }
  return labels_[id];
}

Count Dataset::store_txn_count(StoreId store) const {
  require_store(store);
  return store_txn_counts_[store.value];
}

std::optional<ItemId> Dataset::find_item(std::string_view label) const {
  if (auto id = items_.find(label)) return ItemId{*id};
  return std::nullopt;
}

std::optional<StoreId> Dataset::find_store(std::string_view label) const {
  if (auto id = stores_.find(label)) return StoreId{*id};
  return std::nullopt;
}

std::span<const std::uint32_t> Dataset::occurrences(ItemId item) const {
  require_item(item);
  return occurrences_[item.value];
}

void Dataset::require_item(ItemId item) const {
  if (item.value >= items_.size()) {
    throw Error(ErrorKind::UnknownItem, "item id " + std::to_string(item.value) +
                                            " outside vocabulary of " +
                                            std::to_string(items_.size()));
  }
}

void Dataset::require_store(StoreId store) const {
  if (store.value >= stores_.size()) {
    throw Error(ErrorKind::UnknownStore, "store id " + std::to_string(store.value) +
                                             " outside " + std::to_string(stores_.size()) +
                                             " stores");
  }
}

StoreId DatasetBuilder::add_store(std::string_view label) { return StoreId{stores_.intern(label)}; }

ItemId DatasetBuilder::add_item(std::string_view label) { return ItemId{items_.intern(label)}; }

void DatasetBuilder::add_transaction(StoreId store, std::span<const ItemId> items,
                                     std::string label) {
  if (store.value >= stores_.size()) {
    throw Error(ErrorKind::UnknownStore, "transaction references undeclared store id " +
                                             std::to_string(store.value));
  }
  std::vector<ItemId> sorted(items.begin(), items.end());
  for (ItemId item : sorted) {
    if (item.value >= items_.size()) {
      throw Error(ErrorKind::UnknownItem,
                  "transaction references undeclared item id " + std::to_string(item.value));
    }
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) {
    throw Error(ErrorKind::InvalidArgument, "transaction has no items");
  }
  if (label.empty()) label = "t" + std::to_string(transactions_.size());
  std::string key = std::to_string(store.value);
  key.push_back('\x1f');
  key += label;
  if (!txn_keys_.insert(std::move(key)).second) {
    throw Error(ErrorKind::InvalidArgument, "duplicate transaction '" + label + "' in store '" +
                                                stores_.label(store.value) + "'");
  }
  transactions_.push_back(Transaction{store, std::move(sorted), std::move(label)});
}

void DatasetBuilder::add_transaction(std::string_view store, std::span<const std::string> items,
                                     std::string label) {
  const StoreId sid = add_store(store);
  std::vector<ItemId> ids;
  ids.reserve(items.size());
  for (const auto& item : items) ids.push_back(add_item(item));
  add_transaction(sid, ids, std::move(label));
}

Dataset DatasetBuilder::build() && {
  if (transactions_.empty()) {
    throw Error(ErrorKind::EmptyDataset, "dataset has no transactions");
  }
  Dataset ds;
  ds.store_txn_counts_.assign(stores_.size(), 0);
  ds.occurrences_.resize(items_.size());
  for (std::size_t t = 0; t < transactions_.size(); ++t) {
    const auto& txn = transactions_[t];
    ++ds.store_txn_counts_[txn.store.value];
    for (ItemId item : txn.items) {
      ds.occurrences_[item.value].push_back(static_cast<std::uint32_t>(t));
    }
  }
  for (std::uint32_t s = 0; s < stores_.size(); ++s) {
    if (ds.store_txn_counts_[s] == 0) {
      throw Error(ErrorKind::EmptyStore, "store '" + stores_.label(s) + "' has no transactions");
    }
  }
  ds.items_ = std::move(items_);
  ds.stores_ = std::move(stores_);
  ds.transactions_ = std::move(transactions_);
  return ds;
}

}  // namespace storemine
