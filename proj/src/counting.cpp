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

#include "storemine/counting.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "storemine/error.hpp"

namespace storemine {
namespace {

// Dense triangular tables are used while each worker's table stays under
// this many cells; larger candidate sets fall back to hash maps.
constexpr std::size_t kMaxDenseCells = std::size_t{1} << 24;

std::size_t triangle_index(std::size_t a, std::size_t b, std::size_t k) {
  // a < b < k
  return a * (2 * k - a - 1) / 2 + (b - a - 1);
}

void check_threshold(double per_store_min_support) {
  if (!(per_store_min_support > 0.0 && per_store_min_support <= 1.0)) {
    throw Error(ErrorKind::DomainError, "per-store minimum support must lie in (0, 1], got " +
                                            std::to_string(per_store_min_support));
  }
}

}  // namespace

PairCounts count_pair(const Dataset& dataset, const Rule& rule, Scope scope) {
  dataset.require_item(rule.antecedent());
  dataset.require_item(rule.consequent());
  const auto txns = dataset.transactions();
  const auto occ_i = dataset.occurrences(rule.antecedent());
  const auto occ_j = dataset.occurrences(rule.consequent());

  PairCounts out;
  if (std::holds_alternative<AggregateScope>(scope)) {
    out.n = dataset.total_txn_count();
    out.n_i = occ_i.size();
    out.n_j = occ_j.size();
    // Both lists are sorted transaction indices.
    auto a = occ_i.begin();
    auto b = occ_j.begin();
    while (a != occ_i.end() && b != occ_j.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++out.n_ij;
        ++a;
        ++b;
      }
    }
    return out;
  }

  if (const auto* store = std::get_if<StoreId>(&scope)) {
    dataset.require_store(*store);
    out.n = dataset.store_txn_count(*store);
    if (out.n == 0) {
      throw Error(ErrorKind::EmptyScope, "store '" + dataset.store_label(*store) + "' is empty");
    }
    auto in_store = [&](std::uint32_t t) { return txns[t].store == *store; };
    out.n_i = std::count_if(occ_i.begin(), occ_i.end(), in_store);
    out.n_j = std::count_if(occ_j.begin(), occ_j.end(), in_store);
    auto a = occ_i.begin();
    auto b = occ_j.begin();
    while (a != occ_i.end() && b != occ_j.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        if (in_store(*a)) ++out.n_ij;
        ++a;
        ++b;
      }
    }
    return out;
  }

  std::vector<Counts> per_store(dataset.store_count());
  for (std::uint32_t s = 0; s < dataset.store_count(); ++s) {
    per_store[s].n = dataset.store_txn_count(StoreId{s});
  }
  for (auto t : occ_i) ++per_store[txns[t].store.value].n_i;
  for (auto t : occ_j) ++per_store[txns[t].store.value].n_j;
  auto a = occ_i.begin();
  auto b = occ_j.begin();
  while (a != occ_i.end() && b != occ_j.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++per_store[txns[*a].store.value].n_ij;
      ++a;
      ++b;
    }
  }
  for (const auto& c : per_store) out += c;
  out.per_store = std::move(per_store);
  return out;
}

namespace {

// Joint counts for every pair of items clearing a marginal threshold.
class JointTable {
 public:
  JointTable(const Dataset& dataset, Count min_item_count, unsigned requested_workers);

  const std::vector<ItemId>& kept() const noexcept { return kept_; }
  Count joint(std::size_t a, std::size_t b) const;

  template <typename F>
  void for_each_nonzero(F&& f) const;

 private:
  using Sparse = std::unordered_map<std::uint64_t, Count>;
  static std::uint64_t key(std::size_t a, std::size_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
  }

  std::vector<ItemId> kept_;
  bool dense_ = true;
  std::vector<Count> dense_joint_;
  Sparse sparse_joint_;
};

JointTable::JointTable(const Dataset& dataset, Count min_item_count, unsigned requested_workers) {
  // Items that clear the marginal threshold, compacted to [0, k).
  std::vector<std::int64_t> compact(dataset.item_count(), -1);
  for (std::uint32_t i = 0; i < dataset.item_count(); ++i) {
    if (dataset.item_txn_count(ItemId{i}) >= min_item_count) {
      compact[i] = static_cast<std::int64_t>(kept_.size());
      kept_.push_back(ItemId{i});
    }
  }
  const std::size_t k = kept_.size();
  if (k < 2) return;

  const auto txns = dataset.transactions();
  const std::size_t cells = k * (k - 1) / 2;
  dense_ = cells <= kMaxDenseCells;
  std::size_t workers = requested_workers == 0
                            ? std::max(1u, std::thread::hardware_concurrency())
                            : requested_workers;
  workers = std::min<std::size_t>(workers, std::max<std::size_t>(1, txns.size() / 256));
  if (dense_) workers = std::min<std::size_t>(workers, std::max<std::size_t>(1, kMaxDenseCells / cells));

  std::vector<std::vector<Count>> dense_parts(dense_ ? workers : 0);
  std::vector<Sparse> sparse_parts(dense_ ? 0 : workers);

  auto work = [&](std::size_t w) {
    const std::size_t begin = txns.size() * w / workers;
    const std::size_t end = txns.size() * (w + 1) / workers;
    std::vector<std::size_t> local;
    if (dense_) dense_parts[w].assign(cells, 0);
    for (std::size_t t = begin; t < end; ++t) {
      local.clear();
      for (ItemId item : txns[t].items) {
        if (compact[item.value] >= 0) local.push_back(static_cast<std::size_t>(compact[item.value]));
      }
      // items are sorted, so compact ids are too
      for (std::size_t x = 0; x < local.size(); ++x) {
        for (std::size_t y = x + 1; y < local.size(); ++y) {
          if (dense_) {
            ++dense_parts[w][triangle_index(local[x], local[y], k)];
          } else {
            ++sparse_parts[w][key(local[x], local[y])];
          }
        }
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  // Integer sums: merge order cannot change the result.
  if (dense_) {
    dense_joint_ = std::move(dense_parts[0]);
    for (std::size_t w = 1; w < workers; ++w) {
      for (std::size_t c = 0; c < cells; ++c) dense_joint_[c] += dense_parts[w][c];
    }
  } else {
    sparse_joint_ = std::move(sparse_parts[0]);
    for (std::size_t w = 1; w < workers; ++w) {
      for (const auto& [pair_key, n] : sparse_parts[w]) sparse_joint_[pair_key] += n;
    }
  }
}

Count JointTable::joint(std::size_t a, std::size_t b) const {
  if (dense_) return dense_joint_[triangle_index(a, b, kept_.size())];
  auto it = sparse_joint_.find(key(a, b));
  return it == sparse_joint_.end() ? 0 : it->second;
}

template <typename F>
void JointTable::for_each_nonzero(F&& f) const {
  const std::size_t k = kept_.size();
  if (k < 2) return;
  if (dense_) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (const Count n = dense_joint_[triangle_index(a, b, k)]; n > 0) f(a, b, n);
      }
    }
    return;
  }
  std::vector<std::pair<std::uint64_t, Count>> entries(sparse_joint_.begin(), sparse_joint_.end());
  std::sort(entries.begin(), entries.end());
  for (const auto& [pair_key, n] : entries) {
    f(static_cast<std::size_t>(pair_key >> 32), static_cast<std::size_t>(pair_key & 0xffffffffu), n);
  }
}

PairCounts aggregate_counts(const Dataset& dataset, ItemId a, ItemId b, Count joint) {
  PairCounts pc;
  pc.n = dataset.total_txn_count();
  pc.n_i = dataset.item_txn_count(a);
  pc.n_j = dataset.item_txn_count(b);
  pc.n_ij = joint;
  return pc;
}

}  // namespace

std::map<ItemPair, PairCounts> count_all_pairs(const Dataset& dataset, Count min_item_count,
                                               PairCountOptions options) {
  const JointTable table(dataset, min_item_count, options.workers);
  const auto& kept = table.kept();
  std::map<ItemPair, PairCounts> out;
  for (std::size_t a = 0; a < kept.size(); ++a) {
    for (std::size_t b = a + 1; b < kept.size(); ++b) {
      out.emplace_hint(out.end(), ItemPair{kept[a], kept[b]},
                       aggregate_counts(dataset, kept[a], kept[b], table.joint(a, b)));
    }
  }
  return out;
}

std::vector<std::pair<ItemPair, PairCounts>> count_cooccurring_pairs(const Dataset& dataset,
                                                                     Count min_item_count,
                                                                     Count min_joint,
                                                                     PairCountOptions options) {
  const JointTable table(dataset, min_item_count, options.workers);
  const auto& kept = table.kept();
  std::vector<std::pair<ItemPair, PairCounts>> out;
  table.for_each_nonzero([&](std::size_t a, std::size_t b, Count joint) {
    if (joint >= min_joint) {
      out.emplace_back(ItemPair{kept[a], kept[b]}, aggregate_counts(dataset, kept[a], kept[b], joint));
    }
  });
  return out;
}

std::uint32_t store_presence(const std::vector<Counts>& per_store, double per_store_min_support) {
  check_threshold(per_store_min_support);
  std::uint32_t present = 0;
  for (const auto& c : per_store) {
    if (c.n == 0) {
      throw Error(ErrorKind::EmptyScope, "store presence needs non-empty stores");
    }
    if (static_cast<double>(c.n_ij) / static_cast<double>(c.n) >= per_store_min_support) {
      ++present;
    }
  }
  return present;
}

std::uint32_t store_presence(const Dataset& dataset, const Rule& rule,
                             double per_store_min_support) {
  check_threshold(per_store_min_support);
  const auto counts = count_pair(dataset, rule, PerStoreScope{});
  return store_presence(*counts.per_store, per_store_min_support);
}

}  // namespace storemine
