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

#include "storemine/mining.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "storemine/error.hpp"

namespace storemine {
namespace {

void check_fraction(double value, const char* name, bool allow_zero) {
  const bool ok = (allow_zero ? value >= 0.0 : value > 0.0) && value <= 1.0;
  if (!ok) {
    throw Error(ErrorKind::DomainError,
                std::string(name) + " must lie in " + (allow_zero ? "[0, 1]" : "(0, 1]") +
                    ", got " + std::to_string(value));
  }
}

}  // namespace

EntropyBand ThresholdPolicy::entropy_band() const {
  return EntropyBand{entropy_low.value_or(binary_entropy(min_support)),
                     entropy_high.value_or(binary_entropy(max_support))};
}

double ThresholdPolicy::resolved_sl_entropy_cutoff() const {
  return sl_entropy_cutoff.value_or(entropy_band().low);
}

double ThresholdPolicy::candidate_floor() const { return candidate_support.value_or(min_support); }

void ThresholdPolicy::validate() const {
  check_fraction(min_support, "min_support", false);
  check_fraction(max_support, "max_support", false);
  if (min_support > max_support) {
    throw Error(ErrorKind::DomainError, "min_support exceeds max_support");
  }
  if (max_support > 0.5 && !(entropy_low && entropy_high)) {
    // H is not monotone past 0.5, so a derived band would be meaningless.
    throw Error(ErrorKind::DomainError, "max_support above 0.5 needs an explicit entropy band");
  }
  check_fraction(per_store_min_support, "per_store_min_support", false);
  check_fraction(candidate_floor(), "candidate_support", false);
  if (interest_cutoff < 0.0 || cosine_cutoff < 0.0 || jaccard_cutoff < 0.0) {
    throw Error(ErrorKind::DomainError, "measure cutoffs must be non-negative");
  }
  const auto band = entropy_band();
  if (band.low > band.high) {
    throw Error(ErrorKind::DomainError, "entropy band is empty");
  }
  if (resolved_sl_entropy_cutoff() < 0.0) {
    throw Error(ErrorKind::DomainError, "sl_entropy cutoff must be non-negative");
  }
}

std::string_view to_string(Detector detector) noexcept {
  switch (detector) {
    case Detector::RawSupport: return "raw-support";
    case Detector::Interest: return "interest";
    case Detector::Cosine: return "cosine";
    case Detector::Jaccard: return "jaccard";
    case Detector::Entropy: return "entropy";
    case Detector::SlEntropy: return "sl-entropy";
  }
  return "unknown";
}

bool Verdicts::passes(Detector detector) const noexcept {
  switch (detector) {
    case Detector::RawSupport: return support;
    case Detector::Interest: return interest;
    case Detector::Cosine: return cosine;
    case Detector::Jaccard: return jaccard;
    case Detector::Entropy: return entropy;
    case Detector::SlEntropy: return sl_entropy;
  }
  return false;
}

Verdicts apply_verdicts(const MeasureVector& m, std::uint32_t stores_present,
                        const ThresholdPolicy& policy) {
  const auto band = policy.entropy_band();
  Verdicts v;
  v.support = m.support >= policy.min_support && m.support <= policy.max_support;
  v.interest = m.interest && *m.interest >= policy.interest_cutoff;
  v.cosine = m.cosine && *m.cosine >= policy.cosine_cutoff;
  v.jaccard = m.jaccard && *m.jaccard >= policy.jaccard_cutoff;
  // Only the rising branch of H maps back to a support band.
  v.entropy = m.entropy >= band.low && m.entropy <= band.high && m.support <= 0.5;
  v.sl_entropy = stores_present >= 1 && m.sl_entropy &&
                 *m.sl_entropy >= policy.resolved_sl_entropy_cutoff();
  return v;
}

Verdicts apply_verdicts(const ScoredRule& scored, const ThresholdPolicy& policy) {
  return apply_verdicts(scored.aggregate, scored.stores_present, policy);
}

ScoredRule score_rule(const Dataset& dataset, const Rule& rule, const ThresholdPolicy& policy) {
  PairCounts counts = count_pair(dataset, rule, PerStoreScope{});
  const std::uint32_t present = store_presence(*counts.per_store, policy.per_store_min_support);
  const std::uint32_t total = dataset.store_count();
  MeasureVector aggregate = measure_vector(counts.aggregate(), total, present);
  std::optional<double> reverse;
  if (counts.n_j > 0) reverse = static_cast<double>(counts.n_ij) / static_cast<double>(counts.n_j);
  const Verdicts verdicts = apply_verdicts(aggregate, present, policy);
  return ScoredRule{rule, std::move(counts), aggregate, reverse, present, total, verdicts};
}

Count min_count_for(double fraction, Count n) {
  if (fraction <= 0.0) return 0;
  auto c = static_cast<Count>(std::max(0.0, std::floor(fraction * static_cast<double>(n)) - 1.0));
  // Step to the exact boundary of the same double comparison the verdicts use.
  while (c <= n && static_cast<double>(c) / static_cast<double>(n) < fraction) ++c;
  return c;
}

std::vector<ScoredRule> mine_frequent_pairs(const Dataset& dataset, const ThresholdPolicy& policy,
                                            MiningOptions options) {
  policy.validate();
  const double floor = policy.candidate_floor();
  const Count n = dataset.total_txn_count();
  const Count min_count = min_count_for(floor, n);

  std::vector<ScoredRule> out;
  if (min_count > n) return out;
  // Apriori: a pair can only reach the floor if both items do.
  const auto pairs =
      count_cooccurring_pairs(dataset, min_count, min_count, PairCountOptions{options.workers});
  out.reserve(pairs.size());
  for (const auto& [pair, counts] : pairs) {
    out.push_back(score_rule(dataset, pair.as_rule(), policy));
  }
  return out;
}

}  // namespace storemine
