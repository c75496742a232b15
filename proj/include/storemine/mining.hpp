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

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "storemine/counting.hpp"
#include "storemine/measures.hpp"

namespace storemine {

struct EntropyBand {
  double low = 0.0;
  double high = 0.0;
};

/// Cutoffs used to judge rules. All comparisons are inclusive.
///
/// Defaults: support band [1%, 10%], interest >= 3, cosine >= 5%,
/// jaccard >= 1%. The entropy band is derived from the support band unless
/// overridden: [H(min_support), H(max_support)] = [0.0808, 0.4690].
///
/// The SL entropy cutoff has no canonical value. It defaults to the lower
/// entropy bound, which is a policy choice and can be overridden.
///
/// `candidate_support` is the mining floor: pairs below it are not scored at
/// all. It defaults to `min_support`; lowering it lets measures other than
/// support flag pairs that the support band rejects.
struct ThresholdPolicy {
  double min_support = 0.01;
  double max_support = 0.10;
  double interest_cutoff = 3.0;
  double cosine_cutoff = 0.05;
  double jaccard_cutoff = 0.01;
  std::optional<double> entropy_low;
  std::optional<double> entropy_high;
  std::optional<double> sl_entropy_cutoff;
  double per_store_min_support = 0.01;
  std::optional<double> candidate_support;

  EntropyBand entropy_band() const;
  double resolved_sl_entropy_cutoff() const;
  double candidate_floor() const;

  /// Throws DomainError on an inconsistent policy.
  void validate() const;
};

enum class Detector { RawSupport, Interest, Cosine, Jaccard, Entropy, SlEntropy };

inline constexpr std::array<Detector, 6> kDetectors = {
    Detector::RawSupport, Detector::Interest, Detector::Cosine,
    Detector::Jaccard,    Detector::Entropy,  Detector::SlEntropy};

std::string_view to_string(Detector detector) noexcept;

struct Verdicts {
  bool support = false;
  bool interest = false;
  bool cosine = false;
  bool jaccard = false;
  bool entropy = false;
  bool sl_entropy = false;

  bool passes(Detector detector) const noexcept;
  bool operator==(const Verdicts&) const = default;
};

/// Undefined measures fail their verdict.
Verdicts apply_verdicts(const MeasureVector& measures, std::uint32_t stores_present,
                        const ThresholdPolicy& policy);

struct ScoredRule {
  Rule rule;
  PairCounts counts;  // per-store populated
  MeasureVector aggregate;
  std::optional<double> reverse_confidence;  // P(i, j) / P(j)
  std::uint32_t stores_present = 0;
  std::uint32_t stores_total = 0;
  Verdicts verdicts;
};

Verdicts apply_verdicts(const ScoredRule& scored, const ThresholdPolicy& policy);

/// Scores one rule on aggregate data, with store presence from per-store
/// counts.
ScoredRule score_rule(const Dataset& dataset, const Rule& rule, const ThresholdPolicy& policy);

struct MiningOptions {
  unsigned workers = 1;
};

/// Every unordered pair whose aggregate support reaches the candidate floor,
/// scored and judged. Items below the floor are pruned before pairing.
/// Each rule is oriented low id => high id; results are in pair order.
std::vector<ScoredRule> mine_frequent_pairs(const Dataset& dataset, const ThresholdPolicy& policy,
                                            MiningOptions options = {});

/// Smallest count c with c / n >= fraction.
Count min_count_for(double fraction, Count n);

}  // namespace storemine
