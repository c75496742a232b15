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

#include "storemine/paradox.hpp"

#include <algorithm>
#include <map>

#include "storemine/error.hpp"

namespace storemine {

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::VisibleEverywhere: return "visible-everywhere";
    case Classification::Localized: return "localized";
    case Classification::Masked: return "masked";
    case Classification::Reversed: return "reversed";
    case Classification::Absent: return "absent";
  }
  return "unknown";
}

bool store_level_detected(const MeasureVector& v, const ThresholdPolicy& policy) {
  const bool in_band = v.support >= policy.min_support && v.support <= policy.max_support;
  return in_band && v.interest && *v.interest > 1.0;
}

std::vector<MeasureVector> per_store_vectors(const Dataset& dataset, const Rule& rule) {
  const auto counts = count_pair(dataset, rule, PerStoreScope{});
  std::vector<MeasureVector> out;
  out.reserve(counts.per_store->size());
  for (const auto& c : *counts.per_store) {
    out.push_back(measure_vector(c, dataset.store_count()));
  }
  return out;
}

ParadoxReport classify(const Rule& rule, const MeasureVector& aggregate,
                       std::uint32_t stores_present, std::vector<MeasureVector> per_store,
                       const ThresholdPolicy& policy) {
  ParadoxReport report{rule, aggregate, apply_verdicts(aggregate, stores_present, policy),
                       std::move(per_store), {}, Classification::Absent};
  report.store_detected.reserve(report.per_store_vectors.size());
  for (const auto& v : report.per_store_vectors) {
    report.store_detected.push_back(store_level_detected(v, policy));
  }

  const bool any_store = std::find(report.store_detected.begin(), report.store_detected.end(),
                                   true) != report.store_detected.end();
  const bool aggregate_support = report.aggregate_detected.support;

  bool reversed = false;
  if (aggregate.interest) {
    const bool agg_positive = *aggregate.interest >= 1.0;
    for (const auto& v : report.per_store_vectors) {
      if (v.interest && (*v.interest >= 1.0) != agg_positive) {
        reversed = true;
        break;
      }
    }
  }

  if (aggregate.support == 0.0) {
    report.classification = Classification::Absent;
  } else if (any_store && !aggregate_support) {
    report.classification = Classification::Masked;
  } else if (reversed) {
    report.classification = Classification::Reversed;
  } else if (aggregate_support) {
    const bool all_in_band = std::all_of(
        report.per_store_vectors.begin(), report.per_store_vectors.end(), [&](const auto& v) {
          return v.support >= policy.min_support && v.support <= policy.max_support;
        });
    report.classification =
        all_in_band ? Classification::VisibleEverywhere : Classification::Localized;
  } else {
    report.classification = Classification::Absent;
  }
  return report;
}

ParadoxReport analyze_rule(const Dataset& dataset, const Rule& rule,
                           const ThresholdPolicy& policy) {
  const auto counts = count_pair(dataset, rule, PerStoreScope{});
  const std::uint32_t present = store_presence(*counts.per_store, policy.per_store_min_support);
  std::vector<MeasureVector> stores;
  stores.reserve(counts.per_store->size());
  for (const auto& c : *counts.per_store) stores.push_back(measure_vector(c, dataset.store_count()));
  return classify(rule, measure_vector(counts.aggregate(), dataset.store_count(), present), present,
                  std::move(stores), policy);
}

GroundTruth store_level_truth(const Dataset& dataset, std::span<const Rule> rules,
                              const ThresholdPolicy& policy) {
  GroundTruth truth;
  for (const auto& rule : rules) {
    const auto vectors = per_store_vectors(dataset, rule);
    PlantedRule planted{rule, {}, {}};
    for (std::uint32_t s = 0; s < vectors.size(); ++s) {
      if (store_level_detected(vectors[s], policy)) planted.stores.push_back(StoreId{s});
    }
    if (!planted.stores.empty()) truth.push_back(std::move(planted));
  }
  return truth;
}

std::size_t DetectionMatrix::detected(Detector detector) const noexcept {
  return detected_counts[static_cast<std::size_t>(detector)];
}

std::optional<double> DetectionMatrix::rate(Detector detector) const noexcept {
  if (rows.empty()) return std::nullopt;
  return static_cast<double>(detected(detector)) / static_cast<double>(rows.size());
}

DetectionMatrix detection_matrix(std::span<const ScoredRule> scored, const GroundTruth& truth,
                                 const ThresholdPolicy& policy) {
  std::map<ItemPair, const ScoredRule*> by_pair;
  for (const auto& s : scored) by_pair.emplace(ItemPair::of(s.rule), &s);

  DetectionMatrix matrix;
  matrix.rows.reserve(truth.size());
  for (const auto& planted : truth) {
    auto it = by_pair.find(ItemPair::of(planted.rule));
    if (it == by_pair.end()) {
      throw Error(ErrorKind::InvalidArgument,
                  "ground-truth rule (" + std::to_string(planted.rule.antecedent().value) + ", " +
                      std::to_string(planted.rule.consequent().value) + ") was not scored");
    }
    const Verdicts verdicts = apply_verdicts(*it->second, policy);
    DetectionRow row{planted, {}};
    for (std::size_t d = 0; d < kDetectors.size(); ++d) {
      row.detected[d] = verdicts.passes(kDetectors[d]);
      if (row.detected[d]) ++matrix.detected_counts[d];
    }
    matrix.rows.push_back(std::move(row));
  }
  return matrix;
}

DetectionMatrix detection_matrix(const Dataset& dataset, const GroundTruth& truth,
                                 const ThresholdPolicy& policy) {
  std::vector<ScoredRule> scored;
  scored.reserve(truth.size());
  for (const auto& planted : truth) scored.push_back(score_rule(dataset, planted.rule, policy));
  return detection_matrix(scored, truth, policy);
}

}  // namespace storemine
