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
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "storemine/mining.hpp"

namespace storemine {

/// How a rule's aggregate verdict relates to its per-store verdicts.
///
/// Labels are assigned in this order of precedence:
///  - Absent: the pair never co-occurs, or no scope detects it and its
///    direction of association is the same everywhere.
///  - Masked: some store detects it but the aggregate support band rejects it.
///  - Reversed: interest sits on opposite sides of 1 at the aggregate and in
///    some store.
///  - VisibleEverywhere: the aggregate and every store pass the support band.
///  - Localized: the aggregate passes the support band, some store does not.
enum class Classification { VisibleEverywhere, Localized, Masked, Reversed, Absent };

std::string_view to_string(Classification c) noexcept;

/// Classic store-level detection: within-store support inside the policy's
/// support band and a positive association (interest > 1).
bool store_level_detected(const MeasureVector& store_vector, const ThresholdPolicy& policy);

/// Measures from within-store counts only, indexed by StoreId. `sl_entropy`
/// is never set at store scope.
std::vector<MeasureVector> per_store_vectors(const Dataset& dataset, const Rule& rule);

struct ParadoxReport {
  Rule rule;
  MeasureVector aggregate_vector;
  Verdicts aggregate_detected;
  std::vector<MeasureVector> per_store_vectors;
  std::vector<bool> store_detected;
  Classification classification = Classification::Absent;
};

ParadoxReport classify(const Rule& rule, const MeasureVector& aggregate,
                       std::uint32_t stores_present, std::vector<MeasureVector> per_store,
                       const ThresholdPolicy& policy);

ParadoxReport analyze_rule(const Dataset& dataset, const Rule& rule,
                           const ThresholdPolicy& policy);

/// A rule together with the stores in which it is known to hold.
struct PlantedRule {
  Rule rule;
  std::vector<StoreId> stores;
  std::string section;
};

using GroundTruth = std::vector<PlantedRule>;

/// Derives store-level truth the classic way: a rule holds in every store
/// where `store_level_detected` passes. Rules detected nowhere are dropped.
GroundTruth store_level_truth(const Dataset& dataset, std::span<const Rule> rules,
                              const ThresholdPolicy& policy);

struct DetectionRow {
  PlantedRule truth;
  std::array<bool, kDetectors.size()> detected{};
};

struct DetectionMatrix {
  std::vector<DetectionRow> rows;
  std::array<std::size_t, kDetectors.size()> detected_counts{};

  std::size_t total() const noexcept { return rows.size(); }
  std::size_t detected(Detector detector) const noexcept;
  /// detected / total; empty when there is no ground truth.
  std::optional<double> rate(Detector detector) const noexcept;
};

/// One row per ground-truth rule, judged on aggregate data. Every truth rule
/// must have a scored entry (matched as an unordered pair); verdicts are
/// recomputed under `policy`.
DetectionMatrix detection_matrix(std::span<const ScoredRule> scored, const GroundTruth& truth,
                                 const ThresholdPolicy& policy);

/// Scores each truth rule on `dataset`, then builds the matrix.
DetectionMatrix detection_matrix(const Dataset& dataset, const GroundTruth& truth,
                                 const ThresholdPolicy& policy);

}  // namespace storemine
