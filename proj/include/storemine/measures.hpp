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

#include <cstdint>
#include <optional>

#include "storemine/counting.hpp"

namespace storemine {

// Interestingness measures for a pair rule, computed from exact counts.
// All probabilities are empirical: P(i) = n_i / n, P(i, j) = n_ij / n.
//
// Each function throws Error(EmptyScope) when n == 0 and
// Error(UndefinedMeasure) when a denominator it needs is zero.

/// P(i, j).
double support(const Counts& counts);

/// P(i, j) / P(i).
double confidence(const Counts& counts);

/// Lift: P(i, j) / (P(i) P(j)). 1 means independence.
double interest(const Counts& counts);

/// P(i, j) / sqrt(P(i) P(j)); the geometric mean of interest and support.
double cosine(const Counts& counts);

/// P(i, j) / (P(i) + P(j) - P(i, j)).
double jaccard(const Counts& counts);

/// Base-2 binary entropy H(p) with 0 log 0 = 0. Throws DomainError when p is
/// outside [0, 1].
double binary_entropy(double p);

/// Store-level entropy: log2(stores_total / stores_present) * H(p).
///
/// Grows as the rule concentrates in fewer stores and is exactly zero for a
/// rule present in every store. A rule present in no store has no score:
/// stores_present == 0 throws DomainError, as does stores_present > stores_total.
double sl_entropy(double p, std::uint32_t stores_total, std::uint32_t stores_present);

/// Every measure for one rule at one scope. Optional fields are empty when
/// the measure is undefined for the counts (an item absent from the scope),
/// and `sl_entropy` is empty unless store presence was supplied and nonzero.
struct MeasureVector {
  double support = 0.0;
  std::optional<double> confidence;
  std::optional<double> interest;
  std::optional<double> cosine;
  std::optional<double> jaccard;
  double entropy = 0.0;
  std::optional<double> sl_entropy;

  bool operator==(const MeasureVector&) const = default;
};

MeasureVector measure_vector(const Counts& counts, std::uint32_t stores_total,
                             std::optional<std::uint32_t> stores_present = std::nullopt);

}  // namespace storemine
