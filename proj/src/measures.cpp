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

#include "storemine/measures.hpp"

#include <cmath>
#include <string>

#include "storemine/error.hpp"

namespace storemine {
namespace {

void require_scope(const Counts& c) {
  if (c.n == 0) throw Error(ErrorKind::EmptyScope, "measure over an empty scope");
}

void require_marginals(const Counts& c, const char* measure) {
  require_scope(c);
  if (c.n_i == 0 || c.n_j == 0) {
    throw Error(ErrorKind::UndefinedMeasure,
                std::string(measure) + " is undefined when an item never occurs");
  }
}

double d(Count c) { return static_cast<double>(c); }

template <typename F>
std::optional<double> defined(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UndefinedMeasure) return std::nullopt;
    throw;
  }
}

}  // namespace

double support(const Counts& c) {
  require_scope(c);
  return d(c.n_ij) / d(c.n);
}

double confidence(const Counts& c) {
  require_scope(c);
  if (c.n_i == 0) {
    throw Error(ErrorKind::UndefinedMeasure, "confidence is undefined when the antecedent never occurs");
  }
  return d(c.n_ij) / d(c.n_i);
}

double interest(const Counts& c) {
  require_marginals(c, "interest");
  // (n_ij / n) / ((n_i / n)(n_j / n)) with one rounding step fewer.
  return (d(c.n_ij) * d(c.n)) / (d(c.n_i) * d(c.n_j));
}

double cosine(const Counts& c) {
  require_marginals(c, "cosine");
  return d(c.n_ij) / std::sqrt(d(c.n_i) * d(c.n_j));
}

double jaccard(const Counts& c) {
  require_scope(c);
  const Count union_count = c.n_i + c.n_j - c.n_ij;
  if (union_count == 0) {
    throw Error(ErrorKind::UndefinedMeasure, "jaccard is undefined when both items never occur");
  }
  return d(c.n_ij) / d(union_count);
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::DomainError, "entropy argument must lie in [0, 1], got " + std::to_string(p));
  }
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double sl_entropy(double p, std::uint32_t stores_total, std::uint32_t stores_present) {
  if (stores_present == 0) {
    throw Error(ErrorKind::DomainError, "sl_entropy is undefined for a rule found in no store");
  }
  if (stores_present > stores_total) {
    throw Error(ErrorKind::DomainError, "stores_present " + std::to_string(stores_present) +
                                            " exceeds stores_total " + std::to_string(stores_total));
  }
  return std::log2(d(stores_total) / d(stores_present)) * binary_entropy(p);
}

MeasureVector measure_vector(const Counts& c, std::uint32_t stores_total,
                             std::optional<std::uint32_t> stores_present) {
  if (stores_present && *stores_present > stores_total) {
    throw Error(ErrorKind::DomainError, "stores_present exceeds stores_total");
  }
  MeasureVector v;
  v.support = support(c);
  v.confidence = defined([&] { return confidence(c); });
  v.interest = defined([&] { return interest(c); });
  v.cosine = defined([&] { return cosine(c); });
  v.jaccard = defined([&] { return jaccard(c); });
  v.entropy = binary_entropy(v.support);
  if (stores_present && *stores_present > 0) {
    v.sl_entropy = sl_entropy(v.support, stores_total, *stores_present);
  }
  return v;
}

}  // namespace storemine
