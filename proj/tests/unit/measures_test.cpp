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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "expect_error.hpp"
#include "oracle.hpp"
#include "storemine/measures.hpp"

namespace storemine {
namespace {

// Aggregate counts behind support 0.005, P(A) 0.4, P(B) 0.01.
constexpr Counts kAggregate{400, 10, 5, 1000};
// Conditional counts: P(A|X) 0.3, P(B|X) 0.1, P(A and B|X) 0.07.
constexpr Counts kCluster{300, 100, 70, 1000};

TEST(Support, Values) {
  EXPECT_DOUBLE_EQ(support(Counts{10, 10, 5, 1000}), 0.005);
  EXPECT_EQ(support(Counts{10, 10, 0, 1000}), 0.0);
  EXPECT_EQ(support(Counts{7, 7, 7, 7}), 1.0);
  EXPECT_ERROR_KIND(support(Counts{}), ErrorKind::EmptyScope);
}

TEST(Confidence, Values) {
  EXPECT_EQ(confidence(Counts{40, 50, 40, 100}), 1.0);
  EXPECT_EQ(confidence(Counts{40, 50, 0, 100}), 0.0);
  EXPECT_DOUBLE_EQ(confidence(kAggregate), 0.0125);
  EXPECT_ERROR_KIND(confidence(Counts{0, 5, 0, 10}), ErrorKind::UndefinedMeasure);
}

TEST(Interest, Values) {
  EXPECT_DOUBLE_EQ(interest(kAggregate), 1.25);
  EXPECT_NEAR(interest(kCluster), 7.0 / 3.0, 1e-12);
  EXPECT_EQ(interest(Counts{20, 50, 10, 100}), 1.0);
  EXPECT_ERROR_KIND(interest(Counts{0, 5, 0, 10}), ErrorKind::UndefinedMeasure);
  EXPECT_ERROR_KIND(interest(Counts{5, 0, 0, 10}), ErrorKind::UndefinedMeasure);
}

TEST(Cosine, Values) {
  EXPECT_NEAR(cosine(kAggregate), 0.079057, 5e-7);
  EXPECT_EQ(cosine(Counts{9, 9, 9, 40}), 1.0);
  EXPECT_ERROR_KIND(cosine(Counts{0, 5, 0, 10}), ErrorKind::UndefinedMeasure);
}

TEST(Jaccard, Values) {
  EXPECT_NEAR(jaccard(kAggregate), 0.012346, 5e-7);
  EXPECT_EQ(jaccard(Counts{9, 9, 9, 40}), 1.0);
  EXPECT_EQ(jaccard(Counts{9, 9, 0, 40}), 0.0);
  EXPECT_ERROR_KIND(jaccard(Counts{0, 0, 0, 40}), ErrorKind::UndefinedMeasure);
}

TEST(BinaryEntropy, TableValues) {
  const std::pair<double, double> rows[] = {{0.01, 0.0808}, {0.02, 0.1414}, {0.03, 0.1944},
                                            {0.04, 0.2423}, {0.05, 0.2864}, {0.10, 0.4690},
                                            {0.20, 0.7219}, {0.30, 0.8813}, {0.40, 0.9710},
                                            {0.50, 1.0000}};
  for (auto [p, h] : rows) EXPECT_NEAR(binary_entropy(p), h, 1e-4) << p;
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_EQ(binary_entropy(0.5), 1.0);
  EXPECT_ERROR_KIND(binary_entropy(-0.01), ErrorKind::DomainError);
  EXPECT_ERROR_KIND(binary_entropy(1.01), ErrorKind::DomainError);
  EXPECT_ERROR_KIND(binary_entropy(std::nan("")), ErrorKind::DomainError);
}

TEST(BinaryEntropy, SymmetricAndIncreasingToHalf) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 10000; ++k) {
    const double p = u(rng);
    ASSERT_NEAR(binary_entropy(p), binary_entropy(1.0 - p), 1e-12) << p;
  }
  double prev = -1.0;
  for (int k = 0; k <= 5000; ++k) {
    const double h = binary_entropy(k / 10000.0);
    ASSERT_GT(h, prev) << k;
    ASSERT_LE(h, 1.0);
    prev = h;
  }
}

TEST(SlEntropy, Values) {
  EXPECT_NEAR(sl_entropy(0.01, 4, 1), 0.1616, 5e-4);
  EXPECT_NEAR(sl_entropy(0.01, 4, 1), 2.0 * binary_entropy(0.01), 1e-15);
  EXPECT_EQ(sl_entropy(0.5, 2, 1), 1.0);
  EXPECT_EQ(sl_entropy(0.3, 7, 7), 0.0);
  EXPECT_ERROR_KIND(sl_entropy(0.1, 4, 0), ErrorKind::DomainError);
  EXPECT_ERROR_KIND(sl_entropy(0.1, 4, 5), ErrorKind::DomainError);
  EXPECT_ERROR_KIND(sl_entropy(1.5, 4, 2), ErrorKind::DomainError);
}

TEST(SlEntropy, ZeroWhenEverywhereMonotoneInPresenceAndRatioOnly) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> stores(1, 60);
  for (int k = 0; k < 2000; ++k) {
    const double p = u(rng);
    const std::uint32_t y = stores(rng);
    ASSERT_EQ(sl_entropy(p, y, y), 0.0);
    double prev = std::numeric_limits<double>::infinity();
    for (std::uint32_t x = 1; x <= y; ++x) {
      const double v = sl_entropy(p, y, x);
      ASSERT_LE(v, prev);
      ASSERT_GE(v, 0.0);
      prev = v;
    }
    const std::uint32_t x = std::uniform_int_distribution<std::uint32_t>(1, y)(rng);
    for (std::uint32_t c = 2; c <= 5; ++c) {
      ASSERT_NEAR(sl_entropy(p, c * y, c * x), sl_entropy(p, y, x), 1e-12);
    }
  }
}

TEST(MeasureVector, AggregateExample) {
  const auto v = measure_vector(kAggregate, 2);
  EXPECT_DOUBLE_EQ(v.support, 0.005);
  EXPECT_DOUBLE_EQ(*v.interest, 1.25);
  EXPECT_NEAR(*v.cosine, 0.079057, 5e-7);
  EXPECT_NEAR(*v.jaccard, 0.012346, 5e-7);
  EXPECT_DOUBLE_EQ(*v.confidence, 0.0125);
  EXPECT_DOUBLE_EQ(v.entropy, binary_entropy(0.005));
  EXPECT_FALSE(v.sl_entropy.has_value());
}

TEST(MeasureVector, PresenceHandling) {
  EXPECT_FALSE(measure_vector(kCluster, 3, 0u).sl_entropy.has_value());
  EXPECT_EQ(*measure_vector(kCluster, 3, 3u).sl_entropy, 0.0);
  EXPECT_DOUBLE_EQ(*measure_vector(kCluster, 3, 1u).sl_entropy,
                   std::log2(3.0) * binary_entropy(0.07));
  EXPECT_ERROR_KIND(measure_vector(kCluster, 3, 4u), ErrorKind::DomainError);
}

TEST(MeasureVector, UndefinedMeasuresAreEmpty) {
  const auto v = measure_vector(Counts{0, 5, 0, 10}, 1);
  EXPECT_EQ(v.support, 0.0);
  EXPECT_FALSE(v.confidence.has_value());
  EXPECT_FALSE(v.interest.has_value());
  EXPECT_FALSE(v.cosine.has_value());
  EXPECT_EQ(*v.jaccard, 0.0);
  EXPECT_ERROR_KIND(measure_vector(Counts{}, 1), ErrorKind::EmptyScope);
}

TEST(MeasureIdentities, RandomCounts) {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 20000; ++k) {
    const Counts c = testing::random_counts(rng);
    const double s = support(c), i = interest(c), co = cosine(c), j = jaccard(c);
    ASSERT_NEAR(co * co, i * s, 1e-12) << c.n_i << ' ' << c.n_j << ' ' << c.n_ij << ' ' << c.n;
    ASSERT_LE(j, co);
    ASSERT_GE(co, 0.0);
    ASSERT_LE(co, 1.0);
    ASSERT_GE(j, 0.0);
    ASSERT_LE(j, 1.0);
    ASSERT_GE(i, 0.0);
    ASSERT_LE(s, std::min(c.n_i, c.n_j) / static_cast<double>(c.n));
  }
}

TEST(MeasureIdentities, ScaleInvariance) {
  std::mt19937_64 rng(78);
  for (int k = 0; k < 5000; ++k) {
    const Counts c = testing::random_counts(rng, 5000);
    const Count m = std::uniform_int_distribution<Count>(2, 1000)(rng);
    const Counts scaled{c.n_i * m, c.n_j * m, c.n_ij * m, c.n * m};
    const auto a = measure_vector(c, 4, 2u);
    const auto b = measure_vector(scaled, 4, 2u);
    ASSERT_NEAR(a.support, b.support, 1e-15);
    ASSERT_NEAR(*a.confidence, *b.confidence, 1e-15);
    ASSERT_NEAR(*a.interest, *b.interest, 1e-12 * *a.interest);
    ASSERT_NEAR(*a.cosine, *b.cosine, 1e-15);
    ASSERT_NEAR(*a.jaccard, *b.jaccard, 1e-15);
    ASSERT_NEAR(a.entropy, b.entropy, 1e-14);
    ASSERT_NEAR(*a.sl_entropy, *b.sl_entropy, 1e-14);
  }
}

}  // namespace
}  // namespace storemine
