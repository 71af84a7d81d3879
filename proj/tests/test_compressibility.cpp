// Copyright 2026 The kcompress Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "kcompress/compressibility.hpp"
#include "kcompress/oracles.hpp"
#include "test_support.hpp"

namespace kcompress {
namespace {

using testing::q;

TEST(GenerateOrbit, Successor) {
  EXPECT_EQ(generate_orbit(Polynomial{1, 1}, q(1), 5), (std::vector<Rational>{1, 2, 3, 4, 5}));
}

TEST(GenerateOrbit, Logistic) {
  EXPECT_EQ(generate_orbit(Polynomial{0, 4, -4}, q(3, 20), 4),
            (std::vector<Rational>{q(3, 20), q(51, 100), q(2499, 2500), q(2499, 1562500)}));
}

TEST(GenerateOrbit, FixedPointCollides) {
  try {
    generate_orbit(Polynomial{0, 1}, q(1), 2);
    FAIL() << "expected OrbitCollision";
  } catch (const OrbitCollision &e) {
    EXPECT_EQ(e.first(), 0u);
    EXPECT_EQ(e.second(), 1u);
  }
}

TEST(VerifySequence, Examples) {
  std::vector<Rational> up{1, 2, 3, 4, 5, 6};
  EXPECT_EQ(verify_sequence(up, 1), (Polynomial{1, 1}));
  std::vector<Rational> broken{1, 2, 3, 4, 6, 5};
  EXPECT_FALSE(verify_sequence(broken, 1));
  auto orbit = testing::logistic_orbit();
  EXPECT_EQ(verify_sequence(orbit, 2), (Polynomial{0, 4, -4}));
}

TEST(Decide, SuccessorSet) {
  auto d = decide_k_compressible(NumberSet::iota(6), 1);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->compressed.coefficients, (Polynomial{1, 1}));
  EXPECT_EQ(d->compressed.start, q(1));
  EXPECT_EQ(d->witness.order, (std::vector<Rational>{1, 2, 3, 4, 5, 6}));
}

TEST(Decide, ShuffledLogisticOrbit) {
  std::mt19937_64 rng(1);
  auto orbit = testing::logistic_orbit();
  testing::shuffle(orbit, rng);
  auto d = decide_k_compressible(NumberSet(orbit), 2);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->compressed.coefficients, (Polynomial{0, 4, -4}));
  EXPECT_EQ(d->compressed.start, q(3, 20));
}

TEST(Decide, TrivialRegimeUsesAscendingOrder) {
  auto d = decide_k_compressible(NumberSet::iota(6), 4);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->witness.order, NumberSet::iota(6).elements());
  EXPECT_EQ(d->compressed.length, 6u);
}

TEST(Decide, RejectsZeroDegree) {
  EXPECT_THROW(decide_k_compressible(NumberSet::iota(6), 0), PreconditionViolated);
}

TEST(Decide, SquaresAreNotLinear) {
  EXPECT_FALSE(decide_k_compressible(NumberSet{0, 1, 4, 9, 16}, 1));
}

TEST(Count, SmallTables) {
  EXPECT_EQ(count_compressing_sequences(NumberSet::iota(6), 3), 8);
  EXPECT_EQ(count_compressing_sequences(NumberSet::iota(6), 2), 2);
  EXPECT_EQ(count_compressing_sequences(NumberSet::iota(6), 4), 720);
  EXPECT_EQ(count_compressing_sequences(NumberSet::iota(7), 4), 66);
  EXPECT_EQ(count_compressing_sequences(NumberSet::iota(7), 3), 2);
}

TEST(Count, IndependentOfJobs) {
  auto s = NumberSet::iota(8);
  BigInt one = count_compressing_sequences(s, 5, 1);
  EXPECT_EQ(one, 68);
  EXPECT_EQ(count_compressing_sequences(s, 5, 3), one);
}

TEST(Count, MatchesOracleOnIotaSets) {
  for (std::size_t n = 4; n <= 7; ++n)
    for (std::size_t k = 1; k <= n - 2; ++k)
      EXPECT_EQ(count_compressing_sequences(NumberSet::iota(n), k),
                oracles::brute_force_count(NumberSet::iota(n), k))
          << "N=" << n << " K=" << k;
}

TEST(Count, MonotoneInK) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> v;
    while (v.size() < 7) {
      Rational x = testing::random_rational(rng, 12, 1);
      if (std::find(v.begin(), v.end(), x) == v.end())
        v.push_back(x);
    }
    NumberSet s(v);
    for (std::size_t k = 1; k + 2 < s.size(); ++k)
      EXPECT_LE(count_compressing_sequences(s, k), count_compressing_sequences(s, k + 1));
  }
}

TEST(Count, ExactFieldAgreesWithModularFilter) {
  // Force the exact path and compare with the default.
  for (std::size_t k = 1; k <= 4; ++k) {
    auto s = NumberSet::iota(7);
    ExactField field(s);
    OrbitSearch<ExactField> search(field, s.size(), k);
    std::size_t exact = 0;
    search.run([&](std::span<const Index>) {
      ++exact;
      return true;
    });
    EXPECT_EQ(BigInt(static_cast<unsigned long>(exact)), count_compressing_sequences(s, k)) << k;
  }
}

TEST(Enumerate, TwoQuadraticWitnessesForIotaSix) {
  auto w = enumerate_witnesses(NumberSet::iota(6), 2, 10);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0].order, (std::vector<Rational>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(w[0].polynomial, (Polynomial{1, 1}));
  EXPECT_EQ(w[1].order, (std::vector<Rational>{6, 5, 4, 3, 2, 1}));
  EXPECT_EQ(w[1].polynomial, (Polynomial{-1, 1}));
}

TEST(Enumerate, LimitIsAPrefix) {
  auto all = enumerate_witnesses(NumberSet::iota(6), 3, 100);
  auto some = enumerate_witnesses(NumberSet::iota(6), 3, 4);
  ASSERT_EQ(all.size(), 8u);
  ASSERT_EQ(some.size(), 4u);
  EXPECT_TRUE(std::equal(some.begin(), some.end(), all.begin()));
  for (const auto &w : all)
    EXPECT_EQ(verify_sequence(w.order, 3), w.polynomial);
}

TEST(Enumerate, EmptyWhenNotCompressible) {
  EXPECT_TRUE(enumerate_witnesses(NumberSet{0, 1, 4, 9, 16}, 1, 1).empty());
  EXPECT_THROW(enumerate_witnesses(NumberSet::iota(6), 2, 0), PreconditionViolated);
}

TEST(Compress, FirstHundred) {
  auto c = compress(NumberSet::iota(100));
  EXPECT_EQ(c.degree_bound, 1u);
  EXPECT_EQ(c.coefficients, (Polynomial{1, 1}));
  EXPECT_EQ(c.start, q(1));
  EXPECT_EQ(c.length, 100u);
  EXPECT_EQ(decompress(c), NumberSet::iota(100));
}

TEST(Compress, LogisticOrbit) {
  NumberSet s(testing::logistic_orbit());
  auto c = compress(s);
  EXPECT_EQ(c.degree_bound, 2u);
  EXPECT_EQ(c.coefficients, (Polynomial{0, 4, -4}));
  EXPECT_EQ(c.start, q(3, 20));
  EXPECT_EQ(c.length, 10u);
  EXPECT_EQ(decompress(c), s);
}

TEST(Compress, ReplacedElementMinimalK) {
  NumberSet s{1, 2, 3, 4, 5, 100};
  auto c = compress(s);
  EXPECT_EQ(decompress(c), s);
  EXPECT_GT(oracles::brute_force_count(s, c.degree_bound), 0);
  if (c.degree_bound > 1) {
    EXPECT_EQ(oracles::brute_force_count(s, c.degree_bound - 1), 0);
  }
}

TEST(Decompress, IdentityRecordCollides) {
  CompressedSet bad{1, Polynomial{0, 1}, q(1), 5};
  EXPECT_THROW(decompress(bad), OrbitCollision);
}

TEST(Affine, Examples) {
  auto s = NumberSet::iota(6);
  EXPECT_EQ(affine_image(s, 1, 0), s);
  auto img = affine_image(s, 2, 3);
  EXPECT_EQ(img, (NumberSet{5, 7, 9, 11, 13, 15}));
  auto d = decide_k_compressible(img, 1);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->compressed.coefficients, (Polynomial{2, 1}));
  EXPECT_THROW(affine_image(s, 0, 1), DegenerateScale);
}

TEST(Affine, PreservesCompressibility) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t k = 1 + trial % 3;
    auto [f, orbit] = testing::random_orbit(rng, k, k + 4);
    NumberSet s(orbit);
    NumberSet img = affine_image(s, testing::random_nonzero_rational(rng), testing::random_rational(rng));
    EXPECT_TRUE(decide_k_compressible(img, k)) << to_string(f);
  }
}

TEST(UniqueLinear, Examples) {
  auto r = check_unique_linear(NumberSet::iota(6));
  EXPECT_TRUE(r.is_1_compressible);
  EXPECT_EQ(r.witness_count, 2u);
  auto g = check_unique_linear(NumberSet(generate_orbit(Polynomial{1, 2}, q(1), 6)));
  EXPECT_TRUE(g.is_1_compressible);
  EXPECT_EQ(g.witness_count, 2u);
  auto sq = check_unique_linear(NumberSet{0, 1, 4, 9, 16});
  EXPECT_FALSE(sq.is_1_compressible);
  EXPECT_EQ(sq.witness_count, 0u);
  EXPECT_EQ(oracles::brute_force_count(NumberSet{0, 1, 4, 9, 16}, 1), 0);
  EXPECT_THROW(check_unique_linear(NumberSet::iota(4)), PreconditionViolated);
}

TEST(UniqueLinear, WitnessesComeInReversalPairs) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> v;
    while (v.size() < 6) {
      Rational x = testing::random_rational(rng, 6, 1);
      if (std::find(v.begin(), v.end(), x) == v.end())
        v.push_back(x);
    }
    NumberSet s(v);
    auto all = enumerate_witnesses(s, 1, 1000);
    EXPECT_EQ(all.size() % 2, 0u);
    std::set<std::vector<Rational>> orders;
    for (const auto &w : all)
      orders.insert(w.order);
    for (const auto &w : all) {
      std::vector<Rational> rev(w.order.rbegin(), w.order.rend());
      EXPECT_TRUE(orders.count(rev));
    }
  }
}

} // namespace
} // namespace kcompress
