// Copyright 2026 The SwarmAttack Authors.
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

#include "swarmattack/random.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace swarmattack {
namespace {

// The standard pins mt19937_64's 10000th output for the default seed, so the
// engine underneath Rng is reproducible everywhere.
TEST(RngTest, EngineMatchesStandardReferenceValue) {
  Rng rng(5489u);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.next();
  EXPECT_EQ(x, 9981545732273789042ULL);
}

TEST(RngTest, UniformIsTopFiftyThreeBits) {
  Rng a(42);
  std::mt19937_64 ref(42);
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform();
    EXPECT_EQ(u, static_cast<double>(ref() >> 11) / 9007199254740992.0);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(RngTest, BelowStaysInRangeAndIsRoughlyUniform) {
  Rng rng(7);
  constexpr std::size_t kBins = 6;
  constexpr int kDraws = 60000;
  std::vector<int> counts(kBins, 0);
  for (int i = 0; i < kDraws; ++i) {
    const std::size_t x = rng.below(kBins);
    ASSERT_LT(x, kBins);
    ++counts[x];
  }
  double chi2 = 0.0;
  const double expected = static_cast<double>(kDraws) / kBins;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // 5 degrees of freedom; the 0.999 quantile is 20.5.
  EXPECT_LT(chi2, 20.5);
}

TEST(RngTest, BelowOneIsZero) {
  Rng rng(1);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(rng.below(1), 0u);
}

TEST(RngTest, SameSeedSameStream) {
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(DeriveSeedTest, DistinctStreamsGiveDistinctSeeds) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 1000; ++s) seen.insert(derive_seed(3, s));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(derive_seed(3, 17), derive_seed(3, 17));
  EXPECT_NE(derive_seed(3, 17), derive_seed(4, 17));
}

}  // namespace
}  // namespace swarmattack
