// Copyright 2026 The sboxlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sboxlab/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "sboxlab/error.hpp"
#include "sboxlab/fixtures.hpp"
#include "sboxlab/sampling.hpp"
#include "sboxlab/search.hpp"

namespace sboxlab::oracle {
namespace {

bool agree(MetricTag tag, double fast, double naive) {
  if (is_integral(tag)) return fast == naive;
  return std::abs(fast - naive) <= 1e-9 * std::max({1.0, std::abs(fast), std::abs(naive)});
}

TEST(NaiveWalsh, SignConvention) {
  const TruthTable one(3, std::vector<std::uint8_t>(8, 1));
  EXPECT_EQ(naive_walsh(one, 0), -8);
  std::vector<std::uint8_t> bits(8);
  for (Mask x = 0; x < 8; ++x) bits[x] = static_cast<std::uint8_t>(parity(x));
  EXPECT_EQ(naive_walsh(TruthTable(3, bits), 7), 8);
}

TEST(NaiveWalsh, RandomPairsAgreeWithFastPath) {
  Rng rng(101);
  for (int i = 0; i < 1000; ++i) {
    const TruthTable f = random_function(6, rng);
    const Mask w = static_cast<Mask>(rng.below(64));
    ASSERT_EQ(walsh_transform(f)[w], naive_walsh(f, w));
  }
}

TEST(NaiveAnfAndRank, AgreeWithFastPaths) {
  Rng rng(102);
  for (int i = 0; i < 300; ++i) {
    const TruthTable f = random_function(5, rng);
    ASSERT_EQ(anf(f), naive_anf(f.bits()));
    std::vector<Mask> rows(6);
    for (auto& r : rows) r = static_cast<Mask>(rng.below(64));
    ASSERT_EQ(gf2_rank(rows), naive_rank(rows));
  }
}

TEST(NaiveMetric, PublishedTransparencyOrder) {
  const SBoxTable& s = fixture("paper-4x4-initial").box;
  const double naive = naive_metric(s, MetricTag::kTransparencyOrder);
  EXPECT_NEAR(naive, 3.533, 0.001);
  EXPECT_TRUE(agree(MetricTag::kTransparencyOrder, fast_metric(s, MetricTag::kTransparencyOrder),
                    naive));
}

TEST(NaiveMetric, IdentityUniformity) {
  EXPECT_EQ(naive_metric(SBoxTable::identity(4), MetricTag::kDifferentialUniformity), 16);
}

TEST(NaiveMetric, EveryTagOnRandomFourBitBijections) {
  Rng rng(103);
  for (int i = 0; i < 100; ++i) {
    const SBoxTable s = random_bijection(4, rng);
    for (MetricTag tag : kAllTags) {
      ASSERT_TRUE(agree(tag, fast_metric(s, tag), naive_metric(s, tag)))
          << to_string(tag) << " box " << i;
    }
  }
}

TEST(NaiveMetric, NonBijectiveBoxes) {
  Rng rng(104);
  for (int i = 0; i < 30; ++i) {
    const SBoxTable s = random_function_table(4, 4, rng);
    for (MetricTag tag : kAllTags) {
      ASSERT_TRUE(agree(tag, fast_metric(s, tag), naive_metric(s, tag))) << to_string(tag);
    }
  }
}

TEST(MetricTags, RoundTripAndUnknown) {
  for (MetricTag tag : kAllTags) EXPECT_EQ(parse_metric_tag(to_string(tag)), tag);
  EXPECT_THROW(parse_metric_tag("entropy"), InvalidInput);
}

TEST(NaiveConfusion, MatchesFastSummary) {
  Rng rng(105);
  for (CcModel model : {CcModel::kSingleBit, CcModel::kHammingSquared,
                        CcModel::kHammingSquaredNorm}) {
    const SBoxTable s = random_bijection(5, rng);
    const CcSummary fast = confusion_summary(s, model);
    const CcSummary naive = naive_confusion_summary(s, model);
    EXPECT_NEAR(fast.min, naive.min, 1e-12);
    EXPECT_NEAR(fast.mean, naive.mean, 1e-12);
    EXPECT_NEAR(fast.max, naive.max, 1e-12);
    EXPECT_NEAR(fast.variance, naive.variance, 1e-12);
  }
}

TEST(BruteBijectivity, Examples) {
  EXPECT_TRUE(brute_bijectivity(fixture("paper-4x4-proposed").box));
  EXPECT_FALSE(brute_bijectivity(SBoxTable(2, 2, {0, 1, 1, 3})));
  EXPECT_FALSE(brute_bijectivity(SBoxTable(2, 3, {0, 1, 2, 3})));
}

TEST(BruteBijectivity, AgreesWithRankOnAllFourBitCandidates) {
  const ComponentSet g = ComponentSet::build(fixture("paper-4x4-initial").box);
  int checked = 0;
  for (Mask a = 0; a < 16; ++a) {
    for (Mask b = a + 1; b < 16; ++b) {
      for (Mask c = b + 1; c < 16; ++c) {
        for (Mask d = c + 1; d < 16; ++d) {
          const MaskCandidate cand(4, {a, b, c, d});
          ASSERT_EQ(is_bijective(cand), brute_bijectivity(assemble(cand, g)));
          ++checked;
        }
      }
    }
  }
  EXPECT_EQ(checked, 1820);
}

TEST(GroupCounts, ProductFormula) {
  EXPECT_EQ(invertible_subset_count(1), 1U);
  EXPECT_EQ(invertible_subset_count(2), 3U);
  EXPECT_EQ(invertible_subset_count(3), 28U);
  EXPECT_EQ(invertible_subset_count(4), 840U);
  EXPECT_EQ(invertible_subset_count(5), 83328U);
  EXPECT_NEAR(invertible_fraction(1), 0.5, 1e-15);
  EXPECT_NEAR(invertible_fraction(3), 0.328125, 1e-15);
}

}  // namespace
}  // namespace sboxlab::oracle
