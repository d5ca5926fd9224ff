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

#include "sboxlab/fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "sboxlab/calibration.hpp"
#include "sboxlab/error.hpp"
#include "sboxlab/metrics.hpp"

namespace sboxlab {
namespace {

bool has_note(const Fixture& f, const std::string& prefix) {
  return std::any_of(f.notes.begin(), f.notes.end(),
                     [&](const std::string& n) { return n.rfind(prefix, 0) == 0; });
}

TEST(Fixtures, AllLoadAndNameTheirSource) {
  for (const auto& name : fixture_names()) {
    const Fixture& f = fixture(name);
    EXPECT_EQ(f.name, name);
    EXPECT_FALSE(f.source.empty());
    EXPECT_TRUE(f.box.is_permutation()) << name;
    EXPECT_EQ(f.box.n(), f.box.m());
    EXPECT_TRUE(is_fixture(name));
  }
  EXPECT_EQ(fixture("paper-4x4-initial").source, "Table 7");
  EXPECT_EQ(fixture("paper-8x8-proposed").source, "Table 15");
  EXPECT_FALSE(is_fixture("paper-9x9"));
  EXPECT_THROW(fixture("paper-9x9"), InvalidInput);
}

TEST(Fixtures, CachedInstancesAreShared) {
  EXPECT_EQ(&fixture("paper-6x6-initial"), &fixture("paper-6x6-initial"));
}

TEST(Fixtures, FiveBitRepairIsRecorded) {
  const Fixture& f = fixture("paper-5x5-initial");
  EXPECT_TRUE(has_note(f, "applied repair: index 14 16 -> 14"));
  EXPECT_EQ(f.box[14], 14U);
  EXPECT_EQ(f.box[9], 16U);
  EXPECT_EQ(differential_uniformity(f.box), 2);
}

TEST(Fixtures, SixBitReadingOrderIsRecorded) {
  const Fixture& f = fixture("paper-6x6-initial");
  EXPECT_TRUE(has_note(f, "selected row-major reading"));
  EXPECT_EQ(f.box[0], 22U);
  EXPECT_EQ(f.box[1], 25U);
  EXPECT_TRUE(output_mix_between(f.box, fixture("paper-6x6-proposed").box).has_value());
}

TEST(Fixtures, EightBitStripAndRepairAreRecorded) {
  const Fixture& f = fixture("paper-8x8-proposed");
  EXPECT_TRUE(has_note(f, "stripped trailing column"));
  EXPECT_TRUE(has_note(f, "applied repair: index 142 232 -> 242"));
  EXPECT_EQ(f.box.size(), 256U);
  EXPECT_EQ(nonlinearity(f.box), 112);
}

TEST(Fixtures, AesFirstEntries) {
  const SBoxTable& aes = fixture("aes-8x8").box;
  EXPECT_EQ(aes[0x00], 0x63U);
  EXPECT_EQ(aes[0x01], 0x7cU);
  EXPECT_EQ(aes[0x53], 0xedU);
  EXPECT_EQ(aes[0xff], 0x16U);
}

TEST(Fixtures, ProposedBoxesAreOutputMixesOfInitialBoxes) {
  const std::pair<const char*, const char*> pairs[] = {
      {"paper-4x4-initial", "paper-4x4-proposed"},
      {"paper-5x5-initial", "paper-5x5-proposed"},
      {"paper-6x6-initial", "paper-6x6-proposed"},
      {"paper-7x7-initial", "paper-7x7-proposed"},
  };
  for (const auto& [from, to] : pairs) {
    const auto m = output_mix_between(fixture(from).box, fixture(to).box);
    ASSERT_TRUE(m.has_value()) << from;
    EXPECT_EQ(apply_mix(fixture(from).box, *m), fixture(to).box);
  }
  const auto m4 = output_mix_between(fixture("paper-4x4-initial").box,
                                     fixture("paper-4x4-proposed").box);
  EXPECT_EQ(std::vector<Mask>(m4->rows().begin(), m4->rows().end()),
            (std::vector<Mask>{13, 8, 7, 6}));
}

TEST(Calibration, SubstitutionRepairs) {
  const std::vector<std::uint32_t> printed = {0, 1, 1, 3};
  const auto repairs = substitution_repairs(printed);
  ASSERT_EQ(repairs.size(), 2U);
  EXPECT_EQ(repairs[0].position, 1U);
  EXPECT_EQ(repairs[1].position, 2U);
  EXPECT_EQ(repairs[0].values, (std::vector<std::uint32_t>{0, 2, 1, 3}));
  EXPECT_TRUE(substitution_repairs(std::vector<std::uint32_t>{0, 1, 2, 3}).empty());
  EXPECT_TRUE(substitution_repairs(std::vector<std::uint32_t>{0, 0, 0, 3}).empty());
  EXPECT_TRUE(substitution_repairs(std::vector<std::uint32_t>{0, 1, 2, 9}).empty());
}

TEST(Calibration, StripTrailingColumn) {
  const std::vector<std::uint32_t> rows = {1, 2, 1, 3, 4, 3};
  EXPECT_EQ(strip_trailing_column(rows, 3), (std::vector<std::uint32_t>{1, 2, 3, 4}));
  EXPECT_THROW(strip_trailing_column(std::vector<std::uint32_t>{1, 2, 2}, 3), InvalidInput);
  EXPECT_THROW(strip_trailing_column(rows, 4), InvalidInput);
}

TEST(Calibration, ColumnMajor) {
  const std::vector<std::uint32_t> printed = {0, 1, 2, 3, 4, 5};
  EXPECT_EQ(column_major(printed, 3), (std::vector<std::uint32_t>{0, 3, 1, 4, 2, 5}));
  EXPECT_THROW(column_major(printed, 4), InvalidInput);
}

TEST(Calibration, OutputMixAbsentForUnrelatedBoxes) {
  EXPECT_FALSE(output_mix_between(fixture("present-4x4").box,
                                  fixture("paper-4x4-initial").box).has_value());
}

TEST(Calibration, TargetsMatching) {
  MetricTargets t;
  t.nl = 4;
  t.to = 3.533;
  EXPECT_TRUE(matches_targets(fixture("paper-4x4-initial").box, t));
  t.to = 3.466;
  EXPECT_FALSE(matches_targets(fixture("paper-4x4-initial").box, t));
  EXPECT_EQ(describe_against(fixture("paper-4x4-initial").box, t), "NL 4, TO 3.5333");
}

}  // namespace
}  // namespace sboxlab
