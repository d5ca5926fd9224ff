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

#include "sboxlab/io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sboxlab/error.hpp"
#include "sboxlab/fixtures.hpp"
#include "sboxlab/sampling.hpp"

namespace sboxlab {
namespace {

TEST(Parse, DecimalWithCommentsAndCommas) {
  const SBoxTable s = parse_sbox("# box\n3, 0, 1,\n2 # tail\n", BoxFormat::kDecimal);
  EXPECT_EQ(s.n(), 2);
  EXPECT_EQ(s.m(), 2);
  EXPECT_EQ(s.entries(), (std::vector<std::uint32_t>{3, 0, 1, 2}));
}

TEST(Parse, HexTokensAndPrefixes) {
  EXPECT_EQ(parse_sbox("c 5 6 b", BoxFormat::kHex).entries(),
            (std::vector<std::uint32_t>{12, 5, 6, 11}));
  EXPECT_EQ(parse_sbox("0xC 5 0x6 11", BoxFormat::kDecimal).entries(),
            (std::vector<std::uint32_t>{12, 5, 6, 11}));
}

TEST(Parse, InfersOutputWidth) {
  EXPECT_EQ(parse_sbox("0 1 1 0", BoxFormat::kDecimal).m(), 1);
  EXPECT_EQ(parse_sbox("0 1 2 9", BoxFormat::kDecimal).m(), 4);
  EXPECT_EQ(parse_sbox("0 0 0 0", BoxFormat::kDecimal).m(), 1);
  EXPECT_EQ(parse_sbox("0 1 1 0", BoxFormat::kDecimal, 3).m(), 3);
  EXPECT_THROW(parse_sbox("0 1 2 9", BoxFormat::kDecimal, 2), ParseError);
}

TEST(Parse, SizeErrors) {
  EXPECT_THROW(parse_sbox("1", BoxFormat::kDecimal), ParseError);
  EXPECT_THROW(parse_sbox("", BoxFormat::kDecimal), ParseError);
  EXPECT_THROW(parse_sbox("0 1 2", BoxFormat::kDecimal), ParseError);
}

TEST(Parse, ReportsLineAndColumn) {
  try {
    parse_sbox("0 1\n2 x3\n", BoxFormat::kDecimal);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_EQ(e.column(), 3U);
    EXPECT_NE(std::string(e.what()).find("line 2, column 3"), std::string::npos);
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
}

TEST(Parse, Json) {
  const SBoxTable s = parse_sbox(R"({"n": 2, "m": 3, "values": [0, 1, 2, 3]})", BoxFormat::kJson);
  EXPECT_EQ(s.m(), 3);
  EXPECT_EQ(parse_sbox("[3, 2, 1, 0]", BoxFormat::kJson).m(), 2);
  EXPECT_THROW(parse_sbox(R"({"n": 3, "values": [0, 1, 2, 3]})", BoxFormat::kJson), ParseError);
  EXPECT_THROW(parse_sbox(R"({"values": [0, -1, 2, 3]})", BoxFormat::kJson), ParseError);
  EXPECT_THROW(parse_sbox(R"({"m": "x", "values": [0, 1, 2, 3]})", BoxFormat::kJson), ParseError);
  EXPECT_THROW(parse_sbox(R"({"vals": []})", BoxFormat::kJson), ParseError);
  try {
    parse_sbox("[0, 1,\n 2,, 3]", BoxFormat::kJson);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
}

TEST(Format, TagsAndExtensions) {
  EXPECT_EQ(parse_box_format("dec"), BoxFormat::kDecimal);
  EXPECT_EQ(parse_box_format(to_string(BoxFormat::kHex)), BoxFormat::kHex);
  EXPECT_THROW(parse_box_format("csv"), InvalidInput);
  EXPECT_EQ(format_for_path("a/b.json"), BoxFormat::kJson);
  EXPECT_EQ(format_for_path("b.hex"), BoxFormat::kHex);
  EXPECT_EQ(format_for_path("b.txt"), BoxFormat::kDecimal);
}

TEST(RoundTrip, EveryFormatIsIdentity) {
  Rng rng(301);
  std::vector<SBoxTable> boxes;
  for (int n = 1; n <= 8; ++n) boxes.push_back(random_bijection(n, rng));
  boxes.push_back(random_function_table(5, 3, rng));
  boxes.push_back(fixture("aes-8x8").box);
  for (const auto& s : boxes) {
    for (BoxFormat f : {BoxFormat::kDecimal, BoxFormat::kHex, BoxFormat::kJson}) {
      const SBoxTable back = parse_sbox(format_sbox(s, f), f, f == BoxFormat::kJson ? 0 : s.m());
      EXPECT_EQ(back, s) << to_string(f) << " n = " << s.n();
      EXPECT_EQ(format_sbox(back, f), format_sbox(s, f));
    }
  }
}

TEST(Files, LoadAndErrors) {
  const auto dir = std::filesystem::temp_directory_path() / "sboxlab_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "box.hex").string();
  {
    std::ofstream out(path);
    out << format_sbox(fixture("present-4x4").box, BoxFormat::kHex);
  }
  EXPECT_EQ(load_sbox_file(path, format_for_path(path)), fixture("present-4x4").box);
  EXPECT_THROW(load_sbox_file((dir / "missing.txt").string(), BoxFormat::kDecimal), ParseError);
  std::filesystem::remove_all(dir);
}

TEST(Digest, StableAndSensitive) {
  const SBoxTable& a = fixture("paper-4x4-initial").box;
  EXPECT_EQ(content_digest(a), content_digest(SBoxTable(4, 4, a.entries())));
  EXPECT_EQ(content_digest(a).rfind("fnv1a64:", 0), 0U);
  EXPECT_NE(content_digest(a), content_digest(fixture("paper-4x4-proposed").box));
  EXPECT_NE(content_digest(SBoxTable(2, 2, {0, 1, 2, 3})), content_digest(SBoxTable(2, 3, {0, 1, 2, 3})));
}

}  // namespace
}  // namespace sboxlab
