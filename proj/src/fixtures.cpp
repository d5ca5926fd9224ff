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

#include <cstdint>
#include <map>
#include <mutex>
#include <span>

#include "sboxlab/calibration.hpp"
#include "sboxlab/error.hpp"

namespace sboxlab {
namespace {

constexpr std::uint32_t kInitial4[] = {
    8, 0, 1, 10, 9, 4, 2, 6,
    11, 7, 14, 12, 5, 15, 13, 3,
};

constexpr std::uint32_t kProposed4[] = {
    3, 0, 5, 15, 6, 13, 12, 1,
    10, 4, 2, 14, 8, 7, 11, 9,
};

constexpr std::uint32_t kInitial5Printed[] = {
    8, 0, 26, 17, 22, 28, 29, 24,
    19, 16, 4, 6, 7, 18, 16, 23,
    13, 31, 25, 30, 2, 20, 12, 1,
    5, 3, 15, 27, 9, 21, 10, 11,
};

constexpr std::uint32_t kProposed5[] = {
    24, 0, 23, 22, 12, 28, 13, 31,
    30, 7, 3, 11, 26, 15, 19, 29,
    10, 5, 14, 20, 8, 4, 27, 17,
    18, 25, 2, 6, 9, 21, 16, 1,
};

constexpr std::uint32_t kInitial6Printed[] = {
    22, 25, 37, 10, 14, 5, 60, 15,
    0, 7, 26, 63, 50, 59, 48, 23,
    6, 62, 24, 38, 16, 58, 32, 61,
    43, 20, 29, 4, 52, 33, 35, 12,
    13, 56, 44, 54, 51, 47, 42, 27,
    28, 40, 11, 55, 9, 36, 41, 45,
    46, 8, 31, 34, 17, 2, 18, 19,
    30, 39, 49, 1, 3, 57, 21, 53,
};

constexpr std::uint32_t kProposed6[] = {
    2, 30, 47, 53, 59, 41, 49, 28,
    0, 11, 27, 52, 10, 58, 40, 37,
    44, 19, 57, 42, 46, 29, 6, 22,
    20, 32, 16, 14, 38, 33, 3, 25,
    62, 63, 31, 4, 45, 26, 51, 60,
    55, 17, 18, 35, 48, 8, 54, 56,
    61, 23, 50, 36, 9, 34, 12, 43,
    21, 13, 15, 39, 5, 24, 7, 1,
};

constexpr std::uint32_t kInitial7[] = {
    66, 114, 56, 86, 115, 85, 11, 78,
    124, 71, 44, 3, 41, 87, 4, 81,
    104, 10, 34, 15, 108, 48, 2, 16,
    95, 92, 65, 67, 55, 62, 28, 97,
    76, 57, 12, 96, 6, 18, 120, 91,
    54, 35, 79, 100, 109, 69, 121, 9,
    36, 126, 111, 77, 74, 45, 125, 122,
    73, 90, 26, 98, 58, 80, 51, 72,
    118, 33, 21, 116, 123, 117, 82, 61,
    110, 64, 68, 99, 19, 37, 46, 53,
    83, 31, 50, 24, 93, 89, 52, 60,
    84, 22, 63, 107, 25, 38, 88, 7,
    39, 30, 17, 13, 119, 102, 8, 14,
    5, 29, 20, 127, 70, 106, 43, 112,
    59, 49, 101, 1, 47, 113, 32, 0,
    23, 94, 40, 75, 27, 103, 105, 42,
};

constexpr std::uint32_t kProposed7[] = {
    52, 17, 127, 112, 58, 18, 56, 123,
    23, 10, 59, 98, 5, 91, 21, 7,
    83, 19, 61, 45, 70, 37, 73, 81,
    1, 99, 86, 31, 82, 35, 30, 34,
    50, 84, 79, 9, 92, 24, 2, 20,
    121, 22, 80, 28, 109, 67, 41, 113,
    97, 94, 36, 25, 110, 16, 60, 75,
    12, 63, 66, 64, 54, 44, 71, 39,
    4, 95, 111, 77, 96, 102, 101, 65,
    15, 125, 104, 107, 51, 74, 114, 27,
    78, 124, 108, 11, 72, 93, 48, 106,
    57, 13, 8, 49, 32, 40, 118, 119,
    3, 87, 122, 100, 47, 85, 90, 6,
    62, 53, 68, 117, 33, 26, 76, 88,
    29, 14, 55, 43, 89, 115, 116, 0,
    38, 42, 46, 69, 105, 126, 120, 103,
};

constexpr std::uint32_t kProposed8Printed[] = {
    62, 248, 28, 48, 229, 103, 173, 102, 33, 116, 149, 194, 97, 147, 228, 134, 62,
    109, 223, 110, 27, 25, 70, 120, 208, 11, 245, 58, 209, 73, 211, 212, 183, 109,
    184, 203, 138, 187, 166, 179, 195, 135, 159, 142, 240, 78, 186, 141, 84, 254, 184,
    90, 178, 23, 136, 54, 29, 61, 133, 51, 76, 193, 231, 9, 246, 232, 225, 90,
    252, 4, 155, 44, 31, 177, 17, 77, 143, 94, 217, 131, 46, 96, 121, 190, 252,
    251, 151, 130, 170, 216, 64, 26, 56, 243, 214, 249, 146, 160, 0, 52, 224, 251,
    156, 127, 148, 132, 128, 201, 181, 60, 81, 2, 47, 20, 124, 85, 105, 153, 156,
    80, 111, 157, 244, 63, 67, 83, 137, 71, 117, 182, 32, 139, 112, 235, 41, 80,
    114, 74, 219, 3, 57, 45, 10, 140, 113, 145, 108, 18, 13, 144, 232, 50, 114,
    238, 119, 191, 162, 21, 104, 196, 88, 14, 233, 72, 91, 107, 230, 176, 226, 238,
    168, 30, 165, 68, 43, 125, 253, 164, 118, 115, 40, 206, 218, 188, 175, 255, 168,
    19, 180, 204, 174, 37, 234, 172, 16, 49, 75, 213, 66, 189, 227, 126, 122, 19,
    199, 106, 36, 7, 98, 247, 198, 236, 69, 154, 167, 6, 169, 222, 5, 161, 199,
    210, 171, 192, 53, 197, 1, 42, 79, 59, 35, 100, 99, 202, 55, 93, 22, 210,
    15, 129, 200, 86, 65, 152, 207, 158, 8, 38, 39, 92, 89, 250, 24, 82, 15,
    220, 12, 101, 123, 150, 205, 87, 221, 241, 185, 215, 237, 95, 163, 34, 239, 220,
};


constexpr std::uint32_t kPresent[] = {
    0xC, 0x5, 0x6, 0xB, 0x9, 0x0, 0xA, 0xD,
    0x3, 0xE, 0xF, 0x8, 0x4, 0x7, 0x1, 0x2,
};

constexpr std::uint32_t kPrince[] = {
    0xB, 0xF, 0x3, 0x2, 0xA, 0xC, 0x9, 0x1,
    0x6, 0x7, 0x8, 0x0, 0xE, 0x5, 0xD, 0x4,
};

constexpr std::uint32_t kAes[] = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16,
};

int log2_size(std::size_t size) {
  int n = 0;
  while ((std::size_t{1} << n) < size) ++n;
  return n;
}

SBoxTable make_box(std::span<const std::uint32_t> values) {
  const int n = log2_size(values.size());
  return SBoxTable(n, n, std::vector<std::uint32_t>(values.begin(), values.end()));
}

Fixture plain(std::string name, std::string source,
              std::span<const std::uint32_t> values) {
  return Fixture{std::move(name), std::move(source), make_box(values), {}};
}

// Picks the unique single-substitution repair reproducing the targets.
SBoxTable repair_by_targets(std::span<const std::uint32_t> values,
                            const MetricTargets& targets,
                            std::vector<std::string>& notes) {
  const auto repairs = substitution_repairs(values);
  const SubstitutionRepair* chosen = nullptr;
  int matching = 0;
  for (const auto& r : repairs) {
    const SBoxTable box = make_box(r.values);
    const bool ok = matches_targets(box, targets);
    notes.push_back("candidate repair: index " + std::to_string(r.position) + " " +
                    std::to_string(r.removed) + " -> " + std::to_string(r.inserted) +
                    " gives " + describe_against(box, targets) +
                    (ok ? " (matches)" : " (rejected)"));
    if (ok) {
      ++matching;
      chosen = &r;
    }
  }
  if (matching != 1) {
    throw Error(ErrorCode::kVerification,
                "no unique substitution repair reproduces the reference metrics");
  }
  notes.push_back("applied repair: index " + std::to_string(chosen->position) + " " +
                  std::to_string(chosen->removed) + " -> " +
                  std::to_string(chosen->inserted));
  return make_box(chosen->values);
}

Fixture initial5() {
  Fixture f{"paper-5x5-initial", "Table 9", SBoxTable::identity(5), {}};
  f.notes.push_back("printed table repeats 16 and omits 14");
  MetricTargets targets;
  targets.du = 2;
  targets.snr = 2.361;
  targets.to = 4.612;
  targets.tolerance = 0.001;
  f.box = repair_by_targets(kInitial5Printed, targets, f.notes);
  return f;
}

// The printed row order is ambiguous: row-major and column-major readings are
// both evaluated, and the one related to the proposed box by an output mix
// is kept.
Fixture initial6() {
  Fixture f{"paper-6x6-initial", "Table 11", SBoxTable::identity(6), {}};
  const SBoxTable proposed = make_box(kProposed6);
  const SBoxTable rows = make_box(kInitial6Printed);
  const SBoxTable cols = make_box(column_major(kInitial6Printed, 8));
  const bool rows_ok = output_mix_between(rows, proposed).has_value();
  const bool cols_ok = output_mix_between(cols, proposed).has_value();
  f.notes.push_back(std::string("row-major reading ") +
                    (rows_ok ? "is" : "is not") + " an output mix of Table 12");
  f.notes.push_back(std::string("column-major reading ") +
                    (cols_ok ? "is" : "is not") + " an output mix of Table 12");
  if (rows_ok == cols_ok) {
    throw Error(ErrorCode::kVerification, "reading order of Table 11 is undecidable");
  }
  f.box = rows_ok ? rows : cols;
  f.notes.push_back(std::string("selected ") + (rows_ok ? "row-major" : "column-major") +
                    " reading");
  return f;
}

Fixture proposed8() {
  Fixture f{"paper-8x8-proposed", "Table 15", SBoxTable::identity(8), {}};
  const auto stripped = strip_trailing_column(kProposed8Printed, 17);
  f.notes.push_back("stripped trailing column (each row ends with a copy of its first value)");
  f.notes.push_back("stripped table repeats 232 and omits 242");
  MetricTargets targets;
  targets.nl = 112;
  targets.du = 4;
  targets.snr = 8.758;
  targets.to = 7.85;
  targets.tolerance = 0.01;
  f.box = repair_by_targets(stripped, targets, f.notes);
  return f;
}

Fixture build(std::string_view name) {
  if (name == "paper-4x4-initial") return plain("paper-4x4-initial", "Table 7", kInitial4);
  if (name == "paper-4x4-proposed") return plain("paper-4x4-proposed", "Table 8", kProposed4);
  if (name == "paper-5x5-initial") return initial5();
  if (name == "paper-5x5-proposed") return plain("paper-5x5-proposed", "Table 10", kProposed5);
  if (name == "paper-6x6-initial") return initial6();
  if (name == "paper-6x6-proposed") return plain("paper-6x6-proposed", "Table 12", kProposed6);
  if (name == "paper-7x7-initial") return plain("paper-7x7-initial", "Table 13", kInitial7);
  if (name == "paper-7x7-proposed") return plain("paper-7x7-proposed", "Table 14", kProposed7);
  if (name == "paper-8x8-proposed") return proposed8();
  if (name == "aes-8x8") {
    Fixture f = plain("aes-8x8", "AES (FIPS-197)", kAes);
    f.notes.push_back("stand-in for the unpublished 8x8 initial box of Table 6");
    return f;
  }
  if (name == "present-4x4") return plain("present-4x4", "PRESENT", kPresent);
  if (name == "prince-4x4") return plain("prince-4x4", "PRINCE", kPrince);
  throw InvalidInput("unknown fixture: " + std::string(name));
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "paper-4x4-initial", "paper-4x4-proposed", "paper-5x5-initial",
      "paper-5x5-proposed", "paper-6x6-initial", "paper-6x6-proposed",
      "paper-7x7-initial", "paper-7x7-proposed", "paper-8x8-proposed",
      "aes-8x8", "present-4x4", "prince-4x4"};
  return names;
}

bool is_fixture(std::string_view name) {
  for (const auto& n : fixture_names()) {
    if (n == name) return true;
  }
  return false;
}

const Fixture& fixture(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, Fixture, std::less<>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  Fixture f = build(name);
  return cache.emplace(f.name, std::move(f)).first->second;
}

}  // namespace sboxlab
