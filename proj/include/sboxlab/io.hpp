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

// S-box file formats.
//
//   decimal  integers separated by whitespace and/or commas, row-major; a
//            token may carry a 0x prefix to be read as hex; '#' starts a
//            comment that runs to the end of the line.
//   hex      same layout, every token read as hex (0x prefix optional).
//   json     {"n": 4, "m": 4, "values": [...]} or a bare array.

#ifndef SBOXLAB_IO_HPP_
#define SBOXLAB_IO_HPP_

#include <string>
#include <string_view>

#include "sboxlab/boolfn.hpp"

namespace sboxlab {

enum class BoxFormat { kDecimal, kHex, kJson };

std::string_view to_string(BoxFormat format);
BoxFormat parse_box_format(std::string_view tag);

// n is log2 of the entry count (at least 2 entries); m is the bit width of
// the largest entry unless `m_override` > 0. Throws ParseError.
SBoxTable parse_sbox(std::string_view text, BoxFormat format, int m_override = 0);

std::string format_sbox(const SBoxTable& s, BoxFormat format);

SBoxTable load_sbox_file(const std::string& path, BoxFormat format,
                         int m_override = 0);

// Guess the format from the file extension (.json, .hex), else decimal.
BoxFormat format_for_path(std::string_view path);

// "fnv1a64:<16 hex digits>" over n, m and the entries.
std::string content_digest(const SBoxTable& s);

}  // namespace sboxlab

#endif  // SBOXLAB_IO_HPP_
