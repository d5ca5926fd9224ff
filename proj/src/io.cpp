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

#include <bit>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sboxlab/error.hpp"

namespace sboxlab {
namespace {

SBoxTable from_values(std::vector<std::uint64_t> values, int m_override) {
  const std::size_t count = values.size();
  if (count < 2 || (count & (count - 1)) != 0) {
    throw ParseError("entry count " + std::to_string(count) +
                     " is not a power of two >= 2");
  }
  const int n = std::countr_zero(count);
  if (n > kMaxVariables) throw ParseError("too many entries");
  std::uint64_t largest = 0;
  for (auto v : values) largest = std::max(largest, v);
  int m = m_override > 0 ? m_override : std::max(1, static_cast<int>(std::bit_width(largest)));
  if (m > kMaxVariables || (m_override > 0 && largest >= (std::uint64_t{1} << m))) {
    throw ParseError("entry " + std::to_string(largest) + " does not fit in " +
                     std::to_string(m) + " output bits");
  }
  std::vector<std::uint32_t> entries(values.begin(), values.end());
  return SBoxTable(n, m, std::move(entries));
}

std::vector<std::uint64_t> parse_tokens(std::string_view text, bool all_hex) {
  std::vector<std::uint64_t> values;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      advance();
      continue;
    }
    const std::size_t tok_line = line;
    const std::size_t tok_col = column;
    std::string token;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != ',' && text[i] != '#') {
      token.push_back(text[i]);
      advance();
    }
    bool hex = all_hex;
    std::string digits = token;
    if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
      hex = true;
      digits = digits.substr(2);
    }
    std::uint64_t v = 0;
    bool ok = !digits.empty() && digits.size() <= 9;
    for (char d : digits) {
      const auto u = static_cast<unsigned char>(d);
      if (hex && std::isxdigit(u)) {
        v = v * 16 + static_cast<std::uint64_t>(
                         std::isdigit(u) ? d - '0' : std::tolower(u) - 'a' + 10);
      } else if (!hex && std::isdigit(u)) {
        v = v * 10 + static_cast<std::uint64_t>(d - '0');
      } else {
        ok = false;
        break;
      }
    }
    if (!ok) throw ParseError("invalid entry '" + token + "'", tok_line, tok_col);
    values.push_back(v);
  }
  return values;
}

SBoxTable parse_json(std::string_view text, int m_override) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset -> line/column
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON", line, col);
  }
  const nlohmann::json* values = &doc;
  int m = m_override;
  int n = -1;
  if (doc.is_object()) {
    if (!doc.contains("values")) throw ParseError("JSON object lacks \"values\"");
    values = &doc["values"];
    for (const char* key : {"n", "m"}) {
      if (doc.contains(key) && !doc[key].is_number_unsigned()) {
        throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
      }
    }
    if (m == 0 && doc.contains("m")) m = doc["m"].get<int>();
    if (doc.contains("n")) n = doc["n"].get<int>();
  }
  if (!values->is_array()) throw ParseError("\"values\" must be an array");
  std::vector<std::uint64_t> out;
  for (const auto& v : *values) {
    if (!v.is_number_unsigned()) throw ParseError("values must be non-negative integers");
    out.push_back(v.get<std::uint64_t>());
  }
  SBoxTable s = from_values(std::move(out), m);
  if (n >= 0 && n != s.n()) {
    throw ParseError("\"n\" = " + std::to_string(n) + " disagrees with " +
                     std::to_string(s.size()) + " entries");
  }
  return s;
}

}  // namespace

std::string_view to_string(BoxFormat format) {
  switch (format) {
    case BoxFormat::kDecimal: return "decimal";
    case BoxFormat::kHex: return "hex";
    case BoxFormat::kJson: return "json";
  }
  return "?";
}

BoxFormat parse_box_format(std::string_view tag) {
  if (tag == "decimal" || tag == "dec") return BoxFormat::kDecimal;
  if (tag == "hex") return BoxFormat::kHex;
  if (tag == "json") return BoxFormat::kJson;
  throw InvalidInput("unknown format '" + std::string(tag) +
                     "' (expected decimal, hex or json)");
}

SBoxTable parse_sbox(std::string_view text, BoxFormat format, int m_override) {
  if (format == BoxFormat::kJson) return parse_json(text, m_override);
  return from_values(parse_tokens(text, format == BoxFormat::kHex), m_override);
}

std::string format_sbox(const SBoxTable& s, BoxFormat format) {
  if (format == BoxFormat::kJson) {
    nlohmann::json doc;
    doc["n"] = s.n();
    doc["m"] = s.m();
    doc["values"] = std::vector<std::uint32_t>(s.entries().begin(), s.entries().end());
    return doc.dump() + "\n";
  }
  const std::size_t per_line = std::min<std::size_t>(16, s.size());
  std::ostringstream out;
  if (format == BoxFormat::kHex) out << std::hex;
  for (std::size_t x = 0; x < s.size(); ++x) {
    out << s[x] << ((x + 1) % per_line == 0 ? '\n' : ' ');
  }
  return out.str();
}

SBoxTable load_sbox_file(const std::string& path, BoxFormat format, int m_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_sbox(buf.str(), format, m_override);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

BoxFormat format_for_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".json")) return BoxFormat::kJson;
  if (ends_with(".hex")) return BoxFormat::kHex;
  return BoxFormat::kDecimal;
}

std::string content_digest(const SBoxTable& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint32_t v) {
    for (int k = 0; k < 4; ++k) {
      h ^= (v >> (8 * k)) & 0xFFU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint32_t>(s.n()));
  mix(static_cast<std::uint32_t>(s.m()));
  for (auto y : s.entries()) mix(y);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace sboxlab
