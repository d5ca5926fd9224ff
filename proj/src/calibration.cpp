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

#include "sboxlab/calibration.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "sboxlab/error.hpp"
#include "sboxlab/metrics.hpp"

namespace sboxlab {

std::vector<SubstitutionRepair> substitution_repairs(
    std::span<const std::uint32_t> values) {
  const std::size_t size = values.size();
  std::vector<std::size_t> seen(size, 0);
  for (auto v : values) {
    if (v >= size) return {};
    ++seen[v];
  }
  std::vector<std::uint32_t> missing;
  std::vector<std::uint32_t> doubled;
  for (std::size_t v = 0; v < size; ++v) {
    if (seen[v] == 0) missing.push_back(static_cast<std::uint32_t>(v));
    if (seen[v] == 2) doubled.push_back(static_cast<std::uint32_t>(v));
    if (seen[v] > 2) return {};
  }
  if (missing.size() != 1 || doubled.size() != 1) return {};
  std::vector<SubstitutionRepair> out;
  for (std::size_t i = 0; i < size; ++i) {
    if (values[i] != doubled[0]) continue;
    SubstitutionRepair r;
    r.position = i;
    r.removed = doubled[0];
    r.inserted = missing[0];
    r.values.assign(values.begin(), values.end());
    r.values[i] = missing[0];
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::uint32_t> strip_trailing_column(
    std::span<const std::uint32_t> values, std::size_t row_length) {
  if (row_length < 2 || values.size() % row_length != 0) {
    throw InvalidInput("table length is not a multiple of the row length");
  }
  std::vector<std::uint32_t> out;
  out.reserve(values.size() / row_length * (row_length - 1));
  for (std::size_t r = 0; r < values.size(); r += row_length) {
    if (values[r] != values[r + row_length - 1]) {
      throw InvalidInput("row " + std::to_string(r / row_length) +
                         " does not end with a copy of its first value");
    }
    out.insert(out.end(), values.begin() + static_cast<std::ptrdiff_t>(r),
               values.begin() + static_cast<std::ptrdiff_t>(r + row_length - 1));
  }
  return out;
}

std::vector<std::uint32_t> column_major(std::span<const std::uint32_t> printed,
                                        std::size_t columns) {
  if (columns == 0 || printed.size() % columns != 0) {
    throw InvalidInput("table length is not a multiple of the column count");
  }
  const std::size_t rows = printed.size() / columns;
  std::vector<std::uint32_t> out;
  out.reserve(printed.size());
  for (std::size_t c = 0; c < columns; ++c) {
    for (std::size_t r = 0; r < rows; ++r) out.push_back(printed[r * columns + c]);
  }
  return out;
}

std::optional<BinaryMatrix> output_mix_between(const SBoxTable& from,
                                               const SBoxTable& to) {
  if (!from.is_permutation() || to.n() != from.n() || to.m() != from.m()) {
    return std::nullopt;
  }
  std::vector<std::uint32_t> inverse(from.size());
  for (std::size_t x = 0; x < from.size(); ++x) inverse[from[x]] = static_cast<std::uint32_t>(x);
  // L(y) = to(from^-1(y)) must be linear; its columns are L(2^j).
  const int n = from.n();
  std::vector<Mask> columns(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) columns[j] = to[inverse[Mask{1} << j]];
  if (to[inverse[0]] != 0) return std::nullopt;
  std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i] |= ((columns[j] >> i) & 1U) << j;
  }
  BinaryMatrix m(n, std::move(rows));
  for (std::size_t y = 0; y < from.size(); ++y) {
    if (m.apply(static_cast<Mask>(y)) != to[inverse[y]]) return std::nullopt;
  }
  return m;
}

bool matches_targets(const SBoxTable& s, const MetricTargets& t) {
  if (t.nl && nonlinearity(s) != *t.nl) return false;
  if (t.du && differential_uniformity(s) != *t.du) return false;
  if (t.snr && std::abs(snr_dpa(s) - *t.snr) > t.tolerance) return false;
  if (t.to && std::abs(transparency_order(s) - *t.to) > t.tolerance) return false;
  return true;
}

std::string describe_against(const SBoxTable& s, const MetricTargets& t) {
  std::string out;
  auto add = [&](const std::string& part) {
    if (!out.empty()) out += ", ";
    out += part;
  };
  char buf[64];
  if (t.nl) add("NL " + std::to_string(nonlinearity(s)));
  if (t.du) add("du " + std::to_string(differential_uniformity(s)));
  if (t.snr) {
    std::snprintf(buf, sizeof(buf), "SNR %.4f", snr_dpa(s));
    add(buf);
  }
  if (t.to) {
    std::snprintf(buf, sizeof(buf), "TO %.4f", transparency_order(s));
    add(buf);
  }
  return out;
}

}  // namespace sboxlab
