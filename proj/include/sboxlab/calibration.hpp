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

// Helpers for ingesting published tables whose printed form is damaged or
// ambiguous: single-entry substitution repairs, duplicated trailing
// columns, row- vs column-major reading, and recovery of the output mix
// relating two boxes.

#ifndef SBOXLAB_CALIBRATION_HPP_
#define SBOXLAB_CALIBRATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sboxlab/boolfn.hpp"

namespace sboxlab {

struct SubstitutionRepair {
  std::size_t position = 0;
  std::uint32_t removed = 0;
  std::uint32_t inserted = 0;
  std::vector<std::uint32_t> values;
};

// Every single-entry change that turns `values` into a permutation of
// [0, values.size()). Empty when no such change exists.
std::vector<SubstitutionRepair> substitution_repairs(
    std::span<const std::uint32_t> values);

// Drops the last value of each row of `row_length` values, which must repeat
// the row's first value. Throws InvalidInput otherwise.
std::vector<std::uint32_t> strip_trailing_column(
    std::span<const std::uint32_t> values, std::size_t row_length);

// Reads a table printed with `columns` values per row column by column.
std::vector<std::uint32_t> column_major(std::span<const std::uint32_t> printed,
                                        std::size_t columns);

// M with to = M from (output mix), if one exists. `from` must be bijective.
std::optional<BinaryMatrix> output_mix_between(const SBoxTable& from,
                                               const SBoxTable& to);

// Reference values an ingested box is expected to reproduce.
struct MetricTargets {
  std::optional<int> nl;
  std::optional<int> du;
  std::optional<double> snr;
  std::optional<double> to;
  double tolerance = 0.001;
};

bool matches_targets(const SBoxTable& s, const MetricTargets& targets);

// "nl 10, du 2, SNR 2.361, TO 4.613" for the metrics named in targets.
std::string describe_against(const SBoxTable& s, const MetricTargets& targets);

}  // namespace sboxlab

#endif  // SBOXLAB_CALIBRATION_HPP_
