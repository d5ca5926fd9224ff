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

// Structured documents and text tables for metric reports and search runs.

#ifndef SBOXLAB_REPORT_HPP_
#define SBOXLAB_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sboxlab/metrics.hpp"
#include "sboxlab/oracle.hpp"
#include "sboxlab/search.hpp"

namespace sboxlab {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kReportSchema = "sboxlab.report/1";
inline constexpr std::string_view kSearchSchema = "sboxlab.search/1";

struct BoxIdentity {
  std::string name;
  std::string digest;
};

BoxIdentity identify(std::string name, const SBoxTable& s);

// Metrics to show, in table row order. Empty selects all of them.
using MetricSelection = std::vector<oracle::MetricTag>;

// Comma-separated metric tags, e.g. "nl,du,to". Throws InvalidInput.
MetricSelection parse_metric_selection(std::string_view list);

// Row label in the comparison tables (B, NL, AD, CI, R, δ, AC, σ, AI, FP,
// OFP, SNR, TO, K).
std::string_view row_label(oracle::MetricTag tag);

// Table row order.
const std::vector<oracle::MetricTag>& table_order();

std::string report_json(const BoxIdentity& box, const MetricsReport& report,
                        const MetricSelection& metrics = {},
                        std::optional<std::uint64_t> seed = std::nullopt);

// `box_files[i]` is the file written for result.accepted[i], or empty.
std::string search_json(const BoxIdentity& initial, const SearchResult& result,
                        const std::vector<std::string>& box_files = {});

struct TableColumn {
  std::string title;
  MetricsReport report;
};

// One row per metric, one column per box. When `spread` is non-empty,
// min/avg/max columns over those reports are added in front.
std::string metric_table(const std::vector<TableColumn>& columns,
                         const std::vector<MetricsReport>& spread = {},
                         const MetricSelection& metrics = {});

// Value of one metric as a number (flags as 0/1, robustness as a decimal).
double metric_value(const MetricsReport& report, oracle::MetricTag tag);

}  // namespace sboxlab

#endif  // SBOXLAB_REPORT_HPP_
