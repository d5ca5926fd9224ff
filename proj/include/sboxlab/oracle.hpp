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

// Deliberately naive reference implementations. Every routine here sweeps
// the defining quantifiers directly and shares no code path with the
// spectral fast paths in boolfn/metrics.

#ifndef SBOXLAB_ORACLE_HPP_
#define SBOXLAB_ORACLE_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "sboxlab/boolfn.hpp"
#include "sboxlab/metrics.hpp"

namespace sboxlab::oracle {

enum class MetricTag {
  kBalanced,
  kNonlinearity,
  kDegree,
  kCorrelationImmunity,
  kDifferentialUniformity,
  kRobustness,
  kFixedPoints,
  kOppositeFixedPoints,
  kAbsoluteIndicator,
  kSumOfSquares,
  kAlgebraicImmunity,
  kSnr,
  kTransparencyOrder,
  kConfusion,
};

inline constexpr MetricTag kAllTags[] = {
    MetricTag::kBalanced,           MetricTag::kNonlinearity,
    MetricTag::kDegree,             MetricTag::kCorrelationImmunity,
    MetricTag::kDifferentialUniformity, MetricTag::kRobustness,
    MetricTag::kFixedPoints,        MetricTag::kOppositeFixedPoints,
    MetricTag::kAbsoluteIndicator,  MetricTag::kSumOfSquares,
    MetricTag::kAlgebraicImmunity,  MetricTag::kSnr,
    MetricTag::kTransparencyOrder,  MetricTag::kConfusion,
};

std::string_view to_string(MetricTag tag);
// Throws InvalidInput for an unknown tag.
MetricTag parse_metric_tag(std::string_view tag);
// Integer-valued tags compare exactly; the rest to 1e-9 relative.
bool is_integral(MetricTag tag);

std::int64_t naive_walsh(const TruthTable& f, Mask w);
std::int64_t naive_autocorrelation(const TruthTable& f, Mask a);
std::vector<std::uint8_t> naive_anf(std::span<const std::uint8_t> bits);
int naive_rank(std::span<const Mask> rows);

CcSummary naive_confusion_summary(const SBoxTable& s, CcModel model);

// Value of one metric. Flags and integers are returned exactly as doubles;
// kConfusion is the default statistic of the default model.
double naive_metric(const SBoxTable& s, MetricTag tag);

// The same metric read from the fast path, for side-by-side comparison.
double fast_metric(const SBoxTable& s, MetricTag tag);

bool brute_bijectivity(const SBoxTable& s);

// |GL(n,2)| / n! from the product formula prod_{k<n} (2^n - 2^k): the number
// of unordered n-subsets of [0, 2^n) that form an invertible matrix.
std::uint64_t invertible_subset_count(int n);

// prod_{k=1..n} (1 - 2^-k): probability that a uniform n x n matrix over
// GF(2) is invertible.
double invertible_fraction(int n);

}  // namespace sboxlab::oracle

#endif  // SBOXLAB_ORACLE_HPP_
