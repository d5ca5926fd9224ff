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

// Security metrics of S-boxes: the classical linear/differential/algebraic
// indicators plus the side-channel indicators (SNR, transparency order and
// confusion coefficients).

#ifndef SBOXLAB_METRICS_HPP_
#define SBOXLAB_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sboxlab/boolfn.hpp"

namespace sboxlab {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational reduced(std::int64_t num, std::int64_t den);
  double value() const noexcept { return static_cast<double>(num) / den; }
  bool operator==(const Rational& other) const = default;
};

// DPA selection models for confusion coefficients.
//   kSingleBit:       mean over output bits b of Pr_x[b(S(x^ki)) != b(S(x^kj))]
//   kHammingSquared:  E_x[(hw(S(x^ki)) - hw(S(x^kj)))^2]
//   kHammingSquaredNorm: kHammingSquared / m
enum class CcModel { kSingleBit, kHammingSquared, kHammingSquaredNorm };

// Scalar summaries of the coefficient grid over distinct key pairs.
enum class CcStatistic { kMin, kMean, kMax, kVariance };

enum class SnrVariant { kSign, kZeroOne };

std::string_view to_string(CcModel model);
std::string_view to_string(CcStatistic stat);
std::string_view to_string(SnrVariant variant);
CcModel parse_cc_model(std::string_view tag);
CcStatistic parse_cc_statistic(std::string_view tag);
SnrVariant parse_snr_variant(std::string_view tag);

inline constexpr CcModel kDefaultCcModel = CcModel::kHammingSquared;
inline constexpr CcStatistic kDefaultCcStatistic = CcStatistic::kVariance;

struct CcSummary {
  double min = 0;
  double mean = 0;
  double max = 0;
  double variance = 0;

  double pick(CcStatistic stat) const noexcept;
};

struct MetricsReport {
  int n = 0;
  int m = 0;
  bool balanced = false;
  int nl = 0;
  int degree = 0;
  int ci = 0;
  int du = 0;
  Rational robustness;
  std::optional<int> fp;   // only defined for n == m
  std::optional<int> ofp;  // only defined for n == m
  int abs_indicator = 0;
  std::int64_t sum_sq = 0;
  int ai = 0;
  double snr = 0;
  double to = 0;
  CcModel cc_model = kDefaultCcModel;
  CcStatistic cc_statistic = kDefaultCcStatistic;
  CcSummary cc;

  // The confusion-coefficient scalar reported alongside the other metrics.
  double kappa() const noexcept { return cc.pick(cc_statistic); }
};

struct ReportOptions {
  CcModel cc_model = kDefaultCcModel;
  CcStatistic cc_statistic = kDefaultCcStatistic;
  SnrVariant snr_variant = SnrVariant::kSign;
};

bool is_balanced(const SBoxTable& s);
int nonlinearity(const SBoxTable& s);
int algebraic_degree(const SBoxTable& s);
int correlation_immunity(const SBoxTable& s);
int differential_uniformity(const SBoxTable& s);

// Both throw InvalidInput when n != m. The opposite of x is x ^ (2^n - 1).
int fixed_points(const SBoxTable& s);
int opposite_fixed_points(const SBoxTable& s);

// (1 - R/2^n)(1 - L/2^n) with L, R read off the difference table.
Rational robustness(const SBoxTable& s);

// max over v != 0, a != 0 of |r_{v.S}(a)|.
int absolute_indicator(const SBoxTable& s);
// max over v != 0 of sum_a r_{v.S}(a)^2, a = 0 included.
std::int64_t sum_of_squares(const SBoxTable& s);

// Algebraic immunity of a single Boolean function (n <= 8).
int algebraic_immunity(const TruthTable& f);
// Minimum over nonzero components (n <= 8).
int algebraic_immunity(const SBoxTable& s);
// Minimum annihilator degree over the output preimages S^-1(b). This is 1 for
// every bijection with n >= 2; kept for comparison with the component form.
int preimage_algebraic_immunity(const SBoxTable& s);

double snr_dpa(const SBoxTable& s, SnrVariant variant = SnrVariant::kSign);
double transparency_order(const SBoxTable& s);

// kappa as a function of the key difference d = ki ^ kj, d in [0, 2^n).
std::vector<double> confusion_by_difference(const SBoxTable& s, CcModel model);

struct ConfusionGrid {
  int n = 0;
  std::vector<double> values;  // row-major 2^n x 2^n

  double at(Mask ki, Mask kj) const noexcept {
    return values[(std::size_t{ki} << n) | kj];
  }
};

ConfusionGrid confusion_coefficients(const SBoxTable& s, CcModel model);
CcSummary confusion_summary(const SBoxTable& s, CcModel model);

// Throws PreconditionError when n > 8 (annihilator and grid sizes).
MetricsReport full_report(const SBoxTable& s, const ReportOptions& options = {});

}  // namespace sboxlab

#endif  // SBOXLAB_METRICS_HPP_
