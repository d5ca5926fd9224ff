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

#include "sboxlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "sboxlab/error.hpp"
#include "sboxlab/io.hpp"

namespace sboxlab {
namespace {

using nlohmann::ordered_json;
using oracle::MetricTag;

bool selected(const MetricSelection& metrics, MetricTag tag) {
  return metrics.empty() || std::find(metrics.begin(), metrics.end(), tag) != metrics.end();
}

ordered_json metrics_json(const MetricsReport& r, const MetricSelection& metrics) {
  ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  for (MetricTag tag : table_order()) {
    if (!selected(metrics, tag)) continue;
    const std::string key(oracle::to_string(tag));
    switch (tag) {
      case MetricTag::kBalanced:
        j[key] = r.balanced;
        break;
      case MetricTag::kNonlinearity:
        j[key] = r.nl;
        break;
      case MetricTag::kDegree:
        j[key] = r.degree;
        break;
      case MetricTag::kCorrelationImmunity:
        j[key] = r.ci;
        break;
      case MetricTag::kDifferentialUniformity:
        j[key] = r.du;
        break;
      case MetricTag::kRobustness:
        j[key] = {{"num", r.robustness.num},
                  {"den", r.robustness.den},
                  {"value", r.robustness.value()}};
        break;
      case MetricTag::kFixedPoints:
        j[key] = r.fp ? ordered_json(*r.fp) : ordered_json(nullptr);
        break;
      case MetricTag::kOppositeFixedPoints:
        j[key] = r.ofp ? ordered_json(*r.ofp) : ordered_json(nullptr);
        break;
      case MetricTag::kAbsoluteIndicator:
        j[key] = r.abs_indicator;
        break;
      case MetricTag::kSumOfSquares:
        j[key] = r.sum_sq;
        break;
      case MetricTag::kAlgebraicImmunity:
        j[key] = r.ai;
        break;
      case MetricTag::kSnr:
        j[key] = r.snr;
        break;
      case MetricTag::kTransparencyOrder:
        j[key] = r.to;
        break;
      case MetricTag::kConfusion:
        j[key] = {{"model", std::string(to_string(r.cc_model))},
                  {"statistic", std::string(to_string(r.cc_statistic))},
                  {"value", r.kappa()},
                  {"min", r.cc.min},
                  {"mean", r.cc.mean},
                  {"max", r.cc.max},
                  {"variance", r.cc.variance}};
        break;
    }
  }
  return j;
}

ordered_json tally_json(const PipelineTally& t) {
  return ordered_json{{"#T_total", t.total},     {"#T_bij", t.bijective},
                      {"#T_FP", t.fp_zero},      {"#T_OFF", t.ofp_zero},
                      {"#T_SNR", t.snr_better},  {"#T_TO", t.to_better},
                      {"#T_K", t.cc_better},     {"#T_better", t.all_better}};
}

std::string better_definition(const SearchConfig& c) {
  std::string s = "bijective, FP = 0, OFP = 0, TO ";
  s += c.to_direction == ToDirection::kNotWorse ? "<=" : ">=";
  s += " initial";
  if (c.thresholds.require_snr) s += ", SNR < initial";
  if (c.thresholds.require_cc) s += ", kappa < initial";
  return s;
}

std::string format_number(double v) {
  char buf[32];
  if (v == static_cast<double>(static_cast<long long>(v)) && std::abs(v) < 1e15) {
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
  } else {
    std::snprintf(buf, sizeof(buf), "%.4f", v);
  }
  return buf;
}

std::string cell(const MetricsReport& r, MetricTag tag) {
  switch (tag) {
    case MetricTag::kBalanced:
      return r.balanced ? "yes" : "no";
    case MetricTag::kRobustness: {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "%.4f", r.robustness.value());
      return buf;
    }
    case MetricTag::kFixedPoints:
      return r.fp ? std::to_string(*r.fp) : "-";
    case MetricTag::kOppositeFixedPoints:
      return r.ofp ? std::to_string(*r.ofp) : "-";
    default:
      return format_number(metric_value(r, tag));
  }
}

// Display width in code points; the row labels contain δ and σ.
std::size_t width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s) w += (c & 0xC0) != 0x80;
  return w;
}

void pad(std::string& out, const std::string& s, std::size_t w) {
  out += s;
  out.append(w > width(s) ? w - width(s) : 0, ' ');
}

}  // namespace

BoxIdentity identify(std::string name, const SBoxTable& s) {
  return BoxIdentity{std::move(name), content_digest(s)};
}

MetricSelection parse_metric_selection(std::string_view list) {
  MetricSelection out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto token = list.substr(0, comma);
    if (!token.empty()) {
      const MetricTag tag = oracle::parse_metric_tag(token);
      if (std::find(out.begin(), out.end(), tag) == out.end()) out.push_back(tag);
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

std::string_view row_label(MetricTag tag) {
  switch (tag) {
    case MetricTag::kBalanced: return "B";
    case MetricTag::kNonlinearity: return "NL";
    case MetricTag::kDegree: return "AD";
    case MetricTag::kCorrelationImmunity: return "CI";
    case MetricTag::kRobustness: return "R";
    case MetricTag::kDifferentialUniformity: return "δ";
    case MetricTag::kAbsoluteIndicator: return "AC";
    case MetricTag::kSumOfSquares: return "σ";
    case MetricTag::kAlgebraicImmunity: return "AI";
    case MetricTag::kFixedPoints: return "FP";
    case MetricTag::kOppositeFixedPoints: return "OFP";
    case MetricTag::kSnr: return "SNR";
    case MetricTag::kTransparencyOrder: return "TO";
    case MetricTag::kConfusion: return "K";
  }
  return "?";
}

const std::vector<MetricTag>& table_order() {
  static const std::vector<MetricTag> order = {
      MetricTag::kBalanced,          MetricTag::kNonlinearity,
      MetricTag::kDegree,            MetricTag::kCorrelationImmunity,
      MetricTag::kRobustness,        MetricTag::kDifferentialUniformity,
      MetricTag::kAbsoluteIndicator, MetricTag::kSumOfSquares,
      MetricTag::kAlgebraicImmunity, MetricTag::kFixedPoints,
      MetricTag::kOppositeFixedPoints, MetricTag::kSnr,
      MetricTag::kTransparencyOrder, MetricTag::kConfusion};
  return order;
}

double metric_value(const MetricsReport& r, MetricTag tag) {
  switch (tag) {
    case MetricTag::kBalanced: return r.balanced ? 1 : 0;
    case MetricTag::kNonlinearity: return r.nl;
    case MetricTag::kDegree: return r.degree;
    case MetricTag::kCorrelationImmunity: return r.ci;
    case MetricTag::kDifferentialUniformity: return r.du;
    case MetricTag::kRobustness: return r.robustness.value();
    case MetricTag::kFixedPoints:
      return r.fp ? *r.fp : std::numeric_limits<double>::quiet_NaN();
    case MetricTag::kOppositeFixedPoints:
      return r.ofp ? *r.ofp : std::numeric_limits<double>::quiet_NaN();
    case MetricTag::kAbsoluteIndicator: return r.abs_indicator;
    case MetricTag::kSumOfSquares: return static_cast<double>(r.sum_sq);
    case MetricTag::kAlgebraicImmunity: return r.ai;
    case MetricTag::kSnr: return r.snr;
    case MetricTag::kTransparencyOrder: return r.to;
    case MetricTag::kConfusion: return r.kappa();
  }
  return 0;
}

std::string report_json(const BoxIdentity& box, const MetricsReport& report,
                        const MetricSelection& metrics,
                        std::optional<std::uint64_t> seed) {
  ordered_json j;
  j["schema"] = std::string(kReportSchema);
  j["tool_version"] = std::string(kToolVersion);
  j["box"] = {{"name", box.name}, {"digest", box.digest}};
  if (seed) j["seed"] = *seed;
  j["metrics"] = metrics_json(report, metrics);
  return j.dump(2) + "\n";
}

std::string search_json(const BoxIdentity& initial, const SearchResult& result,
                        const std::vector<std::string>& box_files) {
  const SearchConfig& c = result.config;
  ordered_json j;
  j["schema"] = std::string(kSearchSchema);
  j["tool_version"] = std::string(kToolVersion);
  j["initial"] = {{"name", initial.name}, {"digest", initial.digest}};
  j["seed"] = c.seed;
  // The worker count is deliberately absent: output must not depend on it.
  ordered_json config = {{"mode", std::string(to_string(c.mode))},
                         {"max_candidates", c.max_candidates},
                         {"ordering", std::string(to_string(c.ordering))},
                         {"to_direction", std::string(to_string(c.to_direction))},
                         {"require_snr", c.thresholds.require_snr},
                         {"require_cc", c.thresholds.require_cc},
                         {"cc_model", std::string(to_string(c.cc_model))},
                         {"cc_statistic", std::string(to_string(c.cc_statistic))}};
  if (c.mode == SearchMode::kGenetic) {
    config["population"] = c.population_size;
    config["generations"] = c.generations;
    config["tournament"] = c.tournament_size;
    config["mutation_rate"] = c.mutation_rate;
  }
  j["config"] = config;
  j["baseline"] = metrics_json(result.baseline, {});
  j["tally"] = tally_json(result.tally);
  j["better_definition"] = better_definition(c);
  ordered_json accepted = ordered_json::array();
  for (std::size_t i = 0; i < result.accepted.size(); ++i) {
    const AcceptedBox& a = result.accepted[i];
    ordered_json item;
    item["masks"] = std::vector<Mask>(a.candidate.masks().begin(), a.candidate.masks().end());
    item["digest"] = content_digest(a.box);
    if (i < box_files.size() && !box_files[i].empty()) item["file"] = box_files[i];
    item["metrics"] = metrics_json(a.report, {});
    accepted.push_back(std::move(item));
  }
  j["accepted"] = std::move(accepted);
  return j.dump(2) + "\n";
}

std::string metric_table(const std::vector<TableColumn>& columns,
                         const std::vector<MetricsReport>& spread,
                         const MetricSelection& metrics) {
  std::vector<std::string> header = {"metric"};
  if (!spread.empty()) {
    header.insert(header.end(), {"min", "avg", "max"});
  }
  for (const auto& c : columns) header.push_back(c.title);

  std::vector<std::vector<std::string>> rows;
  for (MetricTag tag : table_order()) {
    if (!selected(metrics, tag)) continue;
    std::vector<std::string> row = {std::string(row_label(tag))};
    if (!spread.empty()) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      double sum = 0;
      for (const auto& r : spread) {
        const double v = metric_value(r, tag);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        sum += v;
      }
      const double avg = sum / static_cast<double>(spread.size());
      row.push_back(format_number(lo));
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.4f", avg);
      row.push_back(tag == MetricTag::kBalanced ? format_number(avg) : buf);
      row.push_back(format_number(hi));
    }
    for (const auto& c : columns) row.push_back(cell(c.report, tag));
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> widths(header.size(), 0);
  for (std::size_t i = 0; i < header.size(); ++i) widths[i] = width(header[i]);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], width(row[i]));
  }
  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i + 1 == row.size()) {
        out += row[i];
      } else {
        pad(out, row[i], widths[i] + 2);
      }
    }
    out += '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out;
}

}  // namespace sboxlab
