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

#include "sboxlab/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "sboxlab/error.hpp"

namespace sboxlab {
namespace {

constexpr int kMaxAnnihilatorVars = 8;

struct ComponentStats {
  bool balanced = true;
  std::int32_t max_walsh = 0;
  int min_nonzero_weight = std::numeric_limits<int>::max();
  std::int32_t abs_indicator = 0;
  std::int64_t sum_sq = 0;
};

// One spectral pass over every nonzero component.
ComponentStats component_stats(const SBoxTable& s) {
  ComponentStats st;
  const std::size_t size = s.size();
  const Mask components = Mask{1} << s.m();
  WalshSpectrum w(size);
  for (Mask v = 1; v < components; ++v) {
    for (std::size_t x = 0; x < size; ++x) w[x] = 1 - 2 * parity(v & s[x]);
    fwht_inplace(w);
    if (w[0] != 0) st.balanced = false;
    for (std::size_t u = 0; u < size; ++u) {
      st.max_walsh = std::max(st.max_walsh, std::abs(w[u]));
      if (u != 0 && w[u] != 0) {
        st.min_nonzero_weight =
            std::min(st.min_nonzero_weight, weight(static_cast<Mask>(u)));
      }
    }
    const AutocorrTable r = autocorrelation_from_spectrum(w);
    std::int64_t energy = 0;
    for (std::size_t a = 0; a < size; ++a) {
      energy += std::int64_t{r[a]} * r[a];
      if (a != 0) st.abs_indicator = std::max(st.abs_indicator, std::abs(r[a]));
    }
    st.sum_sq = std::max(st.sum_sq, energy);
  }
  return st;
}

int nonlinearity_from(const SBoxTable& s, const ComponentStats& st) {
  return static_cast<int>((s.size() / 2) - static_cast<std::size_t>(st.max_walsh / 2));
}

int ci_from(const SBoxTable& s, const ComponentStats& st) {
  if (st.min_nonzero_weight == std::numeric_limits<int>::max()) return s.n();
  return st.min_nonzero_weight - 1;
}

void require_square(const SBoxTable& s, const char* what) {
  if (s.n() != s.m()) {
    throw InvalidInput(std::string(what) + " needs an n x n S-box, got " +
                       std::to_string(s.n()) + "x" + std::to_string(s.m()));
  }
}

void require_annihilator_size(int n) {
  if (n > kMaxAnnihilatorVars) {
    throw PreconditionError("algebraic immunity is limited to n <= " +
                            std::to_string(kMaxAnnihilatorVars));
  }
}

// Bit-packed row over at most 2^8 evaluation points.
using PointSet = std::array<std::uint64_t, 4>;

// Incremental GF(2) basis over rows of length <= 256, keyed by pivot bit.
class RowBasis {
 public:
  // Returns false when the row reduces to zero (linearly dependent).
  bool insert(PointSet row) {
    for (;;) {
      int lead = -1;
      for (int wd = 3; wd >= 0 && lead < 0; --wd) {
        if (row[wd]) lead = wd * 64 + 63 - std::countl_zero(row[wd]);
      }
      if (lead < 0) return false;
      auto& pivot = pivots_[lead];
      if (!pivot.has_value()) {
        pivot = row;
        return true;
      }
      for (int wd = 0; wd < 4; ++wd) row[wd] ^= (*pivot)[wd];
    }
  }

 private:
  std::array<std::optional<PointSet>, 256> pivots_{};
};

// Smallest d such that some nonzero polynomial of degree <= d vanishes on
// every point listed (the monomial evaluation vectors become dependent).
int min_annihilator_degree(int n, const std::vector<Mask>& points,
                           int cap) {
  RowBasis basis;
  for (int d = 0; d <= n; ++d) {
    if (d > cap) return cap;
    const Mask limit = Mask{1} << n;
    for (Mask mono = 0; mono < limit; ++mono) {
      if (weight(mono) != d) continue;
      PointSet row{};
      for (std::size_t k = 0; k < points.size(); ++k) {
        if ((points[k] & mono) == mono) row[k / 64] |= std::uint64_t{1} << (k % 64);
      }
      if (!basis.insert(row)) return d;
    }
  }
  return n + 1;  // unreachable: 2^n monomials over < 2^n points
}

std::vector<double> cc_from_hw(const SBoxTable& s, bool normalize) {
  const std::size_t size = s.size();
  std::vector<std::int64_t> h(size);
  std::int64_t h2 = 0;
  for (std::size_t x = 0; x < size; ++x) {
    h[x] = weight(s[x]);
    h2 += h[x] * h[x];
  }
  // C(d) = sum_x h(x) h(x^d) = H(H(h)^2)(d) / 2^n.
  auto butterfly = [](std::vector<std::int64_t>& v) {
    for (std::size_t len = 1; len < v.size(); len <<= 1) {
      for (std::size_t i = 0; i < v.size(); i += len << 1) {
        for (std::size_t j = i; j < i + len; ++j) {
          const std::int64_t a = v[j];
          const std::int64_t b = v[j + len];
          v[j] = a + b;
          v[j + len] = a - b;
        }
      }
    }
  };
  butterfly(h);
  for (auto& v : h) v *= v;
  butterfly(h);
  std::vector<double> out(size);
  const double denom = static_cast<double>(size) * (normalize ? s.m() : 1);
  for (std::size_t d = 0; d < size; ++d) {
    const std::int64_t corr = h[d] / static_cast<std::int64_t>(size);
    out[d] = static_cast<double>(2 * h2 - 2 * corr) / denom;
  }
  return out;
}

std::vector<double> cc_single_bit(const SBoxTable& s) {
  const std::size_t size = s.size();
  std::vector<double> out(size, 0.0);
  for (int b = 0; b < s.m(); ++b) {
    const AutocorrTable r = autocorrelation(coordinate(s, b));
    for (std::size_t d = 0; d < size; ++d) {
      out[d] += static_cast<double>(static_cast<std::int64_t>(size) - r[d]) /
                (2.0 * static_cast<double>(size));
    }
  }
  for (auto& v : out) v /= s.m();
  return out;
}

}  // namespace

Rational Rational::reduced(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidInput("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

std::string_view to_string(CcModel model) {
  switch (model) {
    case CcModel::kSingleBit: return "single-bit";
    case CcModel::kHammingSquared: return "hw-squared";
    case CcModel::kHammingSquaredNorm: return "hw-squared-norm";
  }
  return "?";
}

std::string_view to_string(CcStatistic stat) {
  switch (stat) {
    case CcStatistic::kMin: return "min";
    case CcStatistic::kMean: return "mean";
    case CcStatistic::kMax: return "max";
    case CcStatistic::kVariance: return "variance";
  }
  return "?";
}

std::string_view to_string(SnrVariant variant) {
  return variant == SnrVariant::kSign ? "sign" : "zero-one";
}

CcModel parse_cc_model(std::string_view tag) {
  for (auto m : {CcModel::kSingleBit, CcModel::kHammingSquared,
                 CcModel::kHammingSquaredNorm}) {
    if (tag == to_string(m)) return m;
  }
  throw InvalidInput("unknown confusion-coefficient model '" + std::string(tag) +
                     "' (expected single-bit, hw-squared or hw-squared-norm)");
}

CcStatistic parse_cc_statistic(std::string_view tag) {
  for (auto s : {CcStatistic::kMin, CcStatistic::kMean, CcStatistic::kMax,
                 CcStatistic::kVariance}) {
    if (tag == to_string(s)) return s;
  }
  throw InvalidInput("unknown confusion-coefficient statistic '" +
                     std::string(tag) + "'");
}

SnrVariant parse_snr_variant(std::string_view tag) {
  if (tag == "sign") return SnrVariant::kSign;
  if (tag == "zero-one") return SnrVariant::kZeroOne;
  throw InvalidInput("unknown SNR variant '" + std::string(tag) + "'");
}

double CcSummary::pick(CcStatistic stat) const noexcept {
  switch (stat) {
    case CcStatistic::kMin: return min;
    case CcStatistic::kMean: return mean;
    case CcStatistic::kMax: return max;
    case CcStatistic::kVariance: return variance;
  }
  return variance;
}

bool is_balanced(const SBoxTable& s) { return component_stats(s).balanced; }

int nonlinearity(const SBoxTable& s) {
  return nonlinearity_from(s, component_stats(s));
}

int algebraic_degree(const SBoxTable& s) {
  int best = 0;
  for (int i = 0; i < s.m(); ++i) best = std::max(best, degree(coordinate(s, i)));
  return best;
}

int correlation_immunity(const SBoxTable& s) {
  return ci_from(s, component_stats(s));
}

int differential_uniformity(const SBoxTable& s) {
  return static_cast<int>(ddt(s).max_nontrivial());
}

int fixed_points(const SBoxTable& s) {
  require_square(s, "fixed-point count");
  int count = 0;
  for (std::size_t x = 0; x < s.size(); ++x) count += s[x] == x;
  return count;
}

int opposite_fixed_points(const SBoxTable& s) {
  require_square(s, "opposite fixed-point count");
  const std::size_t all_ones = s.size() - 1;
  int count = 0;
  for (std::size_t x = 0; x < s.size(); ++x) count += s[x] == (x ^ all_ones);
  return count;
}

Rational robustness(const SBoxTable& s) {
  const DifferenceTable table = ddt(s);
  const auto size = static_cast<std::int64_t>(s.size());
  const std::int64_t l = table.max_nontrivial();
  const std::int64_t r = table.zero_column_nonzero();
  return Rational::reduced((size - r) * (size - l), size * size);
}

int absolute_indicator(const SBoxTable& s) {
  return component_stats(s).abs_indicator;
}

std::int64_t sum_of_squares(const SBoxTable& s) {
  return component_stats(s).sum_sq;
}

int algebraic_immunity(const TruthTable& f) {
  require_annihilator_size(f.n());
  std::vector<Mask> ones;
  std::vector<Mask> zeros;
  for (std::size_t x = 0; x < f.size(); ++x) {
    (f[x] ? ones : zeros).push_back(static_cast<Mask>(x));
  }
  const int a = min_annihilator_degree(f.n(), ones, f.n());
  return min_annihilator_degree(f.n(), zeros, a);
}

int algebraic_immunity(const SBoxTable& s) {
  require_annihilator_size(s.n());
  int best = std::numeric_limits<int>::max();
  const Mask components = Mask{1} << s.m();
  for (Mask v = 1; v < components; ++v) {
    best = std::min(best, algebraic_immunity(component(s, v)));
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

int preimage_algebraic_immunity(const SBoxTable& s) {
  require_annihilator_size(s.n());
  std::vector<std::vector<Mask>> preimages(std::size_t{1} << s.m());
  for (std::size_t x = 0; x < s.size(); ++x) {
    preimages[s[x]].push_back(static_cast<Mask>(x));
  }
  int best = s.n();
  for (const auto& points : preimages) {
    best = std::min(best, min_annihilator_degree(s.n(), points, best));
  }
  return best;
}

double snr_dpa(const SBoxTable& s, SnrVariant variant) {
  const std::size_t size = s.size();
  std::vector<std::int64_t> total(size, 0);
  for (int i = 0; i < s.m(); ++i) {
    const WalshSpectrum w = walsh_transform(coordinate(s, i));
    for (std::size_t k = 0; k < size; ++k) {
      if (variant == SnrVariant::kSign) {
        total[k] += w[k];
      } else {
        // f^(k) = sum_x (-1)^(x.k) f(x) = (2^n [k == 0] - W(k)) / 2
        total[k] += ((k == 0 ? static_cast<std::int64_t>(size) : 0) - w[k]) / 2;
      }
    }
  }
  long double fourth = 0;
  for (auto t : total) {
    const long double sq = static_cast<long double>(t) * t;
    fourth += sq * sq;
  }
  const long double scale = static_cast<long double>(s.m()) * size * size;
  return static_cast<double>(scale / std::sqrt(fourth));
}

double transparency_order(const SBoxTable& s) {
  if (s.n() < 1) throw InvalidInput("transparency order needs n >= 1");
  const std::size_t size = s.size();
  const int m = s.m();
  // r_i(a) is the zero-mask Walsh value of coordinate i of D_a S.
  std::vector<AutocorrTable> r;
  r.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) r.push_back(autocorrelation(coordinate(s, i)));

  const double denom = static_cast<double>(size) * size - static_cast<double>(size);
  std::int64_t best_scaled = std::numeric_limits<std::int64_t>::min();
  const Mask betas = Mask{1} << m;
  const auto idenom = static_cast<std::int64_t>(size * size - size);
  for (Mask beta = 0; beta < betas; ++beta) {
    std::int64_t ss = 0;
    for (std::size_t a = 1; a < size; ++a) {
      std::int64_t acc = 0;
      for (int i = 0; i < m; ++i) acc += ((beta >> i) & 1) ? -r[i][a] : r[i][a];
      ss += std::llabs(acc);
    }
    const std::int64_t lead = std::llabs(m - 2 * weight(beta));
    best_scaled = std::max(best_scaled, lead * idenom - ss);
  }
  return static_cast<double>(best_scaled) / denom;
}

std::vector<double> confusion_by_difference(const SBoxTable& s, CcModel model) {
  if (s.m() < 1) throw InvalidInput("confusion coefficients need m >= 1");
  switch (model) {
    case CcModel::kSingleBit: return cc_single_bit(s);
    case CcModel::kHammingSquared: return cc_from_hw(s, false);
    case CcModel::kHammingSquaredNorm: return cc_from_hw(s, true);
  }
  throw InvalidInput("unknown confusion-coefficient model");
}

ConfusionGrid confusion_coefficients(const SBoxTable& s, CcModel model) {
  require_annihilator_size(s.n());
  const std::vector<double> by_diff = confusion_by_difference(s, model);
  ConfusionGrid grid;
  grid.n = s.n();
  grid.values.resize(s.size() * s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      grid.values[(i << s.n()) | j] = by_diff[i ^ j];
    }
  }
  return grid;
}

CcSummary confusion_summary(const SBoxTable& s, CcModel model) {
  if (s.n() < 1) throw InvalidInput("confusion coefficients need n >= 1");
  // Each nonzero difference d is shared by exactly 2^(n-1) unordered key
  // pairs, so statistics over pairs equal statistics over d != 0.
  const std::vector<double> by_diff = confusion_by_difference(s, model);
  CcSummary out;
  out.min = std::numeric_limits<double>::infinity();
  out.max = -std::numeric_limits<double>::infinity();
  double sum = 0;
  for (std::size_t d = 1; d < by_diff.size(); ++d) {
    out.min = std::min(out.min, by_diff[d]);
    out.max = std::max(out.max, by_diff[d]);
    sum += by_diff[d];
  }
  const double count = static_cast<double>(by_diff.size() - 1);
  out.mean = sum / count;
  double var = 0;
  for (std::size_t d = 1; d < by_diff.size(); ++d) {
    const double dev = by_diff[d] - out.mean;
    var += dev * dev;
  }
  out.variance = var / count;
  return out;
}

MetricsReport full_report(const SBoxTable& s, const ReportOptions& options) {
  if (s.n() > kMaxAnnihilatorVars) {
    throw PreconditionError("full report is limited to n <= " +
                            std::to_string(kMaxAnnihilatorVars));
  }
  if (s.n() < 1 || s.m() < 1) throw InvalidInput("full report needs n, m >= 1");
  const ComponentStats st = component_stats(s);
  MetricsReport rep;
  rep.n = s.n();
  rep.m = s.m();
  rep.balanced = st.balanced;
  rep.nl = nonlinearity_from(s, st);
  rep.degree = algebraic_degree(s);
  rep.ci = ci_from(s, st);
  rep.du = differential_uniformity(s);
  rep.robustness = robustness(s);
  if (s.n() == s.m()) {
    rep.fp = fixed_points(s);
    rep.ofp = opposite_fixed_points(s);
  }
  rep.abs_indicator = st.abs_indicator;
  rep.sum_sq = st.sum_sq;
  rep.ai = algebraic_immunity(s);
  rep.snr = snr_dpa(s, options.snr_variant);
  rep.to = transparency_order(s);
  rep.cc_model = options.cc_model;
  rep.cc_statistic = options.cc_statistic;
  rep.cc = confusion_summary(s, options.cc_model);
  return rep;
}

}  // namespace sboxlab
