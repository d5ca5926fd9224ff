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

#include "sboxlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "sboxlab/error.hpp"

namespace sboxlab::oracle {
namespace {

int bit(std::uint64_t v, int i) { return static_cast<int>((v >> i) & 1U); }

int dot(std::uint64_t u, std::uint64_t x, int width) {
  int acc = 0;
  for (int i = 0; i < width; ++i) acc ^= bit(u, i) & bit(x, i);
  return acc;
}

int popcount_slow(std::uint64_t v, int width) {
  int c = 0;
  for (int i = 0; i < width; ++i) c += bit(v, i);
  return c;
}

std::vector<std::uint8_t> component_bits(const SBoxTable& s, Mask v) {
  std::vector<std::uint8_t> out(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    out[x] = static_cast<std::uint8_t>(dot(v, s[x], s.m()));
  }
  return out;
}

std::int64_t walsh_of(const std::vector<std::uint8_t>& f, int n, Mask w) {
  std::int64_t acc = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    acc += (f[x] ^ dot(w, x, n)) ? -1 : 1;
  }
  return acc;
}

// Plain row-reduction on an unpacked 0/1 matrix.
int matrix_rank(std::vector<std::vector<std::uint8_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

// Is there a nonzero polynomial of degree <= d vanishing on every point?
bool has_annihilator(const std::vector<Mask>& points, int n, int d) {
  std::vector<Mask> monomials;
  for (Mask mono = 0; mono < (Mask{1} << n); ++mono) {
    if (popcount_slow(mono, n) <= d) monomials.push_back(mono);
  }
  if (points.empty()) return true;
  std::vector<std::vector<std::uint8_t>> rows;
  rows.reserve(points.size());
  for (Mask p : points) {
    std::vector<std::uint8_t> row(monomials.size());
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      row[j] = (p & monomials[j]) == monomials[j];
    }
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows)) < static_cast<int>(monomials.size());
}

int naive_ai_bool(const std::vector<std::uint8_t>& f, int n) {
  std::vector<Mask> ones;
  std::vector<Mask> zeros;
  for (std::size_t x = 0; x < f.size(); ++x) {
    (f[x] ? ones : zeros).push_back(static_cast<Mask>(x));
  }
  for (int d = 0; d <= n; ++d) {
    if (has_annihilator(ones, n, d) || has_annihilator(zeros, n, d)) return d;
  }
  return n;
}

double cc_pair(const SBoxTable& s, Mask ki, Mask kj, CcModel model) {
  const std::size_t size = s.size();
  double acc = 0;
  for (std::size_t x = 0; x < size; ++x) {
    const std::uint32_t yi = s[x ^ ki];
    const std::uint32_t yj = s[x ^ kj];
    if (model == CcModel::kSingleBit) {
      double differing = 0;
      for (int b = 0; b < s.m(); ++b) differing += bit(yi, b) != bit(yj, b);
      acc += differing / s.m();
    } else {
      const double diff = popcount_slow(yi, s.m()) - popcount_slow(yj, s.m());
      acc += diff * diff;
    }
  }
  acc /= static_cast<double>(size);
  if (model == CcModel::kHammingSquaredNorm) acc /= s.m();
  return acc;
}

}  // namespace

std::string_view to_string(MetricTag tag) {
  switch (tag) {
    case MetricTag::kBalanced: return "balanced";
    case MetricTag::kNonlinearity: return "nl";
    case MetricTag::kDegree: return "degree";
    case MetricTag::kCorrelationImmunity: return "ci";
    case MetricTag::kDifferentialUniformity: return "du";
    case MetricTag::kRobustness: return "robustness";
    case MetricTag::kFixedPoints: return "fp";
    case MetricTag::kOppositeFixedPoints: return "ofp";
    case MetricTag::kAbsoluteIndicator: return "abs_indicator";
    case MetricTag::kSumOfSquares: return "sum_sq";
    case MetricTag::kAlgebraicImmunity: return "ai";
    case MetricTag::kSnr: return "snr";
    case MetricTag::kTransparencyOrder: return "to";
    case MetricTag::kConfusion: return "kappa";
  }
  return "?";
}

MetricTag parse_metric_tag(std::string_view tag) {
  for (auto t : kAllTags) {
    if (to_string(t) == tag) return t;
  }
  throw InvalidInput("unknown metric tag '" + std::string(tag) + "'");
}

bool is_integral(MetricTag tag) {
  return tag != MetricTag::kRobustness && tag != MetricTag::kSnr &&
         tag != MetricTag::kTransparencyOrder && tag != MetricTag::kConfusion;
}

std::int64_t naive_walsh(const TruthTable& f, Mask w) {
  std::vector<std::uint8_t> bits(f.bits().begin(), f.bits().end());
  return walsh_of(bits, f.n(), w);
}

std::int64_t naive_autocorrelation(const TruthTable& f, Mask a) {
  std::int64_t acc = 0;
  for (std::size_t x = 0; x < f.size(); ++x) acc += (f[x] ^ f[x ^ a]) ? -1 : 1;
  return acc;
}

std::vector<std::uint8_t> naive_anf(std::span<const std::uint8_t> bits) {
  // a_I = XOR of f(x) over every x whose support is inside I.
  std::vector<std::uint8_t> out(bits.size(), 0);
  for (std::size_t mono = 0; mono < bits.size(); ++mono) {
    std::uint8_t acc = 0;
    for (std::size_t x = 0; x < bits.size(); ++x) {
      if ((x | mono) == mono) acc ^= bits[x];
    }
    out[mono] = acc;
  }
  return out;
}

int naive_rank(std::span<const Mask> rows) {
  int width = 0;
  for (Mask r : rows) {
    while (width < 32 && (r >> width) != 0) ++width;
  }
  std::vector<std::vector<std::uint8_t>> m;
  for (Mask r : rows) {
    std::vector<std::uint8_t> row(static_cast<std::size_t>(std::max(width, 1)));
    for (int i = 0; i < width; ++i) row[i] = static_cast<std::uint8_t>(bit(r, i));
    m.push_back(std::move(row));
  }
  return matrix_rank(std::move(m));
}

CcSummary naive_confusion_summary(const SBoxTable& s, CcModel model) {
  std::vector<double> pairs;
  for (Mask ki = 0; ki < s.size(); ++ki) {
    for (Mask kj = ki + 1; kj < s.size(); ++kj) {
      pairs.push_back(cc_pair(s, ki, kj, model));
    }
  }
  CcSummary out;
  out.min = *std::min_element(pairs.begin(), pairs.end());
  out.max = *std::max_element(pairs.begin(), pairs.end());
  double sum = 0;
  for (double v : pairs) sum += v;
  out.mean = sum / static_cast<double>(pairs.size());
  double sq = 0;
  for (double v : pairs) sq += (v - out.mean) * (v - out.mean);
  out.variance = sq / static_cast<double>(pairs.size());
  return out;
}

double naive_metric(const SBoxTable& s, MetricTag tag) {
  const int n = s.n();
  const int m = s.m();
  const std::size_t size = s.size();
  const Mask outputs = Mask{1} << m;

  switch (tag) {
    case MetricTag::kBalanced: {
      for (Mask v = 1; v < outputs; ++v) {
        const auto f = component_bits(s, v);
        std::size_t ones = 0;
        for (auto b : f) ones += b;
        if (2 * ones != size) return 0;
      }
      return 1;
    }
    case MetricTag::kNonlinearity: {
      // Distance to the closest affine function, over all components.
      std::size_t best = size;
      for (Mask v = 1; v < outputs; ++v) {
        const auto f = component_bits(s, v);
        for (Mask w = 0; w < size; ++w) {
          std::size_t dist = 0;
          for (std::size_t x = 0; x < size; ++x) dist += f[x] != dot(w, x, n);
          best = std::min({best, dist, size - dist});
        }
      }
      return static_cast<double>(best);
    }
    case MetricTag::kDegree: {
      int best = 0;
      for (int i = 0; i < m; ++i) {
        const auto a = naive_anf(component_bits(s, Mask{1} << i));
        for (std::size_t mono = 0; mono < a.size(); ++mono) {
          if (a[mono]) best = std::max(best, popcount_slow(mono, n));
        }
      }
      return best;
    }
    case MetricTag::kCorrelationImmunity: {
      for (int t = 1; t <= n; ++t) {
        for (Mask v = 1; v < outputs; ++v) {
          const auto f = component_bits(s, v);
          for (Mask w = 1; w < size; ++w) {
            if (popcount_slow(w, n) == t && walsh_of(f, n, w) != 0) return t - 1;
          }
        }
      }
      return n;
    }
    case MetricTag::kDifferentialUniformity:
    case MetricTag::kRobustness: {
      std::size_t l = 0;
      std::size_t r = 0;
      for (Mask a = 1; a < size; ++a) {
        for (Mask z = 0; z < outputs; ++z) {
          std::size_t count = 0;
          for (std::size_t x = 0; x < size; ++x) count += (s[x] ^ s[x ^ a]) == z;
          l = std::max(l, count);
          if (z == 0 && count != 0) ++r;
        }
      }
      if (tag == MetricTag::kDifferentialUniformity) return static_cast<double>(l);
      const double sz = static_cast<double>(size);
      return (1.0 - static_cast<double>(r) / sz) * (1.0 - static_cast<double>(l) / sz);
    }
    case MetricTag::kFixedPoints:
    case MetricTag::kOppositeFixedPoints: {
      if (n != m) throw InvalidInput("fixed points need an n x n S-box");
      std::size_t count = 0;
      for (std::size_t x = 0; x < size; ++x) {
        const std::size_t target =
            tag == MetricTag::kFixedPoints ? x : (size - 1 - x);
        count += s[x] == target;
      }
      return static_cast<double>(count);
    }
    case MetricTag::kAbsoluteIndicator:
    case MetricTag::kSumOfSquares: {
      std::int64_t ac = 0;
      std::int64_t sigma = 0;
      for (Mask v = 1; v < outputs; ++v) {
        const auto f = component_bits(s, v);
        std::int64_t energy = 0;
        for (Mask a = 0; a < size; ++a) {
          std::int64_t r = 0;
          for (std::size_t x = 0; x < size; ++x) r += (f[x] ^ f[x ^ a]) ? -1 : 1;
          energy += r * r;
          if (a != 0) ac = std::max(ac, (r < 0 ? -r : r));
        }
        sigma = std::max(sigma, energy);
      }
      return static_cast<double>(tag == MetricTag::kAbsoluteIndicator ? ac : sigma);
    }
    case MetricTag::kAlgebraicImmunity: {
      int best = n;
      for (Mask v = 1; v < outputs; ++v) {
        best = std::min(best, naive_ai_bool(component_bits(s, v), n));
      }
      return best;
    }
    case MetricTag::kSnr: {
      long double fourth = 0;
      for (Mask k = 0; k < size; ++k) {
        std::int64_t sum = 0;
        for (int i = 0; i < m; ++i) sum += walsh_of(component_bits(s, Mask{1} << i), n, k);
        const long double sq = static_cast<long double>(sum) * sum;
        fourth += sq * sq;
      }
      return static_cast<double>(static_cast<long double>(m) * size * size /
                                 std::sqrt(fourth));
    }
    case MetricTag::kTransparencyOrder: {
      double best = -std::numeric_limits<double>::infinity();
      const double denom = static_cast<double>(size) * size - static_cast<double>(size);
      for (Mask beta = 0; beta < outputs; ++beta) {
        double ss = 0;
        for (Mask a = 1; a < size; ++a) {
          std::int64_t inner = 0;
          for (int i = 0; i < m; ++i) {
            const Mask v = Mask{1} << i;
            // W_{D_a S}(0, v) = sum_x (-1)^(v . (S(x) ^ S(x ^ a)))
            std::int64_t w = 0;
            for (std::size_t x = 0; x < size; ++x) {
              w += dot(v, s[x] ^ s[x ^ a], m) ? -1 : 1;
            }
            inner += dot(v, beta, m) ? -w : w;
          }
          ss += static_cast<double>(std::llabs(inner));
        }
        const double lead = std::abs(m - 2 * popcount_slow(beta, m));
        best = std::max(best, lead - ss / denom);
      }
      return best;
    }
    case MetricTag::kConfusion:
      return naive_confusion_summary(s, kDefaultCcModel).pick(kDefaultCcStatistic);
  }
  throw InvalidInput("unknown metric tag");
}

double fast_metric(const SBoxTable& s, MetricTag tag) {
  switch (tag) {
    case MetricTag::kBalanced: return is_balanced(s) ? 1 : 0;
    case MetricTag::kNonlinearity: return nonlinearity(s);
    case MetricTag::kDegree: return algebraic_degree(s);
    case MetricTag::kCorrelationImmunity: return correlation_immunity(s);
    case MetricTag::kDifferentialUniformity: return differential_uniformity(s);
    case MetricTag::kRobustness: return robustness(s).value();
    case MetricTag::kFixedPoints: return fixed_points(s);
    case MetricTag::kOppositeFixedPoints: return opposite_fixed_points(s);
    case MetricTag::kAbsoluteIndicator: return absolute_indicator(s);
    case MetricTag::kSumOfSquares: return static_cast<double>(sum_of_squares(s));
    case MetricTag::kAlgebraicImmunity: return algebraic_immunity(s);
    case MetricTag::kSnr: return snr_dpa(s);
    case MetricTag::kTransparencyOrder: return transparency_order(s);
    case MetricTag::kConfusion:
      return confusion_summary(s, kDefaultCcModel).pick(kDefaultCcStatistic);
  }
  throw InvalidInput("unknown metric tag");
}

bool brute_bijectivity(const SBoxTable& s) {
  if (s.n() != s.m()) return false;
  std::vector<std::uint32_t> sorted(s.entries().begin(), s.entries().end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) return false;
  }
  return true;
}

std::uint64_t invertible_subset_count(int n) {
  if (n < 1 || n > 8) throw InvalidInput("subset count needs 1 <= n <= 8");
  // |GL(8,2)| ~ 5.3e18 fits in 128 bits before the n! division.
  unsigned __int128 order = 1;
  for (int k = 0; k < n; ++k) order *= (std::uint64_t{1} << n) - (std::uint64_t{1} << k);
  for (int k = 2; k <= n; ++k) order /= static_cast<unsigned>(k);
  return static_cast<std::uint64_t>(order);
}

double invertible_fraction(int n) {
  double p = 1;
  for (int k = 1; k <= n; ++k) p *= 1.0 - std::ldexp(1.0, -k);
  return p;
}

}  // namespace sboxlab::oracle
