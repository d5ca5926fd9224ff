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

// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Usage: sboxlab_acceptance [--only N]

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sboxlab/boolfn.hpp"
#include "sboxlab/calibration.hpp"
#include "sboxlab/fixtures.hpp"
#include "sboxlab/metrics.hpp"
#include "sboxlab/oracle.hpp"
#include "sboxlab/report.hpp"
#include "sboxlab/sampling.hpp"
#include "sboxlab/search.hpp"
#include "sboxlab/verify.hpp"

namespace sboxlab {
namespace {

// Tolerances.
constexpr double kRealTol = 0.001;          // printed reals (3 decimals)
constexpr double kRobustnessTol = 0.001;    // robustness is printed truncated
constexpr double kEightBitToTol = 0.01;     // 8x8 TO printed with 2 decimals
constexpr double kAesTol = 0.01;
constexpr double kRelTol = 1e-9;            // fast vs naive, mix invariance
constexpr int kMaxRealMismatchesPerTable = 2;
constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void info(const std::string& s) { details.push_back(s); }
  void require(bool ok, const std::string& s) {
    details.push_back((ok ? "ok   " : "MISS ") + s);
    pass = pass && ok;
  }
};

std::string f3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

bool rel_equal(double a, double b) {
  return std::abs(a - b) <= kRelTol * std::max({1.0, std::abs(a), std::abs(b)});
}

// One printed column of Tables 2-5.
struct Column {
  const char* fixture;
  int nl, ad, ci;
  double r;
  int du, ac;
  long long sigma;
  int ai, fp, ofp;
  double snr, to;
};

struct RowCheck {
  int integer_mismatches = 0;
  int real_mismatches = 0;
};

RowCheck check_column(const Column& c, Outcome& o, double to_tol = kRealTol) {
  const MetricsReport r = full_report(fixture(c.fixture).box);
  RowCheck rc;
  auto exact = [&](const char* label, long long got, long long want) {
    const bool ok = got == want;
    if (!ok) ++rc.integer_mismatches;
    o.require(ok, std::string(c.fixture) + " " + label + " " + std::to_string(got) +
                      " (printed " + std::to_string(want) + ")");
  };
  auto real = [&](const char* label, double got, double want, double tol, bool counts_as_real) {
    const bool ok = std::abs(got - want) <= tol;
    if (!ok) ++(counts_as_real ? rc.real_mismatches : rc.integer_mismatches);
    o.details.push_back((ok ? "ok   " : "MISS ") + std::string(c.fixture) + " " + label + " " +
                        f3(got) + " (printed " + f3(want) + ")");
  };
  o.require(r.balanced, std::string(c.fixture) + " balanced");
  exact("NL", r.nl, c.nl);
  exact("AD", r.degree, c.ad);
  exact("CI", r.ci, c.ci);
  real("R", r.robustness.value(), c.r, kRobustnessTol, false);
  exact("du", r.du, c.du);
  exact("AC", r.abs_indicator, c.ac);
  exact("sigma", r.sum_sq, c.sigma);
  exact("AI", r.ai, c.ai);
  exact("FP", r.fp.value_or(-1), c.fp);
  exact("OFP", r.ofp.value_or(-1), c.ofp);
  real("SNR", r.snr, c.snr, kRealTol, true);
  real("TO", r.to, c.to, to_tol, true);
  return rc;
}

Outcome criterion1() {
  Outcome o;
  const Column cols[] = {
      {"paper-4x4-initial", 4, 3, 0, 0.75, 4, 8, 640, 2, 0, 0, 1.612, 3.533},
      {"paper-4x4-proposed", 4, 3, 0, 0.75, 4, 8, 640, 2, 0, 0, 1.663, 3.466},
  };
  for (const auto& c : cols) {
    const RowCheck rc = check_column(c, o);
    if (rc.integer_mismatches + rc.real_mismatches != 0) o.pass = false;
    o.require(robustness(fixture(c.fixture).box) == Rational{3, 4},
              std::string(c.fixture) + " robustness is exactly 3/4");
  }
  return o;
}

// Metrics of a printed table under column-major reading, for the record.
void alternative_readings(const char* name, std::span<const std::uint32_t> values, Outcome& o) {
  const int n = std::countr_zero(values.size());
  const SBoxTable col(n, n, column_major(values, 8));
  const MetricsReport r = full_report(col);
  o.info("     alternative: " + std::string(name) + " read column-major (8 columns) has FP " +
         std::to_string(*r.fp) + ", OFP " + std::to_string(*r.ofp) + ", SNR " + f3(r.snr) +
         ", TO " + f3(r.to));
}

Outcome criterion2() {
  Outcome o;
  struct Table {
    const char* title;
    std::vector<Column> columns;
  };
  const Table tables[] = {
      {"5x5",
       {{"paper-5x5-initial", 10, 4, 0, 0.937, 2, 8, 2048, 3, 0, 0, 2.361, 4.612},
        {"paper-5x5-proposed", 10, 4, 0, 0.937, 2, 8, 2048, 3, 0, 0, 2.517, 4.596}}},
      {"6x6",
       {{"paper-6x6-initial", 24, 5, 0, 0.937, 4, 16, 8704, 3, 0, 0, 3.451, 5.734},
        {"paper-6x6-proposed", 24, 5, 0, 0.937, 4, 16, 8704, 3, 0, 0, 3.904, 5.694}}},
      {"7x7",
       {{"paper-7x7-initial", 54, 6, 0, 0.984, 2, 24, 32768, 4, 0, 0, 5.318, 6.802},
        {"paper-7x7-proposed", 54, 6, 0, 0.984, 2, 24, 32768, 4, 0, 0, 5.84, 6.8}}},
  };
  for (const auto& t : tables) {
    int integer = 0;
    int real = 0;
    for (const auto& c : t.columns) {
      const RowCheck rc = check_column(c, o);
      integer += rc.integer_mismatches;
      real += rc.real_mismatches;
      for (const auto& note : fixture(c.fixture).notes) {
        if (note.rfind("applied", 0) == 0 || note.rfind("selected", 0) == 0) {
          o.info("     calibration: " + note);
        }
      }
      const auto& box = fixture(c.fixture).box;
      alternative_readings(c.fixture, box.entries(), o);
    }
    const bool ok = integer == 0 && real <= kMaxRealMismatchesPerTable;
    o.require(ok, std::string(t.title) + ": " + std::to_string(integer) +
                      " integer-row discrepancies, " + std::to_string(real) +
                      " real-row discrepancies (at most " +
                      std::to_string(kMaxRealMismatchesPerTable) + " tolerated)");
  }
  o.info("note: a transposed reading permutes inputs, so only FP/OFP can move; every table has a "
         "box with nonzero FP or OFP under both readings");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const SBoxTable& s = fixture("paper-8x8-proposed").box;
  const MetricsReport r = full_report(s);
  for (const auto& note : fixture("paper-8x8-proposed").notes) o.info("     " + note);
  o.require(s.is_permutation(), "Table 15 box is bijective");
  o.require(r.fp == 0, "FP " + std::to_string(r.fp.value_or(-1)) + " (printed 0)");
  o.require(r.ofp == 0, "OFP " + std::to_string(r.ofp.value_or(-1)) + " (printed 0)");
  o.require(r.nl == 112, "NL " + std::to_string(r.nl));
  o.require(r.du == 4, "du " + std::to_string(r.du));
  o.require(r.sum_sq == 133120, "sigma " + std::to_string(r.sum_sq));
  o.require(r.ai == 4, "AI " + std::to_string(r.ai));
  o.require(std::abs(r.snr - 8.758) <= kRealTol, "SNR " + f3(r.snr) + " (printed 8.758)");
  o.require(std::abs(r.to - 7.85) <= kEightBitToTol, "TO " + f3(r.to) + " (printed 7.85)");
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s[x] == x) o.info("     fixed point at x = " + std::to_string(x));
  }
  const MetricsReport aes = full_report(fixture("aes-8x8").box);
  const bool aes_ok = std::abs(aes.snr - 9.599) <= kAesTol && std::abs(aes.to - 7.86) <= kAesTol;
  o.info(std::string(aes_ok ? "ok   " : "NOTE ") + "AES stand-in initial: SNR " + f3(aes.snr) +
         " (printed 9.599), TO " + f3(aes.to) + " (printed 7.86)" +
         (aes_ok ? "" : "; AES is not the initial box of the 8x8 experiment"));
  return o;
}

std::string tally_line(const PipelineTally& t) {
  return "total " + std::to_string(t.total) + ", bij " + std::to_string(t.bijective) +
         ", FP " + std::to_string(t.fp_zero) + ", OFP " + std::to_string(t.ofp_zero) +
         ", SNR " + std::to_string(t.snr_better) + ", TO " + std::to_string(t.to_better) +
         ", K " + std::to_string(t.cc_better) + ", better " + std::to_string(t.all_better);
}

Outcome criterion4() {
  Outcome o;
  SearchConfig config;
  const auto r = enumerate_all(fixture("paper-4x4-initial").box, config);
  const auto& t = r.tally;
  o.info("     ordering " + std::string(to_string(config.ordering)) + ": " + tally_line(t));
  o.require(t.total == 1820, "total " + std::to_string(t.total) + " (printed 1820)");
  o.require(t.bijective == 840, "bijective " + std::to_string(t.bijective) + " (printed 840)");
  o.require(t.to_better == 355,
            "to_better " + std::to_string(t.to_better) + " (printed 355), TO <= initial");
  o.info("     reported, not scored: fp_zero " + std::to_string(t.fp_zero) +
         " (printed 356), ofp_zero " + std::to_string(t.ofp_zero) + " (printed 339)");
  for (OrderingPolicy p : {OrderingPolicy::kAscending, OrderingPolicy::kBestOfOrderings}) {
    SearchConfig alt;
    alt.ordering = p;
    o.info("     ordering " + std::string(to_string(p)) + ": " +
           tally_line(enumerate_all(fixture("paper-4x4-initial").box, alt).tally));
  }
  SearchConfig ge;
  ge.to_direction = ToDirection::kNotBetter;
  o.info("     TO >= initial: to_better " +
         std::to_string(enumerate_all(fixture("paper-4x4-initial").box, ge).tally.to_better));
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto r = enumerate_all(fixture("paper-5x5-initial").box, SearchConfig{});
  o.info("     " + tally_line(r.tally));
  o.require(r.tally.total == 201376, "total " + std::to_string(r.tally.total) + " (printed 201376)");
  o.require(r.tally.bijective == 83328,
            "bijective " + std::to_string(r.tally.bijective) +
                " (group count 83328; the printed 8332 is inconsistent with #T_K = 83238)");
  return o;
}

Outcome criterion6() {
  Outcome o;
  Rng rng(kSeed);
  const SBoxTable boxes[] = {random_bijection(3, rng), fixture("paper-4x4-initial").box,
                             fixture("paper-5x5-initial").box};
  for (const auto& s : boxes) {
    const auto got = enumerate_all(s, SearchConfig{}).tally.bijective;
    const auto want = oracle::invertible_subset_count(s.n());
    o.require(got == want, "n = " + std::to_string(s.n()) + ": enumerated " +
                               std::to_string(got) + ", |GL(n,2)|/n! = " + std::to_string(want));
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  Rng rng(kSeed + 7);
  for (int n = 4; n <= 6; ++n) {
    const SBoxTable s = random_bijection(n, rng);
    const MetricsReport base = full_report(s);
    int bad_general = 0;
    int bad_perm = 0;
    for (int i = 0; i < 200; ++i) {
      const MetricsReport r = full_report(apply_mix(s, random_invertible(n, rng)));
      if (r.nl != base.nl || r.degree != base.degree || r.ci != base.ci || r.du != base.du ||
          !(r.robustness == base.robustness) || r.abs_indicator != base.abs_indicator ||
          r.sum_sq != base.sum_sq || r.ai != base.ai) {
        ++bad_general;
      }
      const MetricsReport p = full_report(apply_mix(s, random_permutation_matrix(n, rng)));
      if (!rel_equal(p.snr, base.snr) || !rel_equal(p.to, base.to) ||
          !rel_equal(p.kappa(), base.kappa())) {
        ++bad_perm;
      }
    }
    o.require(bad_general == 0, "n = " + std::to_string(n) + ": 200 invertible mixes, " +
                                    std::to_string(bad_general) + " changed a spectral metric");
    o.require(bad_perm == 0, "n = " + std::to_string(n) + ": 200 permutation mixes, " +
                                 std::to_string(bad_perm) + " changed SNR/TO/kappa");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  Rng rng(kSeed + 8);
  using oracle::MetricTag;
  auto same = [](MetricTag tag, double a, double b) {
    return oracle::is_integral(tag) ? a == b : rel_equal(a, b);
  };
  for (int n = 3; n <= 6; ++n) {
    int bad = 0;
    int compared = 0;
    for (int i = 0; i < 100; ++i) {
      const SBoxTable s = random_bijection(n, rng);
      for (MetricTag tag : oracle::kAllTags) {
        if (n == 6 && tag == MetricTag::kConfusion) continue;
        if (n == 6 && tag == MetricTag::kTransparencyOrder && i >= 25) continue;
        ++compared;
        if (!same(tag, oracle::fast_metric(s, tag), oracle::naive_metric(s, tag))) {
          ++bad;
          o.info("     mismatch n = " + std::to_string(n) + " " +
                 std::string(oracle::to_string(tag)));
        }
      }
    }
    o.require(bad == 0, "n = " + std::to_string(n) + ": " + std::to_string(compared) +
                            " comparisons, " + std::to_string(bad) + " mismatches");
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  Rng rng(kSeed + 9);
  for (int n = 1; n <= 8; ++n) {
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto w = walsh_transform(random_function(n, rng));
      std::int64_t energy = 0;
      for (auto v : w) energy += std::int64_t{v} * v;
      if (energy != (std::int64_t{1} << (2 * n))) ++bad;
    }
    o.require(bad == 0, "Parseval n = " + std::to_string(n) + ": " + std::to_string(bad) +
                            " of 1000 violate");
  }
  for (int n = 1; n <= 4; ++n) {
    const std::size_t size = std::size_t{1} << n;
    int bad = 0;
    for (std::uint32_t code = 0; code < (1U << size); ++code) {
      std::vector<std::uint8_t> bits(size);
      for (std::size_t i = 0; i < size; ++i) bits[i] = (code >> i) & 1U;
      if (moebius_transform(moebius_transform(bits)) != bits) ++bad;
    }
    o.require(bad == 0, "Moebius involution, all " + std::to_string(1U << size) +
                            " tables at n = " + std::to_string(n));
  }
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto f = random_function(8, rng);
    const std::vector<std::uint8_t> bits(f.bits().begin(), f.bits().end());
    if (moebius_transform(moebius_transform(bits)) != bits) ++bad;
  }
  o.require(bad == 0, "Moebius involution, 1000 random tables at n = 8");
  return o;
}

Outcome criterion10() {
  Outcome o;
  const SBoxTable& s = fixture("paper-4x4-initial").box;
  SearchConfig c;
  c.mode = SearchMode::kGenetic;
  c.seed = kSeed;
  c.generations = 50;
  const BoxIdentity id = identify("paper-4x4-initial", s);
  const std::string first = search_json(id, genetic_search(s, c));
  const std::string again = search_json(id, genetic_search(s, c));
  c.workers = 4;
  const auto parallel = genetic_search(s, c);
  o.require(first == again, "rerun with the same seed is byte-identical");
  o.require(first == search_json(id, parallel), "workers 1 and 4 are byte-identical");
  const auto known = enumerate_all(s, SearchConfig{});
  int recovered = 0;
  for (const auto& a : parallel.accepted) {
    for (const auto& k : known.accepted) recovered += a.candidate == k.candidate;
  }
  o.require(recovered >= 1, std::to_string(recovered) + " of the " +
                                std::to_string(known.accepted.size()) +
                                " known accepted candidates found within 50 generations");
  return o;
}

Outcome criterion11() {
  Outcome o;
  VerifyOptions v;
  v.scope = VerifyScope::kCalibration;
  const VerifyResult r = run_verify(v);
  for (const char* key :
       {"snr_variant", "cc_model", "table9_repair", "table11_reading", "table15_repair"}) {
    const auto it = r.decisions.find(key);
    o.require(it != r.decisions.end(),
              std::string(key) + " = " + (it == r.decisions.end() ? "unresolved" : it->second));
  }
  const SBoxTable& s = fixture("paper-4x4-initial").box;
  const double kappa = confusion_summary(s, kDefaultCcModel).pick(kDefaultCcStatistic);
  o.require(std::abs(kappa - 1.357) <= kRealTol,
            "kappa(" + std::string(to_string(kDefaultCcModel)) + ", " +
                std::string(to_string(kDefaultCcStatistic)) + ") = " + f3(kappa) +
                " (printed 1.357)");
  const int m = s.m();
  for (CcModel model : {CcModel::kSingleBit, CcModel::kHammingSquared,
                        CcModel::kHammingSquaredNorm}) {
    const auto grid = confusion_coefficients(s, model);
    const double hi = model == CcModel::kSingleBit ? 1.0
                      : model == CcModel::kHammingSquared ? double(m) * m
                                                          : double(m);
    bool ok = true;
    for (Mask i = 0; i < 16; ++i) {
      ok = ok && grid.at(i, i) == 0;
      for (Mask j = 0; j < 16; ++j) {
        ok = ok && grid.at(i, j) == grid.at(j, i) && grid.at(i, j) >= 0 && grid.at(i, j) <= hi;
      }
    }
    o.require(ok, std::string(to_string(model)) + ": zero diagonal, symmetric, within [0, " +
                      f3(hi) + "]");
  }
  return o;
}

// Sampled tallies at n = 6 scale with the budget, and accepted boxes exist.
Outcome supplement() {
  Outcome o;
  const SBoxTable& s = fixture("paper-6x6-initial").box;
  SearchConfig c;
  c.mode = SearchMode::kRandomSample;
  c.seed = kSeed;
  c.max_candidates = 20000;
  const auto small = random_sample(s, c).tally;
  c.max_candidates = 100000;
  const auto big = random_sample(s, c).tally;
  o.info("     2e4 draws: " + tally_line(small));
  o.info("     1e5 draws: " + tally_line(big));
  const std::pair<const char*, std::pair<std::uint64_t, std::uint64_t>> rows[] = {
      {"bij", {small.bijective, big.bijective}}, {"FP", {small.fp_zero, big.fp_zero}},
      {"OFP", {small.ofp_zero, big.ofp_zero}},   {"TO", {small.to_better, big.to_better}},
      {"better", {small.all_better, big.all_better}}};
  for (const auto& [label, counts] : rows) {
    const double a = counts.first / 2e4;
    const double b = counts.second / 1e5;
    o.require(std::abs(a - b) <= 0.02, std::string(label) + " fraction " + f3(a) + " vs " + f3(b));
  }
  o.require(big.all_better > 0, "accepted boxes within 1e5 draws: " +
                                    std::to_string(big.all_better));
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace sboxlab

int main(int argc, char** argv) {
  using namespace sboxlab;
  std::optional<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
      return 2;
    }
  }
  const Criterion criteria[] = {
      {1, "golden 4x4 columns", criterion1},
      {2, "golden 5x5/6x6/7x7 columns", criterion2},
      {3, "golden 8x8 column and AES stand-in", criterion3},
      {4, "exhaustive 4x4 tally", criterion4},
      {5, "exhaustive 5x5 tally", criterion5},
      {6, "bijective counts vs group order", criterion6},
      {7, "mix invariance", criterion7},
      {8, "fast paths vs naive oracles", criterion8},
      {9, "transform properties", criterion9},
      {10, "search determinism", criterion10},
      {11, "calibration decisions", criterion11},
      {12, "sampled tallies at 6x6 (supplement)", supplement},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (only && *only != c.id) continue;
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d: %s  %s (%.1fs)\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs);
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
