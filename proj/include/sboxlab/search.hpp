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

// New S-boxes from linear combinations of the coordinate functions of an
// initial bijective S-box.
//
// A candidate is a list of n output masks; coordinate i of the candidate box
// is the component masks[i] . S of the initial box, i.e. the box M S for the
// matrix M whose rows are the masks. Candidates are screened in stages:
// bijectivity (rank of M), fixed points, then side-channel indicators
// against the initial box.

#ifndef SBOXLAB_SEARCH_HPP_
#define SBOXLAB_SEARCH_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sboxlab/boolfn.hpp"
#include "sboxlab/metrics.hpp"

namespace sboxlab {

// Every component v . S of the initial box, v in [0, 2^n).
class ComponentSet {
 public:
  // Throws PreconditionError unless s is an n x n bijection.
  static ComponentSet build(const SBoxTable& s);

  int n() const noexcept { return initial_.n(); }
  std::size_t size() const noexcept { return functions_.size(); }
  const TruthTable& operator[](Mask a) const { return functions_.at(a); }
  const SBoxTable& initial() const noexcept { return initial_; }

 private:
  explicit ComponentSet(SBoxTable initial);

  SBoxTable initial_;
  std::vector<TruthTable> functions_;
};

class MaskCandidate {
 public:
  // Throws InvalidInput if a mask repeats or is >= 2^n.
  MaskCandidate(int n, std::vector<Mask> masks);

  int n() const noexcept { return n_; }
  std::span<const Mask> masks() const noexcept { return masks_; }
  Mask operator[](std::size_t i) const noexcept { return masks_[i]; }

  MaskCandidate sorted_ascending() const;
  MaskCandidate sorted_descending() const;
  BinaryMatrix matrix() const { return BinaryMatrix(n_, masks_); }

  bool operator==(const MaskCandidate& other) const = default;
  auto operator<=>(const MaskCandidate& other) const = default;

 private:
  int n_;
  std::vector<Mask> masks_;
};

enum class SearchMode { kExhaustive, kRandomSample, kGenetic };

// How the masks of an unordered selection are placed on coordinates. Only
// fixed points and opposite fixed points depend on the placement.
//   kDescending: largest mask on coordinate 0 (the default).
//   kAscending:  smallest mask on coordinate 0.
//   kBestOfOrderings: the first of the n! placements, starting from the
//     descending one, that has no fixed or opposite fixed point.
enum class OrderingPolicy { kDescending, kAscending, kBestOfOrderings };

// Direction of the transparency-order acceptance test. Ties always pass.
enum class ToDirection { kNotWorse, kNotBetter };

std::string_view to_string(SearchMode mode);
std::string_view to_string(OrderingPolicy policy);
std::string_view to_string(ToDirection direction);
SearchMode parse_search_mode(std::string_view tag);
OrderingPolicy parse_ordering_policy(std::string_view tag);
ToDirection parse_to_direction(std::string_view tag);

// Extra acceptance requirements on top of bijective / FP = 0 / OFP = 0 /
// TO test. Both are off by default.
struct Thresholds {
  bool require_snr = false;  // SNR strictly lower than the initial box
  bool require_cc = false;   // kappa strictly lower than the initial box
};

struct SearchConfig {
  SearchMode mode = SearchMode::kExhaustive;
  std::uint64_t seed = 1;
  // Random-sample draws; genetic mode stops after this many distinct
  // evaluations when nonzero.
  std::uint64_t max_candidates = 0;
  int population_size = 64;
  int generations = 50;
  int tournament_size = 4;
  double mutation_rate = 0.1;
  OrderingPolicy ordering = OrderingPolicy::kDescending;
  ToDirection to_direction = ToDirection::kNotWorse;
  Thresholds thresholds;
  CcModel cc_model = kDefaultCcModel;
  CcStatistic cc_statistic = kDefaultCcStatistic;
  int workers = 1;

  // Throws InvalidInput on an inconsistent configuration.
  void validate() const;
};

// Counters in the vocabulary of the staged filter. Everything after
// `bijective` is counted over bijective candidates only.
struct PipelineTally {
  std::uint64_t total = 0;
  std::uint64_t bijective = 0;
  std::uint64_t fp_zero = 0;
  std::uint64_t ofp_zero = 0;
  std::uint64_t snr_better = 0;  // strictly lower SNR
  std::uint64_t to_better = 0;   // passes the TO direction test
  std::uint64_t cc_better = 0;   // strictly lower kappa
  std::uint64_t all_better = 0;  // accepted

  PipelineTally& operator+=(const PipelineTally& other);
  bool operator==(const PipelineTally& other) const = default;
};

// Side-channel reference values of the initial box.
struct Baseline {
  double snr = 0;
  double to = 0;
  double cc = 0;

  static Baseline of(const SBoxTable& s, CcModel model = kDefaultCcModel,
                     CcStatistic stat = kDefaultCcStatistic);
};

struct Verdict {
  bool bijective = false;
  bool fp_zero = false;
  bool ofp_zero = false;
  bool snr_better = false;
  bool to_pass = false;
  bool cc_better = false;
  bool accepted = false;
  // Placement after the ordering policy; equals the input when not bijective.
  MaskCandidate ordered;
  double snr = 0;
  double to = 0;
  double cc = 0;
};

struct AcceptedBox {
  MaskCandidate candidate;
  SBoxTable box;
  MetricsReport report;
};

struct SearchResult {
  SearchConfig config;
  MetricsReport baseline;
  PipelineTally tally;
  std::vector<AcceptedBox> accepted;  // sorted by candidate, no duplicates
};

SBoxTable assemble(const MaskCandidate& candidate, const ComponentSet& g);

// Rank test on the mask matrix; equals bijectivity of assemble() because the
// initial box is a bijection.
bool is_bijective(const MaskCandidate& candidate);

MaskCandidate ordering_refinement(const MaskCandidate& candidate,
                                  const ComponentSet& g, OrderingPolicy policy);

// Runs every stage for one candidate; when `tally` is given, each stage
// reached increments its counter.
Verdict filter_pipeline(const MaskCandidate& candidate, const ComponentSet& g,
                        const Baseline& baseline, const SearchConfig& config,
                        PipelineTally* tally = nullptr);

// Every unordered n-subset of [0, 2^n). Throws PreconditionError for n > 5.
SearchResult enumerate_all(const SBoxTable& initial, const SearchConfig& config);

// config.max_candidates independent uniform n-subsets.
SearchResult random_sample(const SBoxTable& initial, const SearchConfig& config);

SearchResult genetic_search(const SBoxTable& initial, const SearchConfig& config);

// Dispatches on config.mode.
SearchResult run_search(const SBoxTable& initial, const SearchConfig& config);

}  // namespace sboxlab

#endif  // SBOXLAB_SEARCH_HPP_
