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

#include "sboxlab/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "detail.hpp"
#include "sboxlab/error.hpp"

namespace sboxlab {
namespace {

constexpr double kTieEpsilon = 1e-9;
constexpr int kMaxExhaustiveN = 5;
constexpr std::uint64_t kEnumerationBlock = 2048;

bool strictly_lower(double value, double reference) {
  return value < reference - kTieEpsilon * std::max(1.0, std::abs(reference));
}

bool not_higher(double value, double reference) {
  return value <= reference + kTieEpsilon * std::max(1.0, std::abs(reference));
}

SBoxTable assemble_masks(std::span<const Mask> masks, const SBoxTable& initial) {
  std::vector<std::uint32_t> out(initial.size());
  for (std::size_t x = 0; x < out.size(); ++x) {
    const std::uint32_t y = initial[x];
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      v |= static_cast<std::uint32_t>(parity(masks[i] & y)) << i;
    }
    out[x] = v;
  }
  return SBoxTable(initial.n(), initial.m(), std::move(out));
}

bool fixed_point_free(const SBoxTable& s) {
  return fixed_points(s) == 0 && opposite_fixed_points(s) == 0;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// k-subset of [0, n) with the given lexicographic rank.
std::vector<Mask> unrank_combination(std::uint64_t rank, std::uint64_t n,
                                     std::uint64_t k) {
  std::vector<Mask> out;
  out.reserve(k);
  std::uint64_t next = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    for (;; ++next) {
      const std::uint64_t with = binomial(n - next - 1, k - i - 1);
      if (rank < with) break;
      rank -= with;
    }
    out.push_back(static_cast<Mask>(next++));
  }
  return out;
}

bool next_combination(std::vector<Mask>& c, Mask n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - (k - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct Partial {
  PipelineTally tally;
  std::vector<MaskCandidate> accepted;
};

SearchResult finish(const SBoxTable& initial, const SearchConfig& config,
                    const ComponentSet& g, PipelineTally tally,
                    std::vector<MaskCandidate> accepted) {
  std::sort(accepted.begin(), accepted.end());
  accepted.erase(std::unique(accepted.begin(), accepted.end()), accepted.end());

  SearchResult result;
  result.config = config;
  ReportOptions options;
  options.cc_model = config.cc_model;
  options.cc_statistic = config.cc_statistic;
  result.baseline = full_report(initial, options);
  result.tally = tally;
  std::vector<std::optional<AcceptedBox>> boxes(accepted.size());
  detail::parallel_for(accepted.size(), config.workers, [&](std::size_t i) {
    SBoxTable box = assemble(accepted[i], g);
    MetricsReport rep = full_report(box, options);
    boxes[i] = AcceptedBox{accepted[i], std::move(box), std::move(rep)};
  });
  result.accepted.reserve(boxes.size());
  for (auto& b : boxes) result.accepted.push_back(std::move(*b));
  return result;
}

Baseline baseline_for(const SBoxTable& initial, const SearchConfig& config) {
  return Baseline::of(initial, config.cc_model, config.cc_statistic);
}

MaskCandidate random_candidate(detail::Rng& rng, int n) {
  const std::uint64_t universe = std::uint64_t{1} << n;
  std::vector<Mask> masks;
  masks.reserve(static_cast<std::size_t>(n));
  while (masks.size() < static_cast<std::size_t>(n)) {
    const auto m = static_cast<Mask>(rng.below(universe));
    if (std::find(masks.begin(), masks.end(), m) == masks.end()) masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());
  return MaskCandidate(n, std::move(masks));
}

}  // namespace

ComponentSet::ComponentSet(SBoxTable initial) : initial_(std::move(initial)) {
  functions_.reserve(initial_.size());
  for (Mask a = 0; a < initial_.size(); ++a) {
    functions_.push_back(component(initial_, a));
  }
}

ComponentSet ComponentSet::build(const SBoxTable& s) {
  if (!s.is_permutation()) {
    throw PreconditionError("initial S-box must be an n x n bijection");
  }
  return ComponentSet(s);
}

MaskCandidate::MaskCandidate(int n, std::vector<Mask> masks)
    : n_(n), masks_(std::move(masks)) {
  if (n < 1 || n > kMaxVariables) throw InvalidInput("candidate width out of range");
  if (masks_.size() != static_cast<std::size_t>(n)) {
    throw InvalidInput("candidate needs " + std::to_string(n) + " masks, got " +
                       std::to_string(masks_.size()));
  }
  std::vector<Mask> sorted = masks_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (std::uint64_t{sorted[i]} >= (std::uint64_t{1} << n)) {
      throw InvalidInput("mask " + std::to_string(sorted[i]) + " out of range");
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw InvalidInput("mask " + std::to_string(sorted[i]) + " repeated");
    }
  }
}

MaskCandidate MaskCandidate::sorted_ascending() const {
  std::vector<Mask> m = masks_;
  std::sort(m.begin(), m.end());
  return MaskCandidate(n_, std::move(m));
}

MaskCandidate MaskCandidate::sorted_descending() const {
  std::vector<Mask> m = masks_;
  std::sort(m.begin(), m.end(), std::greater<>());
  return MaskCandidate(n_, std::move(m));
}

std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::kExhaustive: return "exhaustive";
    case SearchMode::kRandomSample: return "random-sample";
    case SearchMode::kGenetic: return "genetic";
  }
  return "?";
}

std::string_view to_string(OrderingPolicy policy) {
  switch (policy) {
    case OrderingPolicy::kDescending: return "descending";
    case OrderingPolicy::kAscending: return "ascending";
    case OrderingPolicy::kBestOfOrderings: return "best-of-orderings";
  }
  return "?";
}

std::string_view to_string(ToDirection direction) {
  return direction == ToDirection::kNotWorse ? "le" : "ge";
}

SearchMode parse_search_mode(std::string_view tag) {
  for (auto m : {SearchMode::kExhaustive, SearchMode::kRandomSample,
                 SearchMode::kGenetic}) {
    if (tag == to_string(m)) return m;
  }
  throw InvalidInput("unknown search mode '" + std::string(tag) + "'");
}

OrderingPolicy parse_ordering_policy(std::string_view tag) {
  for (auto p : {OrderingPolicy::kDescending, OrderingPolicy::kAscending,
                 OrderingPolicy::kBestOfOrderings}) {
    if (tag == to_string(p)) return p;
  }
  throw InvalidInput("unknown ordering policy '" + std::string(tag) + "'");
}

ToDirection parse_to_direction(std::string_view tag) {
  if (tag == "le") return ToDirection::kNotWorse;
  if (tag == "ge") return ToDirection::kNotBetter;
  throw InvalidInput("unknown TO direction '" + std::string(tag) +
                     "' (expected le or ge)");
}

void SearchConfig::validate() const {
  if (workers < 1) throw InvalidInput("workers must be >= 1");
  if (mode == SearchMode::kGenetic) {
    if (population_size < 2) throw InvalidInput("population size must be >= 2");
    if (generations < 1) throw InvalidInput("generations must be >= 1");
    if (tournament_size < 1) throw InvalidInput("tournament size must be >= 1");
    if (!(mutation_rate > 0.0 && mutation_rate < 1.0)) {
      throw InvalidInput("mutation rate must lie in (0, 1)");
    }
  }
  if (mode == SearchMode::kRandomSample && max_candidates == 0) {
    throw InvalidInput("random-sample mode needs a candidate budget");
  }
}

PipelineTally& PipelineTally::operator+=(const PipelineTally& o) {
  total += o.total;
  bijective += o.bijective;
  fp_zero += o.fp_zero;
  ofp_zero += o.ofp_zero;
  snr_better += o.snr_better;
  to_better += o.to_better;
  cc_better += o.cc_better;
  all_better += o.all_better;
  return *this;
}

Baseline Baseline::of(const SBoxTable& s, CcModel model, CcStatistic stat) {
  Baseline b;
  b.snr = snr_dpa(s);
  b.to = transparency_order(s);
  b.cc = confusion_summary(s, model).pick(stat);
  return b;
}

SBoxTable assemble(const MaskCandidate& candidate, const ComponentSet& g) {
  if (candidate.n() != g.n()) {
    throw InvalidInput("candidate width does not match the component set");
  }
  return assemble_masks(candidate.masks(), g.initial());
}

bool is_bijective(const MaskCandidate& candidate) {
  return gf2_rank(candidate.masks()) == candidate.n();
}

MaskCandidate ordering_refinement(const MaskCandidate& candidate,
                                  const ComponentSet& g, OrderingPolicy policy) {
  switch (policy) {
    case OrderingPolicy::kAscending:
      return candidate.sorted_ascending();
    case OrderingPolicy::kDescending:
      return candidate.sorted_descending();
    case OrderingPolicy::kBestOfOrderings: {
      const MaskCandidate canonical = candidate.sorted_descending();
      std::vector<Mask> order(canonical.masks().begin(), canonical.masks().end());
      do {
        if (fixed_point_free(assemble_masks(order, g.initial()))) {
          return MaskCandidate(candidate.n(), order);
        }
      } while (std::prev_permutation(order.begin(), order.end()));
      return canonical;
    }
  }
  return candidate;
}

Verdict filter_pipeline(const MaskCandidate& candidate, const ComponentSet& g,
                        const Baseline& baseline, const SearchConfig& config,
                        PipelineTally* tally) {
  PipelineTally local;
  Verdict v{.ordered = candidate};
  ++local.total;
  v.bijective = is_bijective(candidate);
  if (v.bijective) {
    ++local.bijective;
    v.ordered = ordering_refinement(candidate, g, config.ordering);
    const SBoxTable box = assemble(v.ordered, g);
    v.fp_zero = fixed_points(box) == 0;
    v.ofp_zero = opposite_fixed_points(box) == 0;
    local.fp_zero += v.fp_zero;
    local.ofp_zero += v.ofp_zero;

    v.snr = snr_dpa(box);
    v.to = transparency_order(box);
    v.cc = confusion_summary(box, config.cc_model).pick(config.cc_statistic);
    v.snr_better = strictly_lower(v.snr, baseline.snr);
    v.to_pass = config.to_direction == ToDirection::kNotWorse
                    ? not_higher(v.to, baseline.to)
                    : not_higher(-v.to, -baseline.to);
    v.cc_better = strictly_lower(v.cc, baseline.cc);
    local.snr_better += v.snr_better;
    local.to_better += v.to_pass;
    local.cc_better += v.cc_better;

    v.accepted = v.fp_zero && v.ofp_zero && v.to_pass &&
                 (!config.thresholds.require_snr || v.snr_better) &&
                 (!config.thresholds.require_cc || v.cc_better);
    local.all_better += v.accepted;
  }
  if (tally != nullptr) *tally += local;
  return v;
}

SearchResult enumerate_all(const SBoxTable& initial, const SearchConfig& config) {
  config.validate();
  if (initial.n() > kMaxExhaustiveN) {
    throw PreconditionError("exhaustive enumeration supports n <= " +
                            std::to_string(kMaxExhaustiveN) + " (got n = " +
                            std::to_string(initial.n()) +
                            "); use --mode genetic or random-sample");
  }
  const ComponentSet g = ComponentSet::build(initial);
  const Baseline baseline = baseline_for(initial, config);
  const int n = initial.n();
  const std::uint64_t universe = std::uint64_t{1} << n;
  const std::uint64_t total = binomial(universe, static_cast<std::uint64_t>(n));
  const std::uint64_t blocks = (total + kEnumerationBlock - 1) / kEnumerationBlock;

  std::vector<Partial> partials(blocks);
  detail::parallel_for(blocks, config.workers, [&](std::size_t b) {
    Partial& part = partials[b];
    const std::uint64_t begin = b * kEnumerationBlock;
    const std::uint64_t end = std::min(total, begin + kEnumerationBlock);
    std::vector<Mask> combo = unrank_combination(begin, universe, n);
    for (std::uint64_t r = begin; r < end; ++r) {
      const Verdict v = filter_pipeline(MaskCandidate(n, combo), g, baseline,
                                        config, &part.tally);
      if (v.accepted) part.accepted.push_back(v.ordered);
      next_combination(combo, static_cast<Mask>(universe));
    }
  });

  PipelineTally tally;
  std::vector<MaskCandidate> accepted;
  for (auto& p : partials) {
    tally += p.tally;
    for (auto& c : p.accepted) accepted.push_back(std::move(c));
  }
  return finish(initial, config, g, tally, std::move(accepted));
}

SearchResult random_sample(const SBoxTable& initial, const SearchConfig& config) {
  config.validate();
  const ComponentSet g = ComponentSet::build(initial);
  const Baseline baseline = baseline_for(initial, config);
  const int n = initial.n();
  const std::uint64_t draws = config.max_candidates;
  const std::uint64_t blocks = (draws + kEnumerationBlock - 1) / kEnumerationBlock;

  std::vector<Partial> partials(blocks);
  detail::parallel_for(blocks, config.workers, [&](std::size_t b) {
    Partial& part = partials[b];
    const std::uint64_t begin = b * kEnumerationBlock;
    const std::uint64_t end = std::min(draws, begin + kEnumerationBlock);
    for (std::uint64_t i = begin; i < end; ++i) {
      detail::Rng rng = detail::Rng::stream(config.seed, i);
      const Verdict v = filter_pipeline(random_candidate(rng, n), g, baseline,
                                        config, &part.tally);
      if (v.accepted) part.accepted.push_back(v.ordered);
    }
  });

  PipelineTally tally;
  std::vector<MaskCandidate> accepted;
  for (auto& p : partials) {
    tally += p.tally;
    for (auto& c : p.accepted) accepted.push_back(std::move(c));
  }
  return finish(initial, config, g, tally, std::move(accepted));
}

namespace {

// Larger is better, compared lexicographically.
using Fitness = std::tuple<int, int, double, double, double>;

Fitness fitness_of(const MaskCandidate& c, const Verdict& v, const Baseline& b,
                   const SearchConfig& config) {
  const int rank = gf2_rank(c.masks());
  if (!v.bijective) return {rank, 0, 0.0, 0.0, 0.0};
  const double to_gain =
      config.to_direction == ToDirection::kNotWorse ? b.to - v.to : v.to - b.to;
  return {rank, (v.fp_zero && v.ofp_zero) ? 1 : 0, to_gain, b.snr - v.snr,
          b.cc - v.cc};
}

MaskCandidate crossover(const MaskCandidate& a, const MaskCandidate& b,
                        detail::Rng& rng) {
  const int n = a.n();
  std::vector<Mask> child;
  child.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Mask pick = (rng.next() & 1) ? a[i] : b[i];
    if (std::find(child.begin(), child.end(), pick) == child.end()) {
      child.push_back(pick);
    }
  }
  // Repair: prefer unused parent masks, then the whole universe.
  std::vector<Mask> pool;
  for (int i = 0; i < n; ++i) {
    for (Mask m : {a[i], b[i]}) {
      if (std::find(child.begin(), child.end(), m) == child.end() &&
          std::find(pool.begin(), pool.end(), m) == pool.end()) {
        pool.push_back(m);
      }
    }
  }
  while (child.size() < static_cast<std::size_t>(n) && !pool.empty()) {
    const std::size_t k = rng.below(pool.size());
    child.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  const std::uint64_t universe = std::uint64_t{1} << n;
  while (child.size() < static_cast<std::size_t>(n)) {
    const auto m = static_cast<Mask>(rng.below(universe));
    if (std::find(child.begin(), child.end(), m) == child.end()) child.push_back(m);
  }
  std::sort(child.begin(), child.end());
  return MaskCandidate(n, std::move(child));
}

MaskCandidate mutate(const MaskCandidate& c, detail::Rng& rng) {
  const int n = c.n();
  std::vector<Mask> masks(c.masks().begin(), c.masks().end());
  const std::size_t pos = rng.below(masks.size());
  const std::uint64_t universe = std::uint64_t{1} << n;
  for (;;) {
    const auto m = static_cast<Mask>(rng.below(universe));
    if (std::find(masks.begin(), masks.end(), m) == masks.end()) {
      masks[pos] = m;
      break;
    }
  }
  std::sort(masks.begin(), masks.end());
  return MaskCandidate(n, std::move(masks));
}

}  // namespace

SearchResult genetic_search(const SBoxTable& initial, const SearchConfig& config) {
  config.validate();
  if (config.mode != SearchMode::kGenetic) {
    throw InvalidInput("genetic search needs mode = genetic");
  }
  const ComponentSet g = ComponentSet::build(initial);
  const Baseline baseline = baseline_for(initial, config);
  const int n = initial.n();
  detail::Rng rng(config.seed);

  struct Scored {
    Verdict verdict;
    Fitness fitness;
  };
  std::map<MaskCandidate, Scored> seen;
  PipelineTally tally;
  std::vector<MaskCandidate> accepted;
  bool budget_hit = false;

  auto evaluate = [&](const std::vector<MaskCandidate>& population) {
    std::vector<MaskCandidate> fresh;
    std::set<MaskCandidate> queued;
    for (const auto& c : population) {
      if (!seen.count(c) && queued.insert(c).second) fresh.push_back(c);
    }
    if (config.max_candidates != 0) {
      const std::uint64_t room = config.max_candidates - std::min<std::uint64_t>(
                                                             config.max_candidates,
                                                             seen.size());
      if (fresh.size() > room) {
        fresh.erase(fresh.begin() + static_cast<std::ptrdiff_t>(room), fresh.end());
        budget_hit = true;
      }
    }
    std::vector<std::optional<Verdict>> verdicts(fresh.size());
    std::vector<PipelineTally> tallies(fresh.size());
    detail::parallel_for(fresh.size(), config.workers, [&](std::size_t i) {
      verdicts[i] = filter_pipeline(fresh[i], g, baseline, config, &tallies[i]);
    });
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      tally += tallies[i];
      if (verdicts[i]->accepted) accepted.push_back(verdicts[i]->ordered);
      seen.emplace(fresh[i], Scored{*verdicts[i],
                                    fitness_of(fresh[i], *verdicts[i], baseline, config)});
    }
  };

  auto fitness = [&](const MaskCandidate& c) -> Fitness {
    auto it = seen.find(c);
    // Candidates cut off by the evaluation budget rank below everything.
    if (it == seen.end()) return {-1, 0, 0.0, 0.0, 0.0};
    return it->second.fitness;
  };

  const auto pop_size = static_cast<std::size_t>(config.population_size);
  std::vector<MaskCandidate> population;
  population.reserve(pop_size);
  for (std::size_t i = 0; i < pop_size; ++i) population.push_back(random_candidate(rng, n));
  evaluate(population);

  auto best_index = [&](const std::vector<MaskCandidate>& pop) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
      if (fitness(pop[i]) > fitness(pop[best])) best = i;
    }
    return best;
  };

  auto tournament = [&]() -> const MaskCandidate& {
    std::size_t best = rng.below(pop_size);
    for (int t = 1; t < config.tournament_size; ++t) {
      const std::size_t other = rng.below(pop_size);
      if (fitness(population[other]) > fitness(population[best])) best = other;
    }
    return population[best];
  };

  for (int gen = 0; gen < config.generations && !budget_hit; ++gen) {
    std::vector<MaskCandidate> next;
    next.reserve(pop_size);
    next.push_back(population[best_index(population)]);
    while (next.size() < pop_size) {
      const MaskCandidate& a = tournament();
      const MaskCandidate& b = tournament();
      MaskCandidate child = crossover(a, b, rng);
      if (rng.unit() < config.mutation_rate) child = mutate(child, rng);
      next.push_back(std::move(child));
    }
    population = std::move(next);
    evaluate(population);
  }
  return finish(initial, config, g, tally, std::move(accepted));
}

SearchResult run_search(const SBoxTable& initial, const SearchConfig& config) {
  switch (config.mode) {
    case SearchMode::kExhaustive: return enumerate_all(initial, config);
    case SearchMode::kRandomSample: return random_sample(initial, config);
    case SearchMode::kGenetic: return genetic_search(initial, config);
  }
  throw InvalidInput("unknown search mode");
}

}  // namespace sboxlab
