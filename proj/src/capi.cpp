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

#include "sboxlab/sboxlab.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "sboxlab/boolfn.hpp"
#include "sboxlab/error.hpp"
#include "sboxlab/fixtures.hpp"
#include "sboxlab/io.hpp"
#include "sboxlab/metrics.hpp"
#include "sboxlab/report.hpp"
#include "sboxlab/search.hpp"
#include "sboxlab/verify.hpp"

struct sbx_sbox {
  sboxlab::SBoxTable table;
  std::string name;
  std::string notes;
};

struct sbx_report {
  sboxlab::MetricsReport report;
  std::string name;
  std::string digest;
};

struct sbx_search {
  sboxlab::SearchResult result;
  sboxlab::BoxIdentity initial;
};

namespace {

thread_local std::string last_error;

sbx_status fail(sbx_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, mapping exceptions onto status codes.
template <typename Fn>
sbx_status guarded(Fn&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const sboxlab::Error& e) {
    return fail(static_cast<sbx_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SBX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SBX_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string_view or_default(const char* s, std::string_view fallback) {
  return s == nullptr || *s == '\0' ? fallback : std::string_view(s);
}

#define SBX_REQUIRE(cond, what) \
  if (!(cond)) return fail(SBX_ERR_USAGE, what)

sboxlab::MetricSelection selection(const char* metrics) {
  return metrics == nullptr ? sboxlab::MetricSelection{}
                            : sboxlab::parse_metric_selection(metrics);
}

}  // namespace

extern "C" {

const char* sbx_version(void) { return sboxlab::kToolVersion.data(); }

const char* sbx_last_error(void) { return last_error.c_str(); }

void sbx_string_free(char* s) { std::free(s); }

sbx_status sbx_sbox_create(int n, int m, const uint32_t* entries, size_t count,
                           sbx_sbox** out) {
  SBX_REQUIRE(out != nullptr && (entries != nullptr || count == 0), "null argument");
  return guarded([&] {
    std::vector<std::uint32_t> values(entries, entries + count);
    if (n < 1 || n > sboxlab::kMaxVariables || count != (std::size_t{1} << n)) {
      throw sboxlab::InvalidInput("entry count must be 2^n");
    }
    *out = new sbx_sbox{sboxlab::SBoxTable(n, m, std::move(values)), "inline", ""};
    return SBX_OK;
  });
}

sbx_status sbx_sbox_parse(const char* text, const char* format, int m_override,
                          sbx_sbox** out) {
  SBX_REQUIRE(text != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const auto f = sboxlab::parse_box_format(or_default(format, "decimal"));
    *out = new sbx_sbox{sboxlab::parse_sbox(text, f, m_override), "inline", ""};
    return SBX_OK;
  });
}

sbx_status sbx_sbox_load(const char* path, const char* format, int m_override,
                         sbx_sbox** out) {
  SBX_REQUIRE(path != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const auto f = format == nullptr || *format == '\0' ? sboxlab::format_for_path(path)
                                                        : sboxlab::parse_box_format(format);
    *out = new sbx_sbox{sboxlab::load_sbox_file(path, f, m_override), path, ""};
    return SBX_OK;
  });
}

sbx_status sbx_sbox_fixture(const char* name, sbx_sbox** out) {
  SBX_REQUIRE(name != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const sboxlab::Fixture& f = sboxlab::fixture(name);
    std::string notes = "source: " + f.source + "\n";
    for (const auto& n : f.notes) notes += n + "\n";
    *out = new sbx_sbox{f.box, f.name, std::move(notes)};
    return SBX_OK;
  });
}

void sbx_sbox_free(sbx_sbox* s) { delete s; }

int sbx_sbox_n(const sbx_sbox* s) { return s ? s->table.n() : 0; }
int sbx_sbox_m(const sbx_sbox* s) { return s ? s->table.m() : 0; }
size_t sbx_sbox_size(const sbx_sbox* s) { return s ? s->table.size() : 0; }

uint32_t sbx_sbox_get(const sbx_sbox* s, size_t x) {
  return s && x < s->table.size() ? s->table[x] : 0;
}

int sbx_sbox_is_bijective(const sbx_sbox* s) {
  return s && s->table.n() == s->table.m() && s->table.is_permutation() ? 1 : 0;
}

const char* sbx_sbox_name(const sbx_sbox* s) { return s ? s->name.c_str() : ""; }
const char* sbx_sbox_notes(const sbx_sbox* s) { return s ? s->notes.c_str() : ""; }

sbx_status sbx_sbox_set_name(sbx_sbox* s, const char* name) {
  SBX_REQUIRE(s != nullptr && name != nullptr, "null argument");
  return guarded([&] {
    s->name = name;
    return SBX_OK;
  });
}

sbx_status sbx_sbox_format(const sbx_sbox* s, const char* format, char** out) {
  SBX_REQUIRE(s != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const auto f = sboxlab::parse_box_format(or_default(format, "decimal"));
    *out = copy_string(sboxlab::format_sbox(s->table, f));
    return SBX_OK;
  });
}

sbx_status sbx_sbox_digest(const sbx_sbox* s, char** out) {
  SBX_REQUIRE(s != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = copy_string(sboxlab::content_digest(s->table));
    return SBX_OK;
  });
}

size_t sbx_fixture_count(void) { return sboxlab::fixture_names().size(); }

const char* sbx_fixture_name(size_t index) {
  const auto& names = sboxlab::fixture_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

sbx_status sbx_evaluate(const sbx_sbox* s, const sbx_report_options* options,
                        sbx_report** out) {
  SBX_REQUIRE(s != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    sboxlab::ReportOptions o;
    if (options != nullptr) {
      if (options->cc_model) o.cc_model = sboxlab::parse_cc_model(options->cc_model);
      if (options->cc_statistic) {
        o.cc_statistic = sboxlab::parse_cc_statistic(options->cc_statistic);
      }
      if (options->snr_variant) o.snr_variant = sboxlab::parse_snr_variant(options->snr_variant);
    }
    auto report = sboxlab::full_report(s->table, o);
    *out = new sbx_report{std::move(report), s->name, sboxlab::content_digest(s->table)};
    return SBX_OK;
  });
}

void sbx_report_free(sbx_report* r) { delete r; }

sbx_status sbx_report_get(const sbx_report* r, const char* tag, double* value) {
  SBX_REQUIRE(r != nullptr && tag != nullptr && value != nullptr, "null argument");
  return guarded([&] {
    *value = sboxlab::metric_value(r->report, sboxlab::oracle::parse_metric_tag(tag));
    return SBX_OK;
  });
}

sbx_status sbx_report_robustness(const sbx_report* r, int64_t* num, int64_t* den) {
  SBX_REQUIRE(r != nullptr && num != nullptr && den != nullptr, "null argument");
  *num = r->report.robustness.num;
  *den = r->report.robustness.den;
  return SBX_OK;
}

sbx_status sbx_report_json(const sbx_report* r, const char* metrics, char** out) {
  SBX_REQUIRE(r != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = copy_string(sboxlab::report_json(sboxlab::BoxIdentity{r->name, r->digest},
                                            r->report, selection(metrics)));
    return SBX_OK;
  });
}

sbx_status sbx_report_table(const sbx_report* const* reports, const char* const* titles,
                            size_t count, const sbx_report* const* spread,
                            size_t spread_count, const char* metrics, char** out) {
  SBX_REQUIRE(out != nullptr && (reports != nullptr || count == 0), "null argument");
  SBX_REQUIRE(spread != nullptr || spread_count == 0, "null argument");
  return guarded([&] {
    std::vector<sboxlab::TableColumn> columns;
    for (size_t i = 0; i < count; ++i) {
      const std::string title =
          titles != nullptr && titles[i] != nullptr ? titles[i] : reports[i]->name;
      columns.push_back({title, reports[i]->report});
    }
    std::vector<sboxlab::MetricsReport> pool;
    for (size_t i = 0; i < spread_count; ++i) pool.push_back(spread[i]->report);
    *out = copy_string(sboxlab::metric_table(columns, pool, selection(metrics)));
    return SBX_OK;
  });
}

void sbx_search_options_init(sbx_search_options* options) {
  if (options == nullptr) return;
  const sboxlab::SearchConfig d;
  *options = sbx_search_options{};
  options->mode = "exhaustive";
  options->seed = d.seed;
  options->max_candidates = d.max_candidates;
  options->population = d.population_size;
  options->generations = d.generations;
  options->ordering = "descending";
  options->to_direction = "le";
  options->cc_model = nullptr;
  options->require_snr = 0;
  options->require_cc = 0;
  options->workers = d.workers;
}

sbx_status sbx_search_run(const sbx_sbox* initial, const sbx_search_options* options,
                          sbx_search** out) {
  SBX_REQUIRE(initial != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    sbx_search_options o;
    sbx_search_options_init(&o);
    if (options != nullptr) o = *options;
    sboxlab::SearchConfig c;
    c.mode = sboxlab::parse_search_mode(or_default(o.mode, "exhaustive"));
    c.seed = o.seed;
    c.max_candidates = o.max_candidates;
    c.population_size = o.population;
    c.generations = o.generations;
    c.ordering = sboxlab::parse_ordering_policy(or_default(o.ordering, "descending"));
    c.to_direction = sboxlab::parse_to_direction(or_default(o.to_direction, "le"));
    if (o.cc_model != nullptr) c.cc_model = sboxlab::parse_cc_model(o.cc_model);
    c.thresholds.require_snr = o.require_snr != 0;
    c.thresholds.require_cc = o.require_cc != 0;
    c.workers = o.workers;
    auto result = sboxlab::run_search(initial->table, c);
    *out = new sbx_search{std::move(result), sboxlab::identify(initial->name, initial->table)};
    return SBX_OK;
  });
}

void sbx_search_free(sbx_search* s) { delete s; }

sbx_status sbx_search_tally(const sbx_search* s, sbx_tally* out) {
  SBX_REQUIRE(s != nullptr && out != nullptr, "null argument");
  const auto& t = s->result.tally;
  *out = sbx_tally{t.total,      t.bijective, t.fp_zero,   t.ofp_zero,
                   t.snr_better, t.to_better, t.cc_better, t.all_better};
  return SBX_OK;
}

size_t sbx_search_accepted_count(const sbx_search* s) {
  return s ? s->result.accepted.size() : 0;
}

sbx_status sbx_search_accepted(const sbx_search* s, size_t index, sbx_sbox** out) {
  SBX_REQUIRE(s != nullptr && out != nullptr, "null argument");
  SBX_REQUIRE(index < s->result.accepted.size(), "accepted index out of range");
  return guarded([&] {
    const auto& a = s->result.accepted[index];
    std::string name = "accepted";
    for (auto m : a.candidate.masks()) name += "-" + std::to_string(m);
    *out = new sbx_sbox{a.box, std::move(name), ""};
    return SBX_OK;
  });
}

sbx_status sbx_search_json(const sbx_search* s, const char* const* box_files,
                           size_t file_count, char** out) {
  SBX_REQUIRE(s != nullptr && out != nullptr, "null argument");
  SBX_REQUIRE(box_files != nullptr || file_count == 0, "null argument");
  return guarded([&] {
    std::vector<std::string> files;
    for (size_t i = 0; i < file_count; ++i) files.emplace_back(box_files[i] ? box_files[i] : "");
    *out = copy_string(sboxlab::search_json(s->initial, s->result, files));
    return SBX_OK;
  });
}

sbx_status sbx_verify(const char* scope, uint64_t seed, int cases, char** log) {
  SBX_REQUIRE(log != nullptr, "null argument");
  return guarded([&] {
    sboxlab::VerifyOptions o;
    o.scope = sboxlab::parse_verify_scope(or_default(scope, "all"));
    if (seed != 0) o.seed = seed;
    if (cases > 0) o.cases = cases;
    const auto result = sboxlab::run_verify(o);
    std::string text;
    for (const auto& line : result.log) text += line + "\n";
    text += "decisions:\n";
    for (const auto& [k, v] : result.decisions) text += "  " + k + " = " + v + "\n";
    text += std::to_string(result.checks - result.failures) + "/" +
            std::to_string(result.checks) + " checks passed\n";
    *log = copy_string(text);
    if (!result.ok()) return fail(SBX_ERR_VERIFY, std::to_string(result.failures) + " checks failed");
    return SBX_OK;
  });
}

}  // extern "C"
