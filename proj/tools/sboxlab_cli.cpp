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

// sboxlab command-line tool. Talks to the library only through the C API.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sboxlab/sboxlab.h"

namespace fs = std::filesystem;

namespace {

struct SboxDeleter {
  void operator()(sbx_sbox* s) const { sbx_sbox_free(s); }
};
struct ReportDeleter {
  void operator()(sbx_report* r) const { sbx_report_free(r); }
};
struct SearchDeleter {
  void operator()(sbx_search* s) const { sbx_search_free(s); }
};
using SboxPtr = std::unique_ptr<sbx_sbox, SboxDeleter>;
using ReportPtr = std::unique_ptr<sbx_report, ReportDeleter>;
using SearchPtr = std::unique_ptr<sbx_search, SearchDeleter>;

// Carries a C API status out of nested helpers.
struct Failure {
  sbx_status status;
  std::string message;
};

void check(sbx_status status) {
  if (status != SBX_OK) throw Failure{status, sbx_last_error()};
}

std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  sbx_string_free(s);
  return out;
}

bool is_fixture(const std::string& name) {
  for (size_t i = 0; i < sbx_fixture_count(); ++i) {
    if (name == sbx_fixture_name(i)) return true;
  }
  return false;
}

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

// A path to an existing file, or else the name of a bundled fixture.
SboxPtr load_box(const std::string& source, const std::string& format, bool quiet = false) {
  sbx_sbox* raw = nullptr;
  if (!fs::exists(source) && is_fixture(source)) {
    check(sbx_sbox_fixture(source.c_str(), &raw));
    SboxPtr box(raw);
    if (!quiet) {
      std::string notes = sbx_sbox_notes(box.get());
      std::cerr << "fixture " << source << "\n";
      size_t pos = 0;
      while (pos < notes.size()) {
        const size_t end = notes.find('\n', pos);
        std::cerr << "  " << notes.substr(pos, end - pos) << "\n";
        pos = end == std::string::npos ? notes.size() : end + 1;
      }
    }
    return box;
  }
  check(sbx_sbox_load(source.c_str(), opt(format), 0, &raw));
  return SboxPtr(raw);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{SBX_ERR_USAGE, "cannot write '" + path + "'"};
  out << text;
}

struct EvalArgs {
  std::string input;
  std::string format;
  std::string out;
  std::string metrics;
  std::string cc_model;
  std::string cc_statistic;
  bool table = false;
};

int cmd_eval(const EvalArgs& a) {
  SboxPtr box = load_box(a.input, a.format);
  if (!sbx_sbox_is_bijective(box.get())) {
    std::cerr << "warning: " << a.input << " is not a bijection (repeated entries)\n";
  }
  sbx_report_options o{opt(a.cc_model), opt(a.cc_statistic), nullptr};
  sbx_report* raw = nullptr;
  check(sbx_evaluate(box.get(), &o, &raw));
  ReportPtr report(raw);
  char* json = nullptr;
  check(sbx_report_json(report.get(), opt(a.metrics), &json));
  const std::string doc = take(json);
  if (a.table) {
    const sbx_report* cols[] = {report.get()};
    const char* titles[] = {sbx_sbox_name(box.get())};
    char* text = nullptr;
    check(sbx_report_table(cols, titles, 1, nullptr, 0, opt(a.metrics), &text));
    std::cout << take(text);
    if (!a.out.empty()) write_output(a.out, doc);
  } else {
    write_output(a.out, doc);
  }
  return 0;
}

struct GenArgs {
  std::string input;
  std::string format;
  std::string out = "sboxlab-out";
  std::string box_format = "decimal";
  sbx_search_options options;
  std::string mode = "exhaustive";
  std::string ordering = "descending";
  std::string to_direction = "le";
  std::string cc_model;
};

std::string tally_table(const sbx_tally& t) {
  const std::pair<const char*, uint64_t> rows[] = {
      {"#T_total", t.total},     {"#T_bij", t.bijective}, {"#T_FP", t.fp_zero},
      {"#T_OFF", t.ofp_zero},    {"#T_SNR", t.snr_better}, {"#T_TO", t.to_better},
      {"#T_K", t.cc_better},     {"#T_better", t.all_better}};
  std::string out;
  for (const auto& [label, value] : rows) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%-10s %llu\n", label, static_cast<unsigned long long>(value));
    out += buf;
  }
  return out;
}

int cmd_gen(GenArgs a) {
  SboxPtr initial = load_box(a.input, a.format);
  a.options.mode = a.mode.c_str();
  a.options.ordering = a.ordering.c_str();
  a.options.to_direction = a.to_direction.c_str();
  a.options.cc_model = opt(a.cc_model);
  sbx_search* raw = nullptr;
  check(sbx_search_run(initial.get(), &a.options, &raw));
  SearchPtr search(raw);

  fs::create_directories(a.out);
  const std::string ext = a.box_format == "json" ? ".json" : a.box_format == "hex" ? ".hex" : ".txt";
  const size_t count = sbx_search_accepted_count(search.get());
  std::vector<std::string> files;
  for (size_t i = 0; i < count; ++i) {
    sbx_sbox* box_raw = nullptr;
    check(sbx_search_accepted(search.get(), i, &box_raw));
    SboxPtr box(box_raw);
    char* text = nullptr;
    check(sbx_sbox_format(box.get(), a.box_format.c_str(), &text));
    char name[32];
    std::snprintf(name, sizeof(name), "box-%05zu", i + 1);
    files.push_back(std::string(name) + ext);
    write_output((fs::path(a.out) / files.back()).string(), take(text));
  }
  std::vector<const char*> file_ptrs;
  for (const auto& f : files) file_ptrs.push_back(f.c_str());
  char* json = nullptr;
  check(sbx_search_json(search.get(), file_ptrs.data(), file_ptrs.size(), &json));
  write_output((fs::path(a.out) / "result.json").string(), take(json));

  sbx_tally t;
  check(sbx_search_tally(search.get(), &t));
  std::cout << tally_table(t);
  std::cout << "wrote " << count << " accepted boxes and result.json to " << a.out << "\n";
  return 0;
}

struct CompareArgs {
  std::vector<std::string> inputs;
  std::string dir;
  std::string format;
  std::string metrics;
  std::string out;
  std::string cc_model;
};

bool is_box_file(const fs::path& p) {
  const auto ext = p.extension().string();
  return fs::is_regular_file(p) && p.filename() != "result.json" &&
         (ext == ".txt" || ext == ".hex" || ext == ".json" || ext == ".dec");
}

int cmd_compare(const CompareArgs& a) {
  if (a.inputs.size() < 2 && a.dir.empty()) {
    throw Failure{SBX_ERR_USAGE, "compare needs at least two boxes, or --dir"};
  }
  sbx_report_options o{opt(a.cc_model), nullptr, nullptr};
  std::vector<SboxPtr> boxes;
  std::vector<ReportPtr> reports;
  std::vector<ReportPtr> spread;
  int n = 0;
  auto add = [&](SboxPtr box, std::vector<ReportPtr>& into, const std::string& label) {
    if (n == 0) n = sbx_sbox_n(box.get());
    if (sbx_sbox_n(box.get()) != n) {
      throw Failure{SBX_ERR_PRECONDITION, "dimension mismatch: " + label + " is " +
                                              std::to_string(sbx_sbox_n(box.get())) +
                                              "-bit, expected " + std::to_string(n)};
    }
    sbx_report* raw = nullptr;
    check(sbx_evaluate(box.get(), &o, &raw));
    into.emplace_back(raw);
    boxes.push_back(std::move(box));
  };
  for (const auto& in : a.inputs) add(load_box(in, a.format), reports, in);
  if (!a.dir.empty()) {
    std::vector<fs::path> paths;
    for (const auto& e : fs::directory_iterator(a.dir)) {
      if (is_box_file(e.path())) paths.push_back(e.path());
    }
    std::sort(paths.begin(), paths.end());
    if (paths.empty()) throw Failure{SBX_ERR_USAGE, "no box files in '" + a.dir + "'"};
    for (const auto& p : paths) add(load_box(p.string(), "", true), spread, p.string());
    std::cerr << "spread over " << paths.size() << " boxes in " << a.dir << "\n";
  }
  std::vector<const sbx_report*> cols;
  std::vector<std::string> title_store;
  for (size_t i = 0; i < reports.size(); ++i) {
    cols.push_back(reports[i].get());
    title_store.push_back(fs::path(a.inputs[i]).filename().string());
  }
  std::vector<const char*> titles;
  for (const auto& t : title_store) titles.push_back(t.c_str());
  std::vector<const sbx_report*> pool;
  for (const auto& r : spread) pool.push_back(r.get());
  char* text = nullptr;
  check(sbx_report_table(cols.data(), titles.data(), cols.size(), pool.data(), pool.size(),
                         opt(a.metrics), &text));
  write_output(a.out, take(text));
  return 0;
}

int cmd_verify(const std::string& scope, uint64_t seed, int cases) {
  char* log = nullptr;
  const sbx_status status = sbx_verify(scope.c_str(), seed, cases, &log);
  std::cout << take(log);
  if (status != SBX_OK && status != SBX_ERR_VERIFY) check(status);
  return status;
}

int cmd_fixtures(bool verbose) {
  for (size_t i = 0; i < sbx_fixture_count(); ++i) {
    const char* name = sbx_fixture_name(i);
    sbx_sbox* raw = nullptr;
    check(sbx_sbox_fixture(name, &raw));
    SboxPtr box(raw);
    std::string notes = sbx_sbox_notes(box.get());
    const std::string first = notes.substr(0, notes.find('\n'));
    std::printf("%-20s %dx%d  %s\n", name, sbx_sbox_n(box.get()), sbx_sbox_m(box.get()),
                first.c_str());
    if (verbose) {
      size_t pos = first.size() + 1;
      while (pos < notes.size()) {
        const size_t end = notes.find('\n', pos);
        std::printf("    %s\n", notes.substr(pos, end - pos).c_str());
        pos = end == std::string::npos ? notes.size() : end + 1;
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-box analysis and side-channel-aware generation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sbx_version());

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Report every metric of one box");
  eval_cmd->add_option("input", eval.input, "Box file or fixture name")->required();
  eval_cmd->add_option("--format", eval.format, "decimal, hex or json (default: by extension)");
  eval_cmd->add_option("--out", eval.out, "Write the JSON report here");
  eval_cmd->add_option("--metrics", eval.metrics, "Comma-separated metric tags");
  eval_cmd->add_option("--cc-model", eval.cc_model, "hw-squared, hw-squared-norm or single-bit");
  eval_cmd->add_option("--cc-statistic", eval.cc_statistic, "variance, min, mean or max");
  eval_cmd->add_flag("--table", eval.table, "Print a text table instead of JSON");

  GenArgs gen;
  sbx_search_options_init(&gen.options);
  auto* gen_cmd = app.add_subcommand("gen", "Search output mixes of an initial box");
  gen_cmd->add_option("input", gen.input, "Initial box file or fixture name")->required();
  gen_cmd->add_option("--format", gen.format, "Input format");
  gen_cmd->add_option("--out", gen.out, "Output directory")->capture_default_str();
  gen_cmd->add_option("--box-format", gen.box_format, "Format of written boxes")
      ->check(CLI::IsMember({"decimal", "hex", "json"}))
      ->capture_default_str();
  gen_cmd->add_option("--mode", gen.mode, "exhaustive, random-sample or genetic")
      ->check(CLI::IsMember({"exhaustive", "random-sample", "genetic"}))
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.options.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--budget", gen.options.max_candidates,
                      "Random draws, or the genetic evaluation cap (0 = none)");
  gen_cmd->add_option("--population", gen.options.population, "Genetic population size")
      ->capture_default_str();
  gen_cmd->add_option("--generations", gen.options.generations, "Genetic generations")
      ->capture_default_str();
  gen_cmd->add_option("--workers", gen.options.workers, "Worker threads")->capture_default_str();
  gen_cmd->add_option("--ordering", gen.ordering, "descending, ascending or best-of-orderings")
      ->check(CLI::IsMember({"descending", "ascending", "best-of-orderings"}))
      ->capture_default_str();
  gen_cmd->add_option("--to-direction", gen.to_direction, "le or ge")
      ->check(CLI::IsMember({"le", "ge"}))
      ->capture_default_str();
  gen_cmd->add_option("--cc-model", gen.cc_model, "Confusion-coefficient model");
  gen_cmd->add_flag("--require-snr", gen.options.require_snr, "Also require a lower SNR");
  gen_cmd->add_flag("--require-cc", gen.options.require_cc, "Also require a lower kappa");

  CompareArgs cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "Side-by-side metric table");
  cmp_cmd->add_option("inputs", cmp.inputs, "Box files or fixture names");
  cmp_cmd->add_option("--dir", cmp.dir, "Directory of boxes for min/avg/max columns");
  cmp_cmd->add_option("--format", cmp.format, "Input format");
  cmp_cmd->add_option("--metrics", cmp.metrics, "Comma-separated metric tags");
  cmp_cmd->add_option("--cc-model", cmp.cc_model, "Confusion-coefficient model");
  cmp_cmd->add_option("--out", cmp.out, "Write the table here");

  std::string scope = "all";
  uint64_t verify_seed = 0;
  int cases = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Oracle sweeps and fixture calibrations");
  verify_cmd->add_option("--scope", scope, "all, oracles or calibration")
      ->check(CLI::IsMember({"all", "oracles", "calibration"}))
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "Sweep seed (0 = default)");
  verify_cmd->add_option("--cases", cases, "Cases per transform sweep (0 = default)");

  bool verbose = false;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "List bundled boxes");
  fixtures_cmd->add_flag("-v,--verbose", verbose, "Show repair notes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : SBX_ERR_USAGE;
  }

  try {
    if (*eval_cmd) return cmd_eval(eval);
    if (*gen_cmd) return cmd_gen(gen);
    if (*cmp_cmd) return cmd_compare(cmp);
    if (*verify_cmd) return cmd_verify(scope, verify_seed, cases);
    if (*fixtures_cmd) return cmd_fixtures(verbose);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return SBX_ERR_INTERNAL;
  }
  return SBX_ERR_USAGE;
}
