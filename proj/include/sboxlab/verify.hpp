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

// Oracle equivalence sweeps and fixture calibrations behind `sboxlab verify`.

#ifndef SBOXLAB_VERIFY_HPP_
#define SBOXLAB_VERIFY_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sboxlab/metrics.hpp"

namespace sboxlab {

enum class VerifyScope { kAll, kOracles, kCalibration };

std::string_view to_string(VerifyScope scope);
VerifyScope parse_verify_scope(std::string_view tag);

struct VerifyOptions {
  VerifyScope scope = VerifyScope::kAll;
  std::uint64_t seed = 20260101;
  // Cases per transform sweep; metric sweeps use a tenth of this per size.
  int cases = 1000;
};

struct VerifyResult {
  std::vector<std::string> log;
  int checks = 0;
  int failures = 0;
  // Resolved calibration choices, e.g. "snr_variant" -> "sign".
  std::map<std::string, std::string> decisions;

  bool ok() const noexcept { return failures == 0; }
};

VerifyResult run_verify(const VerifyOptions& options = {});

// Calibration pieces, exposed for tests.
struct Calibration {
  std::string subject;
  std::vector<std::string> log;
  std::vector<std::string> matching;  // every option that reproduces the targets
  std::string chosen;                 // empty when unresolved
};

Calibration calibrate_snr_variant();
Calibration calibrate_confusion();
Calibration calibrate_fixture(std::string_view fixture_name, std::string_view subject);

}  // namespace sboxlab

#endif  // SBOXLAB_VERIFY_HPP_
