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

// Bundled reference boxes. Published tables are ingested as printed and
// repaired at load time; every repair is recorded in the fixture notes.

#ifndef SBOXLAB_FIXTURES_HPP_
#define SBOXLAB_FIXTURES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "sboxlab/boolfn.hpp"

namespace sboxlab {

struct Fixture {
  std::string name;
  std::string source;               // e.g. "Table 7"
  SBoxTable box;
  std::vector<std::string> notes;   // repairs and calibration choices
};

const std::vector<std::string>& fixture_names();

// Throws InvalidInput for an unknown name. The returned reference stays valid
// for the life of the process.
const Fixture& fixture(std::string_view name);

bool is_fixture(std::string_view name);

}  // namespace sboxlab

#endif  // SBOXLAB_FIXTURES_HPP_
