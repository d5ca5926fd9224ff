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

#include "sboxlab/sampling.hpp"

#include <numeric>
#include <utility>
#include <vector>

namespace sboxlab {
namespace {

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.below(i)]);
  }
}

}  // namespace

TruthTable random_function(int n, Rng& rng) {
  std::vector<std::uint8_t> bits(std::size_t{1} << n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next() & 1U);
  return TruthTable(n, std::move(bits));
}

SBoxTable random_bijection(int n, Rng& rng) {
  std::vector<std::uint32_t> entries(std::size_t{1} << n);
  std::iota(entries.begin(), entries.end(), 0U);
  shuffle(entries, rng);
  return SBoxTable(n, n, std::move(entries));
}

SBoxTable random_function_table(int n, int m, Rng& rng) {
  std::vector<std::uint32_t> entries(std::size_t{1} << n);
  for (auto& e : entries) e = static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << m));
  return SBoxTable(n, m, std::move(entries));
}

BinaryMatrix random_invertible(int n, Rng& rng) {
  for (;;) {
    std::vector<Mask> rows(static_cast<std::size_t>(n));
    for (auto& r : rows) r = static_cast<Mask>(rng.below(std::uint64_t{1} << n));
    if (gf2_rank(rows) == n) return BinaryMatrix(n, std::move(rows));
  }
}

BinaryMatrix random_permutation_matrix(int n, Rng& rng) {
  std::vector<Mask> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rows[i] = Mask{1} << i;
  shuffle(rows, rng);
  return BinaryMatrix(n, std::move(rows));
}

}  // namespace sboxlab
