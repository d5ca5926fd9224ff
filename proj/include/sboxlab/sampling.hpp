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

// Seeded randomness shared by the search and the verification sweeps.

#ifndef SBOXLAB_SAMPLING_HPP_
#define SBOXLAB_SAMPLING_HPP_

#include <cstdint>

#include "sboxlab/boolfn.hpp"

namespace sboxlab {

// SplitMix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Independent stream for item `index` of a run seeded with `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    Rng mixer(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    return Rng(mixer.next());
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    if ((bound & (bound - 1)) == 0) return next() & (bound - 1);
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      const std::uint64_t v = next();
      if (v < limit) return v % bound;
    }
  }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

TruthTable random_function(int n, Rng& rng);
// Uniform permutation of [0, 2^n).
SBoxTable random_bijection(int n, Rng& rng);
// Uniform (n,m)-function.
SBoxTable random_function_table(int n, int m, Rng& rng);
// Uniform over GL(n, 2), by rejection.
BinaryMatrix random_invertible(int n, Rng& rng);
// Rows are a permutation of the unit vectors.
BinaryMatrix random_permutation_matrix(int n, Rng& rng);

}  // namespace sboxlab

#endif  // SBOXLAB_SAMPLING_HPP_
