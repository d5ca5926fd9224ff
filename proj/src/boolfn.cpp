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

#include "sboxlab/boolfn.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "sboxlab/error.hpp"

namespace sboxlab {
namespace {

void check_width(int n, const char* what) {
  if (n < 0 || n > kMaxVariables) {
    throw InvalidInput(std::string(what) + " width " + std::to_string(n) +
                       " outside [0, " + std::to_string(kMaxVariables) + "]");
  }
}

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

TruthTable::TruthTable(int n, std::vector<std::uint8_t> bits)
    : n_(n), bits_(std::move(bits)) {
  check_width(n, "truth table");
  if (bits_.size() != (std::size_t{1} << n)) {
    throw InvalidInput("truth table of " + std::to_string(n) +
                       " variables needs " +
                       std::to_string(std::size_t{1} << n) + " values, got " +
                       std::to_string(bits_.size()));
  }
  for (auto b : bits_) {
    if (b > 1) throw InvalidInput("truth table values must be 0 or 1");
  }
}

TruthTable TruthTable::zero(int n) {
  check_width(n, "truth table");
  return TruthTable(n, std::vector<std::uint8_t>(std::size_t{1} << n, 0));
}

std::size_t TruthTable::hamming_weight() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

TruthTable TruthTable::operator^(const TruthTable& other) const {
  if (other.n_ != n_) throw InvalidInput("truth table sizes differ");
  std::vector<std::uint8_t> out(bits_.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = bits_[x] ^ other.bits_[x];
  return TruthTable(n_, std::move(out));
}

SBoxTable::SBoxTable(int n, int m, std::vector<std::uint32_t> entries)
    : n_(n), m_(m), entries_(std::move(entries)) {
  check_width(n, "input");
  check_width(m, "output");
  if (entries_.size() != (std::size_t{1} << n)) {
    throw InvalidInput("S-box with " + std::to_string(n) + " input bits needs " +
                       std::to_string(std::size_t{1} << n) + " entries, got " +
                       std::to_string(entries_.size()));
  }
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::size_t x = 0; x < entries_.size(); ++x) {
    if (entries_[x] >= limit) {
      throw InvalidInput("entry " + std::to_string(x) + " = " +
                         std::to_string(entries_[x]) + " does not fit in " +
                         std::to_string(m) + " bits");
    }
  }
}

SBoxTable SBoxTable::identity(int n) {
  check_width(n, "input");
  std::vector<std::uint32_t> e(std::size_t{1} << n);
  for (std::size_t x = 0; x < e.size(); ++x) e[x] = static_cast<std::uint32_t>(x);
  return SBoxTable(n, n, std::move(e));
}

bool SBoxTable::is_permutation() const {
  if (n_ != m_) return false;
  std::vector<std::uint8_t> seen(entries_.size(), 0);
  for (auto y : entries_) {
    if (seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

void fwht_inplace(std::span<std::int32_t> values) {
  const std::size_t len = values.size();
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t a = values[j];
        const std::int32_t b = values[j + h];
        values[j] = a + b;
        values[j + h] = a - b;
      }
    }
  }
}

WalshSpectrum walsh_transform(const TruthTable& f) {
  WalshSpectrum w(f.size());
  for (std::size_t x = 0; x < w.size(); ++x) w[x] = 1 - 2 * f[x];
  fwht_inplace(w);
  return w;
}

std::vector<std::uint8_t> moebius_transform(std::span<const std::uint8_t> bits) {
  if (!is_power_of_two(bits.size())) {
    throw InvalidInput("Moebius transform needs a power-of-two length, got " +
                       std::to_string(bits.size()));
  }
  std::vector<std::uint8_t> out(bits.begin(), bits.end());
  const std::size_t len = out.size();
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) out[j + h] ^= out[j];
    }
  }
  return out;
}

AnfTable anf(const TruthTable& f) { return moebius_transform(f.bits()); }

int degree(const TruthTable& f) {
  const AnfTable a = anf(f);
  int best = -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i]) best = std::max(best, weight(static_cast<std::uint32_t>(i)));
  }
  return best;
}

TruthTable component(const SBoxTable& s, Mask v) {
  if (std::uint64_t{v} >= (std::uint64_t{1} << s.m())) {
    throw InvalidInput("component mask " + std::to_string(v) +
                       " out of range for " + std::to_string(s.m()) +
                       " output bits");
  }
  std::vector<std::uint8_t> bits(s.size());
  for (std::size_t x = 0; x < bits.size(); ++x) {
    bits[x] = static_cast<std::uint8_t>(parity(v & s[x]));
  }
  return TruthTable(s.n(), std::move(bits));
}

TruthTable coordinate(const SBoxTable& s, int i) {
  if (i < 0 || i >= s.m()) {
    throw InvalidInput("coordinate index " + std::to_string(i) + " out of range");
  }
  return component(s, Mask{1} << i);
}

SBoxTable derivative(const SBoxTable& s, Mask a) {
  if (std::uint64_t{a} >= s.size()) {
    throw InvalidInput("derivative direction out of range");
  }
  std::vector<std::uint32_t> out(s.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = s[x] ^ s[x ^ a];
  return SBoxTable(s.n(), s.m(), std::move(out));
}

AutocorrTable autocorrelation_from_spectrum(WalshSpectrum spectrum) {
  // Wiener-Khinchin: r = H(W^2) / 2^n. W^2 <= 2^32 at n = 16 overflows
  // int32, so the squared spectrum is folded in 64-bit.
  const std::size_t len = spectrum.size();
  std::vector<std::int64_t> sq(len);
  for (std::size_t i = 0; i < len; ++i) {
    sq[i] = std::int64_t{spectrum[i]} * spectrum[i];
  }
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = sq[j];
        const std::int64_t b = sq[j + h];
        sq[j] = a + b;
        sq[j + h] = a - b;
      }
    }
  }
  AutocorrTable r(len);
  const auto shift = std::countr_zero(len);
  for (std::size_t i = 0; i < len; ++i) {
    r[i] = static_cast<std::int32_t>(sq[i] >> shift);
  }
  return r;
}

AutocorrTable autocorrelation(const TruthTable& f) {
  return autocorrelation_from_spectrum(walsh_transform(f));
}

DifferenceTable::DifferenceTable(const SBoxTable& s)
    : n_(s.n()),
      m_(s.m()),
      counts_(std::size_t{1} << (s.n() + s.m()), 0) {
  const std::size_t size = s.size();
  for (std::size_t a = 0; a < size; ++a) {
    std::uint32_t* row = counts_.data() + (a << m_);
    for (std::size_t x = 0; x < size; ++x) ++row[s[x] ^ s[x ^ a]];
  }
}

std::uint32_t DifferenceTable::max_nontrivial() const noexcept {
  std::uint32_t best = 0;
  const std::size_t start = std::size_t{1} << m_;
  for (std::size_t i = start; i < counts_.size(); ++i) {
    best = std::max(best, counts_[i]);
  }
  return best;
}

std::uint32_t DifferenceTable::zero_column_nonzero() const noexcept {
  std::uint32_t r = 0;
  const std::size_t rows = std::size_t{1} << n_;
  for (std::size_t a = 1; a < rows; ++a) {
    if (counts_[a << m_] != 0) ++r;
  }
  return r;
}

BinaryMatrix::BinaryMatrix(std::vector<Mask> rows)
    : BinaryMatrix(static_cast<int>(rows.size()), std::move(rows)) {}

BinaryMatrix::BinaryMatrix(int n, std::vector<Mask> rows)
    : n_(n), rows_(std::move(rows)) {
  check_width(n, "matrix");
  if (rows_.size() != static_cast<std::size_t>(n)) {
    throw InvalidInput("matrix needs " + std::to_string(n) + " rows, got " +
                       std::to_string(rows_.size()));
  }
  for (auto r : rows_) {
    if (std::uint64_t{r} >= (std::uint64_t{1} << n)) {
      throw InvalidInput("matrix row " + std::to_string(r) + " wider than " +
                         std::to_string(n) + " bits");
    }
  }
}

BinaryMatrix BinaryMatrix::identity(int n) {
  std::vector<Mask> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rows[i] = Mask{1} << i;
  return BinaryMatrix(n, std::move(rows));
}

Mask BinaryMatrix::apply(Mask y) const noexcept {
  Mask out = 0;
  for (int i = 0; i < n_; ++i) out |= static_cast<Mask>(parity(rows_[i] & y)) << i;
  return out;
}

int gf2_rank(std::span<const Mask> rows) {
  std::vector<Mask> work(rows.begin(), rows.end());
  int rank = 0;
  for (std::size_t i = 0; i < work.size(); ++i) {
    Mask pivot = work[i];
    if (pivot == 0) continue;
    ++rank;
    const Mask low = pivot & (~pivot + 1);
    for (std::size_t j = i + 1; j < work.size(); ++j) {
      if (work[j] & low) work[j] ^= pivot;
    }
  }
  return rank;
}

SBoxTable apply_mix(const SBoxTable& s, const BinaryMatrix& m) {
  if (m.n() != s.m() || s.n() != s.m()) {
    throw InvalidInput("mix matrix of size " + std::to_string(m.n()) +
                       " does not match S-box " + std::to_string(s.n()) + "x" +
                       std::to_string(s.m()));
  }
  std::vector<std::uint32_t> out(s.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = m.apply(s[x]);
  return SBoxTable(s.n(), s.m(), std::move(out));
}

}  // namespace sboxlab
