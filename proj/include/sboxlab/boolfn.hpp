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

// Truth tables, S-box lookup tables and the transforms over them.
//
// Bit convention used throughout the library: coordinate i of an S-box is
// bit i of each output word (bit 0 least significant), and an input x is an
// n-bit integer read the same way. Inner products are parity(u & x).

#ifndef SBOXLAB_BOOLFN_HPP_
#define SBOXLAB_BOOLFN_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sboxlab {

using Mask = std::uint32_t;

inline constexpr int kMaxVariables = 16;

inline int parity(std::uint32_t x) noexcept { return std::popcount(x) & 1; }
inline int weight(std::uint32_t x) noexcept { return std::popcount(x); }

// A Boolean function of n variables stored as 2^n values in {0,1}.
class TruthTable {
 public:
  TruthTable(int n, std::vector<std::uint8_t> bits);

  static TruthTable zero(int n);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t operator[](std::size_t x) const noexcept { return bits_[x]; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::size_t hamming_weight() const noexcept;

  TruthTable operator^(const TruthTable& other) const;
  bool operator==(const TruthTable& other) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> bits_;
};

// An (n,m)-function as a lookup table of 2^n outputs, each below 2^m.
class SBoxTable {
 public:
  SBoxTable(int n, int m, std::vector<std::uint32_t> entries);

  static SBoxTable identity(int n);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::uint32_t operator[](std::size_t x) const noexcept { return entries_[x]; }
  const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

  // True iff n == m and the entries are a permutation of [0, 2^n).
  bool is_permutation() const;

  bool operator==(const SBoxTable& other) const = default;

 private:
  int n_;
  int m_;
  std::vector<std::uint32_t> entries_;
};

// Spectra and tables indexed by a mask (or shift) in [0, 2^n).
using WalshSpectrum = std::vector<std::int32_t>;
using AutocorrTable = std::vector<std::int32_t>;
using AnfTable = std::vector<std::uint8_t>;

// In-place sign-domain Walsh-Hadamard butterfly; length must be 2^k.
void fwht_inplace(std::span<std::int32_t> values);

// W_f(w) = sum_x (-1)^(f(x) ^ w.x), O(n 2^n).
WalshSpectrum walsh_transform(const TruthTable& f);

// Self-inverse GF(2) butterfly mapping truth table <-> ANF coefficients.
// Throws InvalidInput when the length is not a power of two.
std::vector<std::uint8_t> moebius_transform(std::span<const std::uint8_t> bits);

AnfTable anf(const TruthTable& f);

// Largest monomial weight with a nonzero ANF coefficient; -1 for f == 0.
int degree(const TruthTable& f);

// g(x) = v . S(x). Throws InvalidInput when v >= 2^m.
TruthTable component(const SBoxTable& s, Mask v);
TruthTable coordinate(const SBoxTable& s, int i);

// D_a S(x) = S(x) ^ S(x ^ a).
SBoxTable derivative(const SBoxTable& s, Mask a);

// r_f(a) = sum_x (-1)^(f(x) ^ f(x ^ a)); computed from the squared Walsh
// spectrum.
AutocorrTable autocorrelation(const TruthTable& f);

// Autocorrelation from a precomputed spectrum (consumed).
AutocorrTable autocorrelation_from_spectrum(WalshSpectrum spectrum);

class DifferenceTable {
 public:
  explicit DifferenceTable(const SBoxTable& s);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  std::uint32_t count(Mask a, Mask z) const noexcept {
    return counts_[(std::size_t{a} << m_) | z];
  }
  std::span<const std::uint32_t> row(Mask a) const noexcept {
    return std::span<const std::uint32_t>(counts_).subspan(std::size_t{a} << m_,
                                                           std::size_t{1} << m_);
  }
  // L: largest count over a != 0.
  std::uint32_t max_nontrivial() const noexcept;
  // R: nonzero entries in column z = 0, row a = 0 excluded.
  std::uint32_t zero_column_nonzero() const noexcept;

 private:
  int n_;
  int m_;
  std::vector<std::uint32_t> counts_;
};

inline DifferenceTable ddt(const SBoxTable& s) { return DifferenceTable(s); }

// Square matrix over GF(2); row i is an n-bit mask.
class BinaryMatrix {
 public:
  explicit BinaryMatrix(std::vector<Mask> rows);
  BinaryMatrix(int n, std::vector<Mask> rows);

  static BinaryMatrix identity(int n);

  int n() const noexcept { return n_; }
  std::span<const Mask> rows() const noexcept { return rows_; }
  Mask row(int i) const noexcept { return rows_[i]; }

  // y -> M y: bit i of the result is row_i . y.
  Mask apply(Mask y) const noexcept;

 private:
  int n_;
  std::vector<Mask> rows_;
};

int gf2_rank(std::span<const Mask> rows);
inline int gf2_rank(const BinaryMatrix& m) { return gf2_rank(m.rows()); }

// Output mix: coordinate i of the result is component(s, row_i).
SBoxTable apply_mix(const SBoxTable& s, const BinaryMatrix& m);

}  // namespace sboxlab

#endif  // SBOXLAB_BOOLFN_HPP_
