// Copyright 2026 The sptc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPTC_PAULI_HPP_
#define SPTC_PAULI_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sptc {

// Fixed-length vector over GF(2).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  // Low `size` bits of value, bit i -> index i.
  static BitVector from_word(std::size_t size, std::uint64_t value);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / 64] ^= 1ull << (i % 64); }

  bool any() const;
  std::size_t count() const;
  // Index of the lowest set bit, or size() when zero.
  std::size_t find_first() const;
  // Parity of the bitwise AND.
  bool dot(const BitVector& other) const;
  // Bits [0, 64) as an integer; only meaningful for size() <= 64.
  std::uint64_t to_word() const { return words_.empty() ? 0 : words_[0]; }

  std::span<const std::uint64_t> words() const { return words_; }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector& a, const BitVector& b) = default;

  static BitVector concat(const BitVector& low, const BitVector& high);

  // "0101" with index 0 first.
  std::string to_bit_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// An n-qubit Pauli operator without phase, as (x | z). Qubit 1 is index 0.
// I = (0|0), X = (1|0), Y = (1|1), Z = (0|1).
class PauliVector {
 public:
  PauliVector() = default;
  explicit PauliVector(std::size_t n) : x_(n), z_(n) {}
  PauliVector(BitVector x, BitVector z);

  // Integer encoding: x bits in the low n bits, z bits in the next n.
  static PauliVector from_index(std::size_t n, std::uint64_t index);
  std::uint64_t to_index() const;

  std::size_t num_qubits() const { return x_.size(); }
  const BitVector& x() const { return x_; }
  const BitVector& z() const { return z_; }
  BitVector& x() { return x_; }
  BitVector& z() { return z_; }
  bool is_identity() const { return !x_.any() && !z_.any(); }
  std::size_t weight() const;

  // Letter of qubit q (0-based): 'I', 'X', 'Y' or 'Z'.
  char letter(std::size_t q) const;
  void set_letter(std::size_t q, char letter);

  // Concatenation (x | z) as a 2n-bit vector.
  BitVector symplectic() const { return BitVector::concat(x_, z_); }

  // Product of Paulis, phase dropped.
  PauliVector& operator*=(const PauliVector& other);
  friend PauliVector operator*(PauliVector a, const PauliVector& b) { return a *= b; }
  friend bool operator==(const PauliVector& a, const PauliVector& b) = default;

  // "XIYZ".
  std::string to_word() const;
  // "x_hex:z_hex".
  std::string to_hex() const;

 private:
  BitVector x_;
  BitVector z_;
};

// (u.x . v.z) xor (u.z . v.x); zero iff the two Paulis commute.
int canonical_form(const PauliVector& u, const PauliVector& v);

// Big-endian hex of an n-bit part, qubit 1 as the most significant bit,
// padded to ceil(n/4) digits.
std::string part_to_hex(const BitVector& part);
BitVector part_from_hex(std::string_view hex, std::size_t n);

// Accepts "XHEX:ZHEX", a Pauli word over {I,X,Y,Z} of length n, or a sparse
// list such as "Z1,X3" (1-based qubits; repeated qubits multiply).
PauliVector parse_pauli(std::string_view text, std::size_t n);

// Incrementally built row-reduced basis of a subspace of GF(2)^len.
class Gf2RowSpace {
 public:
  explicit Gf2RowSpace(std::size_t len = 0) : len_(len) {}

  // Returns false when v already lies in the span.
  bool insert(BitVector v);
  bool contains(BitVector v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t length() const { return len_; }
  const std::vector<BitVector>& rows() const { return rows_; }

 private:
  BitVector reduce(BitVector v) const;

  std::size_t len_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace sptc

#endif  // SPTC_PAULI_HPP_
