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

#include "sptc/pauli.hpp"

#include <bit>
#include <cctype>

#include "sptc/error.hpp"

namespace sptc {

BitVector BitVector::from_word(std::size_t size, std::uint64_t value) {
  if (size > 64) throw_invalid("BitVector::from_word supports at most 64 bits");
  BitVector out(size);
  if (size > 0) out.words_[0] = size == 64 ? value : (value & ((1ull << size) - 1));
  return out;
}

void BitVector::set(std::size_t i, bool value) {
  if (value) {
    words_[i / 64] |= 1ull << (i % 64);
  } else {
    words_[i / 64] &= ~(1ull << (i % 64));
  }
}

bool BitVector::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t BitVector::find_first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return size_;
}

bool BitVector::dot(const BitVector& other) const {
  if (size_ != other.size_) throw_invalid("BitVector size mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (size_ != other.size_) throw_invalid("BitVector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector BitVector::concat(const BitVector& low, const BitVector& high) {
  BitVector out(low.size_ + high.size_);
  for (std::size_t i = 0; i < low.size_; ++i)
    if (low.test(i)) out.set(i);
  for (std::size_t i = 0; i < high.size_; ++i)
    if (high.test(i)) out.set(low.size_ + i);
  return out;
}

std::string BitVector::to_bit_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) out[i] = '1';
  return out;
}

// ---------------------------------------------------------------------------

PauliVector::PauliVector(BitVector x, BitVector z) : x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != z_.size()) throw_invalid("Pauli x and z parts differ in length");
}

PauliVector PauliVector::from_index(std::size_t n, std::uint64_t index) {
  if (n > 31) throw_invalid("integer Pauli encoding supports at most 31 qubits");
  if (index >> (2 * n)) throw_invalid("Pauli index out of range");
  const std::uint64_t mask = (1ull << n) - 1;
  return {BitVector::from_word(n, index & mask), BitVector::from_word(n, (index >> n) & mask)};
}

std::uint64_t PauliVector::to_index() const {
  const std::size_t n = num_qubits();
  if (n > 31) throw_invalid("integer Pauli encoding supports at most 31 qubits");
  return x_.to_word() | (z_.to_word() << n);
}

std::size_t PauliVector::weight() const {
  std::size_t w = 0;
  for (std::size_t q = 0; q < num_qubits(); ++q) w += (x_.test(q) || z_.test(q)) ? 1 : 0;
  return w;
}

char PauliVector::letter(std::size_t q) const {
  static constexpr char kLetters[] = {'I', 'X', 'Z', 'Y'};
  return kLetters[(x_.test(q) ? 1 : 0) | (z_.test(q) ? 2 : 0)];
}

void PauliVector::set_letter(std::size_t q, char letter) {
  switch (std::toupper(static_cast<unsigned char>(letter))) {
    case 'I': x_.set(q, false); z_.set(q, false); break;
    case 'X': x_.set(q, true); z_.set(q, false); break;
    case 'Y': x_.set(q, true); z_.set(q, true); break;
    case 'Z': x_.set(q, false); z_.set(q, true); break;
    default: throw_parse(std::string("unknown Pauli letter '") + letter + "'");
  }
}

PauliVector& PauliVector::operator*=(const PauliVector& other) {
  x_ ^= other.x_;
  z_ ^= other.z_;
  return *this;
}

std::string PauliVector::to_word() const {
  std::string out(num_qubits(), 'I');
  for (std::size_t q = 0; q < num_qubits(); ++q) out[q] = letter(q);
  return out;
}

std::string PauliVector::to_hex() const { return part_to_hex(x_) + ":" + part_to_hex(z_); }

int canonical_form(const PauliVector& u, const PauliVector& v) {
  if (u.num_qubits() != v.num_qubits())
    throw_invalid("canonical_form: " + std::to_string(u.num_qubits()) + " vs " +
                  std::to_string(v.num_qubits()) + " qubits");
  return (u.x().dot(v.z()) ^ u.z().dot(v.x())) ? 1 : 0;
}

std::string part_to_hex(const BitVector& part) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t n = part.size();
  const std::size_t digits = (n + 3) / 4;
  std::string out(digits, '0');
  // Qubit q sits at bit (n - 1 - q) of the big-endian value.
  for (std::size_t q = 0; q < n; ++q) {
    if (!part.test(q)) continue;
    const std::size_t bit = n - 1 - q;
    const std::size_t digit = digits - 1 - bit / 4;
    const int value = static_cast<int>(std::string_view(kDigits).find(out[digit]));
    out[digit] = kDigits[value | (1 << (bit % 4))];
  }
  return out;
}

BitVector part_from_hex(std::string_view hex, std::size_t n) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw_parse("empty hex Pauli part");
  BitVector out(n);
  const std::size_t len = hex.size();
  for (std::size_t i = 0; i < len; ++i) {
    const char ch = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[i])));
    int value;
    if (ch >= '0' && ch <= '9') {
      value = ch - '0';
    } else if (ch >= 'a' && ch <= 'f') {
      value = ch - 'a' + 10;
    } else {
      throw_parse("invalid hex digit in '" + std::string(hex) + "'");
    }
    for (int b = 0; b < 4; ++b) {
      if (!((value >> b) & 1)) continue;
      const std::size_t bit = (len - 1 - i) * 4 + static_cast<std::size_t>(b);
      if (bit >= n) throw_parse("hex Pauli part '" + std::string(hex) + "' exceeds " + std::to_string(n) + " qubits");
      out.set(n - 1 - bit);
    }
  }
  return out;
}

PauliVector parse_pauli(std::string_view text, std::size_t n) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw_parse("empty Pauli error");

  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    return {part_from_hex(text.substr(0, colon), n), part_from_hex(text.substr(colon + 1), n)};
  }

  const bool is_word = text.size() == n && text.find_first_not_of("IXYZixyz") == std::string_view::npos;
  PauliVector out(n);
  if (is_word) {
    for (std::size_t q = 0; q < n; ++q) out.set_letter(q, text[q]);
    return out;
  }

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item.size() < 2) throw_parse("bad Pauli term '" + std::string(item) + "'");
    std::size_t qubit = 0;
    for (char ch : item.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw_parse("bad Pauli term '" + std::string(item) + "'");
      qubit = qubit * 10 + static_cast<std::size_t>(ch - '0');
      if (qubit > n) break;
    }
    if (qubit == 0 || qubit > n)
      throw_parse("qubit index out of range in '" + std::string(item) + "' (n=" + std::to_string(n) + ")");
    PauliVector term(n);
    term.set_letter(qubit - 1, item[0]);
    out *= term;
    pos = end + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

BitVector Gf2RowSpace::reduce(BitVector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.test(pivots_[i])) v ^= rows_[i];
  return v;
}

bool Gf2RowSpace::insert(BitVector v) {
  if (v.size() != len_) throw_invalid("Gf2RowSpace: vector length mismatch");
  v = reduce(std::move(v));
  const std::size_t pivot = v.find_first();
  if (pivot == v.size()) return false;
  // Keep rows fully reduced so reduce() is a single pass.
  for (auto& row : rows_)
    if (row.test(pivot)) row ^= v;
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool Gf2RowSpace::contains(BitVector v) const {
  if (v.size() != len_) throw_invalid("Gf2RowSpace: vector length mismatch");
  return !reduce(std::move(v)).any();
}

}  // namespace sptc
