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

#ifndef SPTC_CODES_HPP_
#define SPTC_CODES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sptc/field.hpp"

namespace sptc {

enum class CodeFamily { kErs, kOvoid, kAppendixC, kCustom };

// Document tags: "ERS", "OVOID", "APPENDIX_C", "CUSTOM".
const char* to_string(CodeFamily family);
CodeFamily parse_code_family(const std::string& tag);

// A [c, k, d]_q linear code over GF(2^s), k even, given by a k x c generator
// matrix. Construction validates full rank, even dimension and nonzero
// columns; the columns are the projective points the stabilizer codes are
// blown up from.
class LinearCode {
 public:
  using Element = GaloisField::Element;

  LinearCode(FieldPtr field, std::size_t dimension, std::size_t length,
             std::vector<Element> generator, std::optional<std::uint64_t> distance,
             CodeFamily family);

  const GaloisField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t length() const { return length_; }        // c
  std::size_t dimension() const { return dimension_; }  // k = 2r
  std::size_t half_dimension() const { return dimension_ / 2; }
  std::optional<std::uint64_t> distance() const { return distance_; }
  CodeFamily family() const { return family_; }

  Element at(std::size_t row, std::size_t col) const { return generator_[row * length_ + col]; }
  std::span<const Element> row(std::size_t i) const {
    return {generator_.data() + i * length_, length_};
  }
  std::vector<Element> column(std::size_t j) const;
  const std::vector<Element>& generator() const { return generator_; }

  LinearCode with_distance(std::uint64_t d) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b);

 private:
  FieldPtr field_;
  std::size_t dimension_;
  std::size_t length_;
  std::vector<Element> generator_;
  std::optional<std::uint64_t> distance_;
  CodeFamily family_;
};

// Largest extension degree whose codes are materialised column by column.
inline constexpr unsigned kMaxErsDegree = 16;
inline constexpr unsigned kMaxOvoidDegree = 10;

// Extended Reed-Solomon [q+1, 2r, q+2-2r]_q: columns (1, t, ..., t^(2r-1))
// for t = 0, 1, g, ..., g^(q-2), then (0, ..., 0, 1).
LinearCode ers_code(const FieldPtr& field, unsigned r);

// [q^2+1, 4, q^2-q]_q from the elliptic quadric x0 x1 = t^2 + t u + a u^2 of
// PG(3, q): column (0,1,0,0), then (1, f(t,u), t, u) with t outer and u inner
// in generator order. a is the first element in that order with trace 1.
LinearCode ovoid_code(const FieldPtr& field);

// The systematic [5,4,2]_4 code [I_4 | 1] (tag APPENDIX_C).
LinearCode single_parity_check_code();

// Quadric parameter used by ovoid_code.
GaloisField::Element ovoid_parameter(const GaloisField& field);

std::vector<GaloisField::Element> encode(std::span<const GaloisField::Element> message,
                                         const LinearCode& code);

// Rank over GF(2^s) of a rows x cols row-major matrix.
std::size_t field_rank(const GaloisField& field, std::vector<GaloisField::Element> matrix,
                       std::size_t rows, std::size_t cols);

inline constexpr std::uint64_t kDefaultDistanceBudget = 1ull << 24;

// Exact minimum weight over all q^k - 1 nonzero codewords. Throws a budget
// error when q^k exceeds budget.
std::uint64_t min_distance(const LinearCode& code, std::uint64_t budget = kDefaultDistanceBudget);

std::size_t hamming_weight(std::span<const GaloisField::Element> word);

}  // namespace sptc

#endif  // SPTC_CODES_HPP_
