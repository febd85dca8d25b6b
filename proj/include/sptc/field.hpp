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

#ifndef SPTC_FIELD_HPP_
#define SPTC_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sptc {

// Square matrix over GF(2) of size at most 64. Row i is stored in rows[i],
// column j at bit j.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(unsigned size) : size_(size), rows_(size, 0) {}
  BitMatrix(unsigned size, std::vector<std::uint64_t> rows);

  static BitMatrix identity(unsigned size);

  unsigned size() const { return size_; }
  bool at(unsigned row, unsigned col) const { return (rows_[row] >> col) & 1u; }
  void set(unsigned row, unsigned col, bool value);
  std::uint64_t row(unsigned i) const { return rows_[i]; }

  // Row vector times matrix.
  std::uint64_t apply(std::uint64_t row_vector) const;

  bool is_symmetric() const;
  bool is_invertible() const;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

  std::string to_string() const;

 private:
  unsigned size_ = 0;
  std::vector<std::uint64_t> rows_;
};

BitMatrix pow(const BitMatrix& m, std::uint64_t exponent);

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

// GF(2^s) for 1 <= s <= 64 in polynomial basis. An element is the integer
// whose bit i is the coefficient of x^i. The defining polynomial is stored
// without its leading x^s term.
class GaloisField {
 public:
  using Element = std::uint64_t;

  static constexpr unsigned kMaxDegree = 64;

  // Field defined by the lexicographically smallest primitive polynomial of
  // degree s.
  static FieldPtr make(unsigned s);

  // Field defined by x^s + poly_low; throws unless the polynomial is
  // primitive.
  static FieldPtr with_polynomial(unsigned s, std::uint64_t poly_low);

  unsigned degree() const { return degree_; }
  std::uint64_t poly_low() const { return poly_low_; }
  // Element mask (all s low bits set).
  std::uint64_t mask() const { return mask_; }
  // 2^s - 1, the multiplicative group order.
  std::uint64_t group_order() const { return mask_; }
  bool contains(Element a) const { return (a & ~mask_) == 0; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  // Class of x; for s = 1 this is 1.
  Element generator() const { return generator_; }

  Element add(Element a, Element b) const { return a ^ b; }
  Element mul(Element a, Element b) const;
  Element square(Element a) const { return mul(a, a); }
  Element pow(Element a, std::uint64_t k) const;
  Element inv(Element a) const;
  int trace(Element a) const;

  // 0, 1, g, g^2, ..., g^(q-2). Only for s <= 24.
  std::vector<Element> elements() const;

  BitMatrix companion() const;
  // Matrix M with (coefficients of a) * M = coefficients of a*b for all a.
  BitMatrix companion_of(Element b) const;

  // Basis b_1..b_s with trace(b_i b_j) = delta_ij.
  const std::vector<Element>& self_dual_basis() const { return self_dual_; }

  std::string polynomial_string() const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.degree_ == b.degree_ && a.poly_low_ == b.poly_low_;
  }

 private:
  GaloisField(unsigned s, std::uint64_t poly_low);

  std::vector<Element> compute_self_dual_basis() const;

  unsigned degree_;
  std::uint64_t poly_low_;
  std::uint64_t mask_;
  Element generator_;
  std::vector<Element> self_dual_;
};

bool same_field(const GaloisField& a, const GaloisField& b);

// Value type pairing an element with its field. Arithmetic between elements
// of different fields throws.
class FieldElement {
 public:
  FieldElement(FieldPtr field, std::uint64_t bits);

  const FieldPtr& field() const { return field_; }
  std::uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t k) const;
  int trace() const;
  BitMatrix companion() const { return field_->companion_of(bits_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  std::uint64_t bits_;
};

// Lexicographically smallest primitive polynomial of degree s, returned
// without the leading term. Table lookup for s <= 32, search above.
std::uint64_t smallest_primitive_polynomial(unsigned s);

// Search-only variant of the above (no table).
std::uint64_t search_primitive_polynomial(unsigned s);

// True iff x^s + poly_low is primitive over GF(2): x has multiplicative
// order exactly 2^s - 1 modulo the polynomial.
bool is_primitive(unsigned s, std::uint64_t poly_low);

// Distinct prime factors of n (n >= 1), ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Identification of GF(2^s) with GF(2)^s used when blowing field vectors up
// into binary symplectic vectors. The polynomial basis is used when every
// multiplication matrix is symmetric under it (s <= 2); otherwise the
// trace-self-dual basis, under which multiplication is always self-adjoint.
class CoordinateBasis {
 public:
  enum class Kind { kPolynomial, kSelfDual };

  static CoordinateBasis polynomial(FieldPtr field);
  static CoordinateBasis self_dual(FieldPtr field);
  static CoordinateBasis for_symplectic(FieldPtr field);

  Kind kind() const { return kind_; }
  const std::vector<GaloisField::Element>& elements() const { return basis_; }
  const GaloisField& field() const { return *field_; }

  std::uint64_t to_coords(GaloisField::Element a) const;
  GaloisField::Element from_coords(std::uint64_t coords) const;
  // Row i holds the coordinates of b_i * a.
  BitMatrix matrix_of(GaloisField::Element a) const;

 private:
  CoordinateBasis(Kind kind, FieldPtr field, std::vector<GaloisField::Element> basis)
      : kind_(kind), field_(std::move(field)), basis_(std::move(basis)) {}

  Kind kind_;
  FieldPtr field_;
  std::vector<GaloisField::Element> basis_;
};

const char* to_string(CoordinateBasis::Kind kind);

}  // namespace sptc

#endif  // SPTC_FIELD_HPP_
