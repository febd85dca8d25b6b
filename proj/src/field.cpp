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

#include "sptc/field.hpp"

#include <bit>
#include <sstream>

#include "sptc/error.hpp"

namespace sptc {

BitMatrix::BitMatrix(unsigned size, std::vector<std::uint64_t> rows)
    : size_(size), rows_(std::move(rows)) {
  if (rows_.size() != size_) throw_invalid("BitMatrix: row count mismatch");
}

BitMatrix BitMatrix::identity(unsigned size) {
  BitMatrix m(size);
  for (unsigned i = 0; i < size; ++i) m.rows_[i] = 1ull << i;
  return m;
}

void BitMatrix::set(unsigned row, unsigned col, bool value) {
  if (value) {
    rows_[row] |= 1ull << col;
  } else {
    rows_[row] &= ~(1ull << col);
  }
}

std::uint64_t BitMatrix::apply(std::uint64_t row_vector) const {
  std::uint64_t out = 0;
  for (unsigned i = 0; i < size_; ++i) {
    if ((row_vector >> i) & 1u) out ^= rows_[i];
  }
  return out;
}

bool BitMatrix::is_symmetric() const {
  for (unsigned i = 0; i < size_; ++i)
    for (unsigned j = i + 1; j < size_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool BitMatrix::is_invertible() const {
  std::vector<std::uint64_t> rows = rows_;
  unsigned rank = 0;
  for (unsigned col = 0; col < size_ && rank < size_; ++col) {
    unsigned pivot = rank;
    while (pivot < size_ && !((rows[pivot] >> col) & 1u)) ++pivot;
    if (pivot == size_) continue;
    std::swap(rows[rank], rows[pivot]);
    for (unsigned r = 0; r < size_; ++r)
      if (r != rank && ((rows[r] >> col) & 1u)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank == size_;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.size_ != b.size_) throw_invalid("BitMatrix: size mismatch");
  BitMatrix out(a.size_);
  for (unsigned i = 0; i < a.size_; ++i) out.rows_[i] = b.apply(a.rows_[i]);
  return out;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
  if (a.size_ != b.size_) throw_invalid("BitMatrix: size mismatch");
  BitMatrix out(a.size_);
  for (unsigned i = 0; i < a.size_; ++i) out.rows_[i] = a.rows_[i] ^ b.rows_[i];
  return out;
}

std::string BitMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (unsigned i = 0; i < size_; ++i) {
    os << (i ? ",[" : "[");
    for (unsigned j = 0; j < size_; ++j) os << (j ? "," : "") << (at(i, j) ? 1 : 0);
    os << ']';
  }
  os << ']';
  return os.str();
}

BitMatrix pow(const BitMatrix& m, std::uint64_t exponent) {
  BitMatrix result = BitMatrix::identity(m.size());
  BitMatrix base = m;
  while (exponent) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------

GaloisField::GaloisField(unsigned s, std::uint64_t poly_low)
    : degree_(s),
      poly_low_(poly_low),
      mask_(s == 64 ? ~0ull : ((1ull << s) - 1)),
      generator_(s == 1 ? (poly_low & 1) : 2) {
  self_dual_ = compute_self_dual_basis();
}

FieldPtr GaloisField::make(unsigned s) {
  return FieldPtr(new GaloisField(s, smallest_primitive_polynomial(s)));
}

FieldPtr GaloisField::with_polynomial(unsigned s, std::uint64_t poly_low) {
  if (s == 0 || s > kMaxDegree)
    throw_invalid("field degree must be in [1, 64], got " + std::to_string(s));
  if (!is_primitive(s, poly_low))
    throw_invariant("polynomial is not primitive of degree " + std::to_string(s));
  return FieldPtr(new GaloisField(s, poly_low));
}

GaloisField::Element GaloisField::mul(Element a, Element b) const {
  Element r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    const bool top = (a >> (degree_ - 1)) & 1;
    a = (a << 1) & mask_;
    if (top) a ^= poly_low_;
  }
  return r;
}

GaloisField::Element GaloisField::pow(Element a, std::uint64_t k) const {
  Element r = 1;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

GaloisField::Element GaloisField::inv(Element a) const {
  if (a == 0) throw_invalid("inverse of zero");
  return pow(a, mask_ - 1);
}

int GaloisField::trace(Element a) const {
  Element sum = a;
  Element t = a;
  for (unsigned i = 1; i < degree_; ++i) {
    t = mul(t, t);
    sum ^= t;
  }
  if (sum > 1) throw_invariant("trace left the prime field");
  return static_cast<int>(sum);
}

std::vector<GaloisField::Element> GaloisField::elements() const {
  if (degree_ > 24) throw_invalid("element enumeration limited to s <= 24");
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(mask_) + 1);
  out.push_back(0);
  Element x = 1;
  for (std::uint64_t k = 0; k < mask_; ++k) {
    out.push_back(x);
    x = mul(x, generator_);
  }
  return out;
}

BitMatrix GaloisField::companion() const { return companion_of(generator_); }

BitMatrix GaloisField::companion_of(Element b) const {
  BitMatrix m(degree_);
  for (unsigned i = 0; i < degree_; ++i) {
    const Element row = mul(1ull << i, b);  // x^i * b
    for (unsigned j = 0; j < degree_; ++j) m.set(i, j, (row >> j) & 1u);
  }
  return m;
}

std::string GaloisField::polynomial_string() const {
  std::string out = degree_ == 1 ? "x" : "x^" + std::to_string(degree_);
  for (int i = static_cast<int>(degree_) - 1; i >= 0; --i) {
    if (!((poly_low_ >> i) & 1u)) continue;
    out += i == 0 ? " + 1" : i == 1 ? " + x" : " + x^" + std::to_string(i);
  }
  return out;
}

// Orthonormalises the trace form Tr(uv) greedily. Tr(u^2) = Tr(u * w) where
// w is the characteristic vector of the form on the remaining subspace
// (initially w = 1). Picking a non-isotropic v != w keeps the complement
// v-perp non-alternating, so the process never gets stuck.
std::vector<GaloisField::Element> GaloisField::compute_self_dual_basis() const {
  auto form = [this](Element u, Element v) { return trace(mul(u, v)); };

  std::vector<Element> span;
  for (unsigned i = 0; i < degree_; ++i) span.push_back(1ull << i);
  Element w = 1;
  std::vector<Element> basis;

  while (span.size() > 1) {
    // On the current span Tr(u^2) = Tr(u) = form(u, w), so some single
    // vector, pair or triple qualifies; binary order over all combinations
    // would be exponential for sparse polynomials.
    Element v = 0;
    bool found = false;
    const std::size_t dim = span.size();
    auto try_candidate = [&](Element candidate) {
      if (!found && candidate != w && form(candidate, candidate) == 1) {
        v = candidate;
        found = true;
      }
    };
    for (std::size_t i = 0; i < dim; ++i) try_candidate(span[i]);
    for (std::size_t i = 0; i < dim && !found; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) try_candidate(span[i] ^ span[j]);
    for (std::size_t i = 0; i < dim && !found; ++i)
      for (std::size_t j = i + 1; j < dim && !found; ++j)
        for (std::size_t k = j + 1; k < dim; ++k) try_candidate(span[i] ^ span[j] ^ span[k]);
    if (!found) throw_invariant("self-dual basis search failed");
    basis.push_back(v);

    // Project onto v-perp and drop the one dependency this creates.
    std::vector<Element> reduced;
    std::vector<unsigned> pivots;
    for (Element u : span) {
      if (form(u, v)) u ^= v;
      for (std::size_t i = 0; i < reduced.size(); ++i)
        if ((u >> pivots[i]) & 1u) u ^= reduced[i];
      if (u == 0) continue;
      pivots.push_back(static_cast<unsigned>(std::countr_zero(u)));
      reduced.push_back(u);
    }
    span = std::move(reduced);
    w ^= v;
  }
  if (span.size() != 1 || form(span[0], span[0]) != 1)
    throw_invariant("self-dual basis search failed");
  basis.push_back(span[0]);
  return basis;
}

bool same_field(const GaloisField& a, const GaloisField& b) { return a == b; }

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, std::uint64_t bits)
    : field_(std::move(field)), bits_(bits) {
  if (!field_) throw_invalid("field element without a field");
  if (!field_->contains(bits_))
    throw_invalid("element " + std::to_string(bits_) + " outside GF(2^" +
                  std::to_string(field_->degree()) + ")");
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!same_field(*a.field(), *b.field())) throw_invalid("operands from different fields");
}
}  // namespace

FieldElement FieldElement::inverse() const { return {field_, field_->inv(bits_)}; }
FieldElement FieldElement::pow(std::uint64_t k) const { return {field_, field_->pow(bits_, k)}; }
int FieldElement::trace() const { return field_->trace(bits_); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_->add(a.bits_, b.bits_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_->mul(a.bits_, b.bits_)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return same_field(*a.field_, *b.field_) && a.bits_ == b.bits_;
}

// ---------------------------------------------------------------------------

CoordinateBasis CoordinateBasis::polynomial(FieldPtr field) {
  std::vector<GaloisField::Element> basis;
  for (unsigned i = 0; i < field->degree(); ++i) basis.push_back(1ull << i);
  return {Kind::kPolynomial, std::move(field), std::move(basis)};
}

CoordinateBasis CoordinateBasis::self_dual(FieldPtr field) {
  auto basis = field->self_dual_basis();
  return {Kind::kSelfDual, std::move(field), std::move(basis)};
}

CoordinateBasis CoordinateBasis::for_symplectic(FieldPtr field) {
  // Every multiplication matrix is a polynomial in the companion matrix, so
  // checking the companion matrix is enough.
  if (field->companion().is_symmetric()) return polynomial(std::move(field));
  return self_dual(std::move(field));
}

std::uint64_t CoordinateBasis::to_coords(GaloisField::Element a) const {
  if (kind_ == Kind::kPolynomial) return a;
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < basis_.size(); ++j)
    if (field_->trace(field_->mul(a, basis_[j]))) out |= 1ull << j;
  return out;
}

GaloisField::Element CoordinateBasis::from_coords(std::uint64_t coords) const {
  if (kind_ == Kind::kPolynomial) return coords & field_->mask();
  GaloisField::Element out = 0;
  for (std::size_t j = 0; j < basis_.size(); ++j)
    if ((coords >> j) & 1u) out ^= basis_[j];
  return out;
}

BitMatrix CoordinateBasis::matrix_of(GaloisField::Element a) const {
  const unsigned s = field_->degree();
  BitMatrix m(s);
  for (unsigned i = 0; i < s; ++i) {
    const std::uint64_t row = to_coords(field_->mul(basis_[i], a));
    for (unsigned j = 0; j < s; ++j) m.set(i, j, (row >> j) & 1u);
  }
  return m;
}

const char* to_string(CoordinateBasis::Kind kind) {
  return kind == CoordinateBasis::Kind::kPolynomial ? "polynomial" : "self-dual";
}

}  // namespace sptc
