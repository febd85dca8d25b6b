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

#include "sptc/codes.hpp"

#include <algorithm>

#include "sptc/error.hpp"

namespace sptc {

const char* to_string(CodeFamily family) {
  switch (family) {
    case CodeFamily::kErs: return "ERS";
    case CodeFamily::kOvoid: return "OVOID";
    case CodeFamily::kAppendixC: return "APPENDIX_C";
    case CodeFamily::kCustom: return "CUSTOM";
  }
  return "CUSTOM";
}

CodeFamily parse_code_family(const std::string& tag) {
  if (tag == "ERS") return CodeFamily::kErs;
  if (tag == "OVOID") return CodeFamily::kOvoid;
  if (tag == "APPENDIX_C") return CodeFamily::kAppendixC;
  if (tag == "CUSTOM") return CodeFamily::kCustom;
  throw_parse("unknown family tag '" + tag + "'");
}

std::size_t field_rank(const GaloisField& field, std::vector<GaloisField::Element> m,
                       std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      std::swap_ranges(m.begin() + pivot * cols, m.begin() + (pivot + 1) * cols,
                       m.begin() + rank * cols);
    const auto inv = field.inv(m[rank * cols + col]);
    for (std::size_t j = col; j < cols; ++j) m[rank * cols + j] = field.mul(m[rank * cols + j], inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const auto factor = m[r * cols + col];
      if (factor == 0) continue;
      for (std::size_t j = col; j < cols; ++j)
        m[r * cols + j] ^= field.mul(factor, m[rank * cols + j]);
    }
    ++rank;
  }
  return rank;
}

LinearCode::LinearCode(FieldPtr field, std::size_t dimension, std::size_t length,
                       std::vector<Element> generator, std::optional<std::uint64_t> distance,
                       CodeFamily family)
    : field_(std::move(field)),
      dimension_(dimension),
      length_(length),
      generator_(std::move(generator)),
      distance_(distance),
      family_(family) {
  if (!field_) throw_invalid("code without a field");
  if (dimension_ == 0 || length_ == 0) throw_invariant("code dimension and length must be positive");
  if (dimension_ % 2 != 0)
    throw_invariant("code dimension must be even, got " + std::to_string(dimension_));
  if (generator_.size() != dimension_ * length_)
    throw_invalid("generator matrix has the wrong number of entries");
  for (Element e : generator_)
    if (!field_->contains(e)) throw_invalid("generator entry outside the field");
  for (std::size_t j = 0; j < length_; ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < dimension_ && !nonzero; ++i) nonzero = at(i, j) != 0;
    if (!nonzero) throw_invariant("generator column " + std::to_string(j + 1) + " is zero");
  }
  if (field_rank(*field_, generator_, dimension_, length_) != dimension_)
    throw_invariant("generator matrix is rank deficient");
  if (distance_ && (*distance_ == 0 || *distance_ > length_ - dimension_ + 1))
    throw_invariant("declared distance violates the Singleton bound");
}

std::vector<LinearCode::Element> LinearCode::column(std::size_t j) const {
  std::vector<Element> out(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) out[i] = at(i, j);
  return out;
}

LinearCode LinearCode::with_distance(std::uint64_t d) const {
  return LinearCode(field_, dimension_, length_, generator_, d, family_);
}

bool operator==(const LinearCode& a, const LinearCode& b) {
  return *a.field_ == *b.field_ && a.dimension_ == b.dimension_ && a.length_ == b.length_ &&
         a.generator_ == b.generator_ && a.distance_ == b.distance_ && a.family_ == b.family_;
}

LinearCode ers_code(const FieldPtr& field, unsigned r) {
  const unsigned s = field->degree();
  if (s > kMaxErsDegree)
    throw_invalid("ERS codes are materialised only for s <= " + std::to_string(kMaxErsDegree));
  const std::uint64_t q = 1ull << s;
  if (r == 0 || 2ull * r > q)
    throw_invalid("ERS code needs 1 <= 2r <= q (r=" + std::to_string(r) + ", q=" + std::to_string(q) + ")");
  const std::size_t k = 2 * r;
  const std::size_t c = q + 1;
  std::vector<GaloisField::Element> g(k * c, 0);
  const auto points = field->elements();
  for (std::size_t j = 0; j < q; ++j) {
    GaloisField::Element power = 1;
    for (std::size_t i = 0; i < k; ++i) {
      g[i * c + j] = power;
      power = field->mul(power, points[j]);
    }
  }
  g[(k - 1) * c + q] = 1;
  return LinearCode(field, k, c, std::move(g), q + 2 - 2ull * r, CodeFamily::kErs);
}

GaloisField::Element ovoid_parameter(const GaloisField& field) {
  for (auto a : field.elements())
    if (field.trace(a) == 1) return a;
  throw_invariant("no element of trace 1");
}

LinearCode ovoid_code(const FieldPtr& field) {
  const unsigned s = field->degree();
  if (s > kMaxOvoidDegree)
    throw_invalid("ovoid codes are materialised only for s <= " + std::to_string(kMaxOvoidDegree));
  const std::uint64_t q = 1ull << s;
  const std::size_t c = q * q + 1;
  const auto points = field->elements();
  const auto a = ovoid_parameter(*field);
  std::vector<GaloisField::Element> g(4 * c, 0);
  g[1 * c + 0] = 1;
  std::size_t col = 1;
  for (auto t : points) {
    for (auto u : points) {
      const auto f = field->square(t) ^ field->mul(t, u) ^ field->mul(a, field->square(u));
      g[0 * c + col] = 1;
      g[1 * c + col] = f;
      g[2 * c + col] = t;
      g[3 * c + col] = u;
      ++col;
    }
  }
  return LinearCode(field, 4, c, std::move(g), q * q - q, CodeFamily::kOvoid);
}

LinearCode single_parity_check_code() {
  auto field = GaloisField::make(2);
  std::vector<GaloisField::Element> g = {
      1, 0, 0, 0, 1,  //
      0, 1, 0, 0, 1,  //
      0, 0, 1, 0, 1,  //
      0, 0, 0, 1, 1,
  };
  return LinearCode(field, 4, 5, std::move(g), 2, CodeFamily::kAppendixC);
}

std::vector<GaloisField::Element> encode(std::span<const GaloisField::Element> message,
                                         const LinearCode& code) {
  if (message.size() != code.dimension())
    throw_invalid("message length " + std::to_string(message.size()) + " != code dimension " +
                  std::to_string(code.dimension()));
  const auto& field = code.field();
  std::vector<GaloisField::Element> out(code.length(), 0);
  for (std::size_t i = 0; i < message.size(); ++i) {
    if (!field.contains(message[i])) throw_invalid("message symbol outside the field");
    if (message[i] == 0) continue;
    auto row = code.row(i);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] ^= field.mul(message[i], row[j]);
  }
  return out;
}

std::size_t hamming_weight(std::span<const GaloisField::Element> word) {
  return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](auto e) { return e != 0; }));
}

std::uint64_t min_distance(const LinearCode& code, std::uint64_t budget) {
  const unsigned s = code.field().degree();
  const std::size_t k = code.dimension();
  const std::size_t c = code.length();
  if (static_cast<std::uint64_t>(s) * k >= 64 || (1ull << (s * k)) > budget)
    throw_budget("min_distance: q^k exceeds the budget of " + std::to_string(budget) + " codewords");
  const auto& field = code.field();

  // Odometer over messages (digits are raw element integers); the codeword
  // and its weight are updated incrementally from the digits that change.
  std::vector<GaloisField::Element> digits(k, 0);
  std::vector<GaloisField::Element> word(c, 0);
  std::size_t weight = 0;
  std::uint64_t best = c + 1;
  const std::uint64_t total = 1ull << (s * k);
  for (std::uint64_t n = 1; n < total; ++n) {
    for (std::size_t i = 0; i < k; ++i) {
      const auto old = digits[i];
      const auto next = (old + 1) & field.mask();
      digits[i] = next;
      const auto delta = old ^ next;
      auto row = code.row(i);
      for (std::size_t j = 0; j < c; ++j) {
        if (row[j] == 0) continue;
        const bool was_zero = word[j] == 0;
        word[j] ^= field.mul(delta, row[j]);
        const bool is_zero = word[j] == 0;
        if (was_zero && !is_zero) ++weight;
        if (!was_zero && is_zero) --weight;
      }
      if (next != 0) break;  // no carry
    }
    best = std::min<std::uint64_t>(best, weight);
  }
  return best;
}

}  // namespace sptc
