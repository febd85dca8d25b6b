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

#include <gtest/gtest.h>

#include <array>
#include <complex>
#include <random>

#include "sptc/error.hpp"

namespace sptc {
namespace {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;

Matrix single(char letter) {
  const Complex i(0, 1);
  switch (letter) {
    case 'X': return {{0, 1}, {1, 0}};
    case 'Y': return {{0, -i}, {i, 0}};
    case 'Z': return {{1, 0}, {0, -1}};
    default: return {{1, 0}, {0, 1}};
  }
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size(), m = b.size();
  Matrix out(n * m, std::vector<Complex>(n * m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) out[i * m + k][j * m + l] = a[i][j] * b[k][l];
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Matrix matrix_of(const std::string& word) {
  Matrix out = {{1}};
  for (char ch : word) out = kron(out, single(ch));
  return out;
}

bool matrices_commute(const Matrix& a, const Matrix& b) {
  const auto ab = multiply(a, b);
  const auto ba = multiply(b, a);
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = 0; j < ab.size(); ++j)
      if (std::abs(ab[i][j] - ba[i][j]) > 1e-9) return false;
  return true;
}

TEST(PauliTest, TwoBitMap) {
  PauliVector p(1);
  p.set_letter(0, 'X');
  EXPECT_EQ(p.x().to_word(), 1u);
  EXPECT_EQ(p.z().to_word(), 0u);
  p.set_letter(0, 'Y');
  EXPECT_EQ(p.z().to_word(), 1u);
  EXPECT_EQ(p.x().to_word(), 1u);
  p.set_letter(0, 'Z');
  EXPECT_EQ(p.x().to_word(), 0u);
  EXPECT_EQ(parse_pauli("XY", 2).symplectic().to_bit_string(), "1101");
  EXPECT_EQ(parse_pauli("YY", 2).symplectic().to_bit_string(), "1111");
  EXPECT_EQ(parse_pauli("XII", 3).symplectic().to_bit_string(), "100000");
}

TEST(PauliTest, CanonicalFormMatchesMatrixCommutation) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const std::uint64_t count = 1ull << (2 * n);
    for (std::uint64_t a = 0; a < count; ++a) {
      for (std::uint64_t b = 0; b < count; ++b) {
        const auto u = PauliVector::from_index(n, a);
        const auto v = PauliVector::from_index(n, b);
        const bool commute = matrices_commute(matrix_of(u.to_word()), matrix_of(v.to_word()));
        EXPECT_EQ(canonical_form(u, v) == 0, commute) << u.to_word() << " " << v.to_word();
      }
    }
  }
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto u = PauliVector::from_index(3, rng() % 64);
    const auto v = PauliVector::from_index(3, rng() % 64);
    EXPECT_EQ(canonical_form(u, v) == 0, matrices_commute(matrix_of(u.to_word()), matrix_of(v.to_word())));
  }
}

TEST(PauliTest, ProductMatchesMatrixProductUpToPhase) {
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      const auto u = PauliVector::from_index(2, a);
      const auto v = PauliVector::from_index(2, b);
      const auto prod = multiply(matrix_of(u.to_word()), matrix_of(v.to_word()));
      const auto expected = matrix_of((u * v).to_word());
      // prod = phase * expected with |phase| = 1
      Complex phase = 0;
      for (std::size_t i = 0; i < 4 && phase == Complex(0); ++i)
        for (std::size_t j = 0; j < 4; ++j)
          if (std::abs(expected[i][j]) > 0.5) {
            phase = prod[i][j] / expected[i][j];
            break;
          }
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_LT(std::abs(prod[i][j] - phase * expected[i][j]), 1e-9);
    }
  }
}

TEST(PauliTest, FormIsAlternatingAndBilinear) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng() % 40;
    auto random_pauli = [&] {
      PauliVector p(n);
      for (std::size_t q = 0; q < n; ++q) p.set_letter(q, "IXYZ"[rng() % 4]);
      return p;
    };
    const auto u = random_pauli();
    const auto v = random_pauli();
    const auto w = random_pauli();
    EXPECT_EQ(canonical_form(u, u), 0);
    EXPECT_EQ(canonical_form(u, v), canonical_form(v, u));
    EXPECT_EQ(canonical_form(u * v, w), canonical_form(u, w) ^ canonical_form(v, w));
  }
}

TEST(PauliTest, IndexRoundTrip) {
  for (std::uint64_t i = 0; i < 256; ++i) {
    const auto p = PauliVector::from_index(4, i);
    EXPECT_EQ(p.to_index(), i);
    EXPECT_EQ(p.x().to_word(), i & 0xf);
    EXPECT_EQ(p.z().to_word(), i >> 4);
  }
}

TEST(PauliTest, HexIsBigEndianWithQubitOneFirst) {
  EXPECT_EQ(parse_pauli("XIII", 4).to_hex(), "8:0");
  EXPECT_EQ(parse_pauli("IIIZ", 4).to_hex(), "0:1");
  EXPECT_EQ(parse_pauli("YIYI", 4).to_hex(), "a:a");
  EXPECT_EQ(parse_pauli("XIIII", 5).to_hex(), "10:00");
  EXPECT_EQ(parse_pauli("IIIIX", 5).to_hex(), "01:00");
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 70;
    PauliVector p(n);
    for (std::size_t q = 0; q < n; ++q) p.set_letter(q, "IXYZ"[rng() % 4]);
    EXPECT_EQ(parse_pauli(p.to_hex(), n), p);
    EXPECT_EQ(parse_pauli(p.to_word(), n), p);
  }
}

TEST(PauliTest, SparseNotation) {
  EXPECT_EQ(parse_pauli("Z1,X3", 4).to_word(), "ZIXI");
  EXPECT_EQ(parse_pauli(" Y4 ", 4).to_word(), "IIIY");
  EXPECT_EQ(parse_pauli("X1,Z1", 2).to_word(), "YI");
  EXPECT_EQ(parse_pauli("Z1,X3", 4).to_hex(), "2:8");
  EXPECT_EQ(parse_pauli("X10", 12).to_word(), "IIIIIIIIIXII");
}

TEST(PauliTest, ParseRejects) {
  for (const char* bad : {"", "Q1", "X0", "X5", "X", "XIIIII", "g:0", "10:0", "1:1:1", "X1,,Z2"}) {
    EXPECT_THROW(parse_pauli(bad, 4), Error) << bad;
  }
  EXPECT_NO_THROW(parse_pauli("0xf:0X0", 4));
}

TEST(PauliTest, RowSpaceRankAndMembership) {
  Gf2RowSpace space(6);
  EXPECT_TRUE(space.insert(BitVector::from_word(6, 0b000011)));
  EXPECT_TRUE(space.insert(BitVector::from_word(6, 0b000110)));
  EXPECT_FALSE(space.insert(BitVector::from_word(6, 0b000101)));
  EXPECT_TRUE(space.insert(BitVector::from_word(6, 0b110000)));
  EXPECT_EQ(space.rank(), 3u);
  EXPECT_TRUE(space.contains(BitVector::from_word(6, 0b110101)));
  EXPECT_FALSE(space.contains(BitVector::from_word(6, 0b001000)));
  EXPECT_TRUE(space.contains(BitVector(6)));
}

TEST(PauliTest, RowSpaceAgreesWithBruteForceSpan) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    Gf2RowSpace space(8);
    std::vector<std::uint64_t> gens;
    for (int i = 0; i < 4; ++i) {
      gens.push_back(rng() & 0xff);
      space.insert(BitVector::from_word(8, gens.back()));
    }
    std::array<bool, 256> span{};
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
      std::uint64_t v = 0;
      for (int i = 0; i < 4; ++i)
        if ((mask >> i) & 1) v ^= gens[i];
      span[v] = true;
    }
    std::size_t size = 0;
    for (std::uint64_t v = 0; v < 256; ++v) {
      EXPECT_EQ(space.contains(BitVector::from_word(8, v)), span[v]);
      size += span[v];
    }
    EXPECT_EQ(size, 1ull << space.rank());
  }
}

TEST(PauliTest, BitVectorBasics) {
  BitVector v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  EXPECT_EQ(v.count(), 3u);
  EXPECT_EQ(v.find_first(), 0u);
  v.flip(0);
  EXPECT_EQ(v.find_first(), 64u);
  BitVector w(130);
  w.set(64);
  EXPECT_TRUE(v.dot(w));
  w.set(129);
  EXPECT_FALSE(v.dot(w));
  EXPECT_EQ(BitVector(5).find_first(), 5u);
}

}  // namespace
}  // namespace sptc
