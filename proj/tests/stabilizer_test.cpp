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

#include "sptc/stabilizer.hpp"

#include <gtest/gtest.h>

#include <random>

#include "sptc/error.hpp"

namespace sptc {
namespace {

std::vector<std::uint64_t> point_from_index(std::uint64_t index, unsigned s, std::size_t len) {
  std::vector<std::uint64_t> p(len);
  for (auto& v : p) {
    v = index & ((1ull << s) - 1);
    index >>= s;
  }
  return p;
}

// Rank of the generators' symplectic rows by plain elimination on integers.
std::size_t naive_rank(const std::vector<PauliVector>& gens) {
  std::vector<std::uint64_t> rows;
  for (const auto& g : gens) rows.push_back(g.x().to_word() | (g.z().to_word() << g.num_qubits()));
  std::size_t rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !((rows[pivot] >> bit) & 1)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && ((rows[i] >> bit) & 1)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

bool same_row_space(const StabilizerCode& a, const StabilizerCode& b) {
  for (const auto& g : b.generators())
    if (!a.in_stabilizer(g)) return false;
  for (const auto& g : a.generators())
    if (!b.in_stabilizer(g)) return false;
  return true;
}

void check_points_to_stabilizers(unsigned s, std::size_t r, std::uint64_t stride) {
  const auto field = GaloisField::make(s);
  const auto basis = CoordinateBasis::for_symplectic(field);
  const std::uint64_t total = 1ull << (s * 2 * r);
  for (std::uint64_t idx = 1; idx < total; idx += stride) {
    const auto point = point_from_index(idx, s, 2 * r);
    const auto code = blow_up(point, basis);
    ASSERT_EQ(code.num_generators(), s);
    ASSERT_EQ(code.num_qubits(), r * s);
    EXPECT_EQ(naive_rank(code.generators()), s);
    for (const auto& g : code.generators())
      for (const auto& h : code.generators()) EXPECT_EQ(canonical_form(g, h), 0);
    for (std::uint64_t lambda = 2; lambda < (1ull << s); ++lambda) {
      std::vector<std::uint64_t> scaled(point);
      for (auto& v : scaled) v = field->mul(v, lambda);
      EXPECT_TRUE(same_row_space(code, blow_up(scaled, basis))) << "s=" << s << " idx=" << idx;
    }
  }
}

TEST(StabilizerTest, PointsOfPG3Over4GiveStabilizerCodes) { check_points_to_stabilizers(2, 2, 1); }

TEST(StabilizerTest, PointsGiveStabilizerCodesForSelfDualBasis) {
  check_points_to_stabilizers(3, 1, 1);
  check_points_to_stabilizers(3, 2, 1);
  check_points_to_stabilizers(4, 2, 7);
  check_points_to_stabilizers(5, 1, 1);
  check_points_to_stabilizers(2, 3, 1);
}

TEST(StabilizerTest, PolynomialBasisFailsForCubicField) {
  // With the polynomial basis the blow-up of (1, x) over GF(8) is not isotropic.
  const auto field = GaloisField::make(3);
  const std::vector<std::uint64_t> point = {1, 2};
  EXPECT_THROW(blow_up(point, CoordinateBasis::polynomial(field)), Error);
  EXPECT_NO_THROW(blow_up(point, CoordinateBasis::self_dual(field)));
}

TEST(StabilizerTest, BlowUpLayoutFollowsCompanionBlocks) {
  const auto field = GaloisField::make(2);
  const auto basis = CoordinateBasis::for_symplectic(field);
  const std::vector<std::uint64_t> point = {2, 0, 0, 3};
  const auto code = blow_up(point, basis);
  // Block j of row i is row i of companion_of(point_j).
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& g = code.generators()[i];
    for (std::size_t t = 0; t < 2; ++t) {
      EXPECT_EQ(g.x().test(t), field->companion_of(2).at(i, t));
      EXPECT_EQ(g.x().test(2 + t), false);
      EXPECT_EQ(g.z().test(t), false);
      EXPECT_EQ(g.z().test(2 + t), field->companion_of(3).at(i, t));
    }
  }
}

TEST(StabilizerTest, FormEquivalenceExhaustiveForGf4) {
  const auto field = GaloisField::make(2);
  const auto basis = CoordinateBasis::for_symplectic(field);
  for (std::uint64_t idx = 1; idx < 256; ++idx) {
    const auto point = point_from_index(idx, 2, 4);
    const auto code = blow_up(point, basis);
    for (std::uint64_t ei = 0; ei < 256; ++ei) {
      const auto e = PauliVector::from_index(4, ei);
      const bool commutes = code.commutes_with_all(e);
      const auto coords = pauli_field_coordinates(e, basis, 2);
      const bool form_zero = field_symplectic(*field, point, coords) == 0;
      // Coordinate of the encoded word at a column equal to the point.
      const auto message = pauli_to_field_vector(e, basis, 2);
      std::uint64_t symbol = 0;
      for (std::size_t i = 0; i < 4; ++i) symbol ^= field->mul(message[i], point[i]);
      EXPECT_EQ(commutes, form_zero);
      EXPECT_EQ(commutes, symbol == 0);
    }
  }
}

TEST(StabilizerTest, FormEquivalenceSampledForLargerFields) {
  std::mt19937_64 rng(21);
  for (unsigned s : {3u, 4u, 5u, 6u}) {
    const auto field = GaloisField::make(s);
    const auto basis = CoordinateBasis::for_symplectic(field);
    for (int t = 0; t < 400; ++t) {
      std::vector<std::uint64_t> point(4);
      for (auto& v : point) v = rng() & field->mask();
      if (point == std::vector<std::uint64_t>(4, 0)) continue;
      const auto code = blow_up(point, basis);
      PauliVector e(2 * s);
      for (std::size_t q = 0; q < 2 * s; ++q) e.set_letter(q, "IXYZ"[rng() % 4]);
      const auto coords = pauli_field_coordinates(e, basis, 2);
      EXPECT_EQ(code.commutes_with_all(e), field_symplectic(*field, point, coords) == 0);
    }
  }
}

TEST(StabilizerTest, SingleParityCheckGenerators) {
  const auto sptc = build_sptc(single_parity_check_code());
  const std::vector<std::vector<std::string>> expected = {
      {"XIII", "IXII"}, {"IIXI", "IIIX"}, {"ZIII", "IZII"}, {"IIZI", "IIIZ"}, {"YIYI", "IYIY"}};
  ASSERT_EQ(sptc.size(), 5u);
  for (std::size_t k = 0; k < 5; ++k) {
    ASSERT_EQ(sptc.codes()[k].num_generators(), 2u);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(sptc.codes()[k].generators()[i].to_word(), expected[k][i]);
  }
  EXPECT_EQ(sptc.eps_bound(), Rational(3, 5));
  EXPECT_EQ(sptc.num_qubits(), 4u);
  EXPECT_EQ(sptc.num_logical(), 2u);
}

// Largest zero count of a nonzero codeword, over every message.
Rational codeword_oracle(const LinearCode& code) {
  const auto& f = code.field();
  const std::uint64_t q = 1ull << f.degree();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < code.dimension(); ++i) total *= q;
  std::uint64_t best = 0;
  for (std::uint64_t m = 1; m < total; ++m) {
    std::uint64_t rest = m, zeros = 0;
    std::vector<std::uint64_t> msg(code.dimension());
    for (auto& d : msg) {
      d = rest % q;
      rest /= q;
    }
    for (std::size_t j = 0; j < code.length(); ++j) {
      std::uint64_t sym = 0;
      for (std::size_t i = 0; i < code.dimension(); ++i) sym ^= f.mul(msg[i], code.at(i, j));
      zeros += sym == 0;
    }
    best = std::max(best, zeros);
  }
  return Rational(static_cast<long long>(best), static_cast<long long>(code.length()));
}

TEST(StabilizerTest, ExhaustiveErrorRates) {
  struct Case {
    LinearCode code;
    Rational expected;
  };
  const std::vector<Case> cases = {
      {single_parity_check_code(), Rational(3, 5)},
      {ers_code(GaloisField::make(3), 2), Rational(3, 9)},
      {ovoid_code(GaloisField::make(2)), Rational(5, 17)},
  };
  for (const auto& c : cases) {
    const auto sptc = build_sptc(c.code);
    const auto report = verify_error_rate(sptc);
    EXPECT_EQ(report.max_fraction, c.expected);
    EXPECT_EQ(report.max_fraction, codeword_oracle(c.code));
    EXPECT_EQ(report.bound, c.expected);
    EXPECT_TRUE(report.holds);
    EXPECT_TRUE(report.exhaustive);
    EXPECT_EQ(report.errors_checked, (1ull << (2 * sptc.num_qubits())) - 1);
    EXPECT_EQ(undetected_fraction(sptc, report.witness, true), report.max_fraction);
  }
}

TEST(StabilizerTest, DeskFamiliesMeetTheBoundExactly) {
  for (unsigned s = 1; s <= 3; ++s) {
    for (unsigned r = 1; r * s <= 6 && 2 * r <= (1u << s); ++r) {
      const auto sptc = build_sptc(ers_code(GaloisField::make(s), r));
      const auto report = verify_error_rate(sptc, kDefaultErrorBudget, 2);
      EXPECT_EQ(report.max_fraction, sptc.eps_bound()) << "s=" << s << " r=" << r;
    }
  }
  const auto sptc = build_sptc(ovoid_code(GaloisField::make(3)));
  EXPECT_EQ(verify_error_rate(sptc, kDefaultErrorBudget, 4).max_fraction, Rational(9, 65));
}

TEST(StabilizerTest, WorkersDoNotChangeTheReport) {
  const auto sptc = build_sptc(ers_code(GaloisField::make(3), 2));
  const auto one = verify_error_rate(sptc, kDefaultErrorBudget, 1);
  for (unsigned w : {2u, 3u, 8u}) {
    const auto many = verify_error_rate(sptc, kDefaultErrorBudget, w);
    EXPECT_EQ(many.max_fraction, one.max_fraction);
    EXPECT_EQ(many.witness, one.witness);
    EXPECT_EQ(many.errors_checked, one.errors_checked);
  }
}

TEST(StabilizerTest, BudgetIsEnforced) {
  const auto sptc = build_sptc(ers_code(GaloisField::make(3), 2));
  try {
    verify_error_rate(sptc, 1000);
    FAIL() << "expected a budget error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudget);
  }
}

TEST(StabilizerTest, SampledReportIsSeeded) {
  const auto sptc = build_sptc(ovoid_code(GaloisField::make(2)));
  const auto a = sample_error_rate(sptc, 500, 42);
  const auto b = sample_error_rate(sptc, 500, 42);
  EXPECT_EQ(a.max_fraction, b.max_fraction);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_FALSE(a.exhaustive);
  EXPECT_EQ(a.seed, 42u);
  EXPECT_LE(a.max_fraction, sptc.eps_bound());
}

TEST(StabilizerTest, WeakCountNeverExceedsStrong) {
  const auto sptc = build_sptc(single_parity_check_code());
  for (std::uint64_t i = 1; i < 256; ++i) {
    const auto e = PauliVector::from_index(4, i);
    EXPECT_LE(undetected_count(sptc, e, false), undetected_count(sptc, e, true));
    EXPECT_EQ(undetected_count(sptc, e, true), zero_coordinates(sptc, e));
  }
  EXPECT_THROW(undetected_fraction(sptc, PauliVector(4), true), Error);
  EXPECT_THROW(undetected_count(sptc, PauliVector(3), true), Error);
}

TEST(StabilizerTest, RejectsBadGenerators) {
  EXPECT_THROW(StabilizerCode({parse_pauli("XI", 2), parse_pauli("ZI", 2)}, {}), Error);
  EXPECT_THROW(StabilizerCode({parse_pauli("XI", 2), parse_pauli("XI", 2)}, {}), Error);
  EXPECT_THROW(StabilizerCode({}, {}), Error);
  EXPECT_NO_THROW(StabilizerCode({parse_pauli("XX", 2), parse_pauli("ZZ", 2)}, {}));
}

}  // namespace
}  // namespace sptc
