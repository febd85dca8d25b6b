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

#ifndef SPTC_STABILIZER_HPP_
#define SPTC_STABILIZER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sptc/codes.hpp"
#include "sptc/field.hpp"
#include "sptc/pauli.hpp"
#include "sptc/rational.hpp"

namespace sptc {

// s independent, pairwise commuting generators on n qubits, encoding n - s
// qubits. Construction checks both properties.
class StabilizerCode {
 public:
  StabilizerCode(std::vector<PauliVector> generators,
                 std::vector<GaloisField::Element> source_point);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t num_generators() const { return generators_.size(); }
  std::size_t num_logical() const { return num_qubits_ - generators_.size(); }
  const std::vector<PauliVector>& generators() const { return generators_; }
  const std::vector<GaloisField::Element>& source_point() const { return source_point_; }

  // Bit i = canonical_form(g_i, e).
  BitVector syndrome(const PauliVector& e) const;
  bool commutes_with_all(const PauliVector& e) const;
  // e in the GF(2) span of the generators.
  bool in_stabilizer(const PauliVector& e) const;

  const Gf2RowSpace& row_space() const { return row_space_; }

 private:
  std::size_t num_qubits_;
  std::vector<PauliVector> generators_;
  std::vector<GaloisField::Element> source_point_;
  Gf2RowSpace row_space_;
};

// Blow-up of a nonzero field vector (x_1..x_2r) into s generators on rs
// qubits: generator i carries the coordinates of b_i * x_j in qubit block j
// of the X part for j <= r and of the Z part for j > r.
StabilizerCode blow_up(std::span<const GaloisField::Element> point, const CoordinateBasis& basis);

// sum_j (e_{r+j} x_j + e_j x_{r+j}) over GF(2^s).
GaloisField::Element field_symplectic(const GaloisField& field,
                                      std::span<const GaloisField::Element> x,
                                      std::span<const GaloisField::Element> e);

// Groups the X part into coordinates 1..r and the Z part into r+1..2r, then
// swaps the halves so that encode() of the result has a zero in column j
// exactly when e commutes with the code blown up from column j.
std::vector<GaloisField::Element> pauli_to_field_vector(const PauliVector& e,
                                                        const CoordinateBasis& basis,
                                                        std::size_t r);

// Unswapped field coordinates of e (the inverse of the blow-up layout).
std::vector<GaloisField::Element> pauli_field_coordinates(const PauliVector& e,
                                                          const CoordinateBasis& basis,
                                                          std::size_t r);

// Stabilizer purity-testing code assembled from a linear code: one
// stabilizer code per generator column, with bound 1 - d/c.
class Sptc {
 public:
  Sptc(LinearCode source, CoordinateBasis basis, std::vector<StabilizerCode> codes);

  const LinearCode& source() const { return source_; }
  const CoordinateBasis& basis() const { return basis_; }
  const std::vector<StabilizerCode>& codes() const { return codes_; }
  std::size_t size() const { return codes_.size(); }
  const Rational& eps_bound() const { return eps_bound_; }
  std::size_t num_qubits() const { return n_; }      // rs
  std::size_t num_logical() const { return m_; }     // rs - s
  std::size_t num_syndrome_bits() const { return s_; }
  std::size_t half_dimension() const { return source_.half_dimension(); }

 private:
  LinearCode source_;
  CoordinateBasis basis_;
  std::vector<StabilizerCode> codes_;
  Rational eps_bound_;
  std::size_t n_, m_, s_;
};

Sptc build_sptc(const LinearCode& code);

// Strong mode counts codes whose generators all commute with e; weak mode
// additionally drops codes that contain e. Returned as count / c.
std::size_t undetected_count(const Sptc& sptc, const PauliVector& e, bool strong);
Rational undetected_fraction(const Sptc& sptc, const PauliVector& e, bool strong);

// Number of zero coordinates of encode(pauli_to_field_vector(e)).
std::size_t zero_coordinates(const Sptc& sptc, const PauliVector& e);

struct ErrorRateReport {
  Rational max_fraction;
  PauliVector witness;
  Rational bound;
  bool holds = false;
  bool exhaustive = true;
  std::uint64_t errors_checked = 0;
  std::optional<std::uint64_t> seed;  // set for sampled reports
};

inline constexpr std::uint64_t kDefaultErrorBudget = 1ull << 24;

// Exact maximum strong undetected fraction over all 4^n - 1 nonzero errors.
// The witness is the maximiser with the smallest integer encoding; results do
// not depend on the worker count. Throws a budget error when 4^n - 1 exceeds
// budget.
ErrorRateReport verify_error_rate(const Sptc& sptc, std::uint64_t budget = kDefaultErrorBudget,
                                  unsigned workers = 1);

// Maximum over `samples` uniformly drawn nonzero errors; a lower estimate of
// the exact maximum, flagged non-exhaustive.
ErrorRateReport sample_error_rate(const Sptc& sptc, std::uint64_t samples, std::uint64_t seed);

}  // namespace sptc

#endif  // SPTC_STABILIZER_HPP_
