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

#include "sptc/error.hpp"

namespace sptc {

StabilizerCode::StabilizerCode(std::vector<PauliVector> generators,
                               std::vector<GaloisField::Element> source_point)
    : num_qubits_(generators.empty() ? 0 : generators.front().num_qubits()),
      generators_(std::move(generators)),
      source_point_(std::move(source_point)),
      row_space_(2 * num_qubits_) {
  if (generators_.empty()) throw_invariant("stabilizer code without generators");
  for (const auto& g : generators_) {
    if (g.num_qubits() != num_qubits_) throw_invariant("generators act on different qubit counts");
    if (!row_space_.insert(g.symplectic()))
      throw_invariant("stabilizer generators are linearly dependent");
  }
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (canonical_form(generators_[i], generators_[j]) != 0)
        throw_invariant("stabilizer generators " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1) + " anticommute");
}

BitVector StabilizerCode::syndrome(const PauliVector& e) const {
  if (e.num_qubits() != num_qubits_)
    throw_invalid("error acts on " + std::to_string(e.num_qubits()) + " qubits, code on " +
                  std::to_string(num_qubits_));
  BitVector out(generators_.size());
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (canonical_form(generators_[i], e)) out.set(i);
  return out;
}

bool StabilizerCode::commutes_with_all(const PauliVector& e) const { return !syndrome(e).any(); }

bool StabilizerCode::in_stabilizer(const PauliVector& e) const {
  if (e.num_qubits() != num_qubits_) throw_invalid("error/code qubit count mismatch");
  return row_space_.contains(e.symplectic());
}

namespace {

void check_point(std::span<const GaloisField::Element> point, const GaloisField& field) {
  if (point.empty() || point.size() % 2 != 0)
    throw_invalid("point must have even, nonzero length");
  bool nonzero = false;
  for (auto v : point) {
    if (!field.contains(v)) throw_invalid("point coordinate outside the field");
    nonzero = nonzero || v != 0;
  }
  if (!nonzero) throw_invalid("cannot blow up the zero vector");
}

}  // namespace

StabilizerCode blow_up(std::span<const GaloisField::Element> point, const CoordinateBasis& basis) {
  const auto& field = basis.field();
  check_point(point, field);
  const std::size_t s = field.degree();
  const std::size_t r = point.size() / 2;
  const std::size_t n = r * s;
  std::vector<PauliVector> gens;
  gens.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    PauliVector g(n);
    for (std::size_t j = 0; j < 2 * r; ++j) {
      const std::uint64_t coords = basis.to_coords(field.mul(basis.elements()[i], point[j]));
      BitVector& part = j < r ? g.x() : g.z();
      const std::size_t block = (j % r) * s;
      for (std::size_t t = 0; t < s; ++t)
        if ((coords >> t) & 1u) part.set(block + t);
    }
    gens.push_back(std::move(g));
  }
  return StabilizerCode(std::move(gens), {point.begin(), point.end()});
}

GaloisField::Element field_symplectic(const GaloisField& field,
                                      std::span<const GaloisField::Element> x,
                                      std::span<const GaloisField::Element> e) {
  if (x.size() != e.size() || x.size() % 2 != 0)
    throw_invalid("field_symplectic: vectors must have equal, even length");
  const std::size_t r = x.size() / 2;
  GaloisField::Element acc = 0;
  for (std::size_t j = 0; j < r; ++j) acc ^= field.mul(e[r + j], x[j]) ^ field.mul(e[j], x[r + j]);
  return acc;
}

std::vector<GaloisField::Element> pauli_field_coordinates(const PauliVector& e,
                                                          const CoordinateBasis& basis,
                                                          std::size_t r) {
  const std::size_t s = basis.field().degree();
  if (r == 0 || e.num_qubits() != r * s)
    throw_invalid("error on " + std::to_string(e.num_qubits()) + " qubits does not split into " +
                  std::to_string(r) + " blocks of " + std::to_string(s));
  std::vector<GaloisField::Element> out(2 * r);
  for (std::size_t j = 0; j < 2 * r; ++j) {
    const BitVector& part = j < r ? e.x() : e.z();
    const std::size_t block = (j % r) * s;
    std::uint64_t coords = 0;
    for (std::size_t t = 0; t < s; ++t)
      if (part.test(block + t)) coords |= 1ull << t;
    out[j] = basis.from_coords(coords);
  }
  return out;
}

std::vector<GaloisField::Element> pauli_to_field_vector(const PauliVector& e,
                                                        const CoordinateBasis& basis,
                                                        std::size_t r) {
  auto coords = pauli_field_coordinates(e, basis, r);
  std::vector<GaloisField::Element> out(2 * r);
  for (std::size_t j = 0; j < r; ++j) {
    out[j] = coords[r + j];
    out[r + j] = coords[j];
  }
  return out;
}

// ---------------------------------------------------------------------------

Sptc::Sptc(LinearCode source, CoordinateBasis basis, std::vector<StabilizerCode> codes)
    : source_(std::move(source)), basis_(std::move(basis)), codes_(std::move(codes)) {
  if (!source_.distance()) throw_invalid("SPTC needs a code with known minimum distance");
  if (!same_field(basis_.field(), source_.field())) throw_invalid("basis and code fields differ");
  if (codes_.size() != source_.length())
    throw_invariant("SPTC must hold one stabilizer code per code column");
  s_ = source_.field().degree();
  n_ = source_.half_dimension() * s_;
  m_ = n_ - s_;
  for (const auto& q : codes_)
    if (q.num_qubits() != n_ || q.num_generators() != s_)
      throw_invariant("stabilizer code shape does not match the SPTC");
  const auto c = static_cast<long long>(source_.length());
  const auto d = static_cast<long long>(*source_.distance());
  eps_bound_ = Rational(c - d, c);
}

Sptc build_sptc(const LinearCode& code) {
  if (!code.distance()) throw_invalid("build_sptc: code has no known minimum distance");
  auto basis = CoordinateBasis::for_symplectic(code.field_ptr());
  std::vector<StabilizerCode> codes;
  codes.reserve(code.length());
  for (std::size_t j = 0; j < code.length(); ++j) {
    const auto point = code.column(j);
    codes.push_back(blow_up(point, basis));
  }
  return Sptc(code, std::move(basis), std::move(codes));
}

std::size_t undetected_count(const Sptc& sptc, const PauliVector& e, bool strong) {
  if (e.num_qubits() != sptc.num_qubits())
    throw_invalid("error acts on " + std::to_string(e.num_qubits()) + " qubits, SPTC on " +
                  std::to_string(sptc.num_qubits()));
  std::size_t count = 0;
  for (const auto& q : sptc.codes()) {
    if (!q.commutes_with_all(e)) continue;
    if (!strong && q.in_stabilizer(e)) continue;
    ++count;
  }
  return count;
}

std::size_t zero_coordinates(const Sptc& sptc, const PauliVector& e) {
  const auto message = pauli_to_field_vector(e, sptc.basis(), sptc.half_dimension());
  const auto word = encode(message, sptc.source());
  return word.size() - hamming_weight(word);
}

Rational undetected_fraction(const Sptc& sptc, const PauliVector& e, bool strong) {
  if (e.is_identity()) throw_invalid("undetected_fraction: error must be nonzero");
  const std::size_t count = undetected_count(sptc, e, strong);
  if (strong && count != zero_coordinates(sptc, e))
    throw_invariant("commutation count disagrees with the codeword route");
  return Rational(static_cast<long long>(count), static_cast<long long>(sptc.size()));
}

}  // namespace sptc
