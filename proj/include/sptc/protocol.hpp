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

#ifndef SPTC_PROTOCOL_HPP_
#define SPTC_PROTOCOL_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sptc/pauli.hpp"
#include "sptc/random.hpp"
#include "sptc/rational.hpp"
#include "sptc/stabilizer.hpp"

namespace sptc {

// Purity test at the Pauli level: Alice and Bob share n EPR pairs, an
// adversary applies e to Bob's halves, both measure the syndrome of a
// randomly chosen Q_k. The difference of their syndromes is ptp_syndrome.
struct PtpOutcome {
  bool accepted = false;
  // Accepted, yet e acts nontrivially on the encoded pairs.
  bool corrupted = false;
  std::size_t chosen_code = 0;
  BitVector syndrome;
};

BitVector ptp_syndrome(const StabilizerCode& code, const PauliVector& e);

PtpOutcome ptp_evaluate(const Sptc& sptc, const PauliVector& e, std::size_t code_index);

// Draws k uniformly from a generator seeded with `seed`.
PtpOutcome ptp_run(const Sptc& sptc, const PauliVector& e, std::uint64_t seed);

// Pr_k[accept and corrupted]: the weak undetected fraction.
Rational ptp_soundness_exact(const Sptc& sptc, const PauliVector& e);

struct MonteCarloSummary {
  std::uint64_t trials = 0;
  std::uint64_t accepted = 0;
  std::uint64_t corrupted = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kMonteCarloBatch = 1ull << 14;

// Trials run in batches of kMonteCarloBatch, batch b drawing from
// derive_seed(seed, b); totals do not depend on the worker count.
MonteCarloSummary ptp_monte_carlo(const Sptc& sptc, const PauliVector& e, std::uint64_t trials,
                                  std::uint64_t seed, unsigned workers = 1);

// Shared secret of one authenticated block: 2m pad bits, the code index and
// the s-bit target syndrome.
struct QasKeys {
  BitVector pad;
  std::size_t code_index = 0;
  BitVector syndrome;
};

struct QasSession {
  QasKeys keys;
  PauliVector adversary;
  BitVector measured_syndrome;
  bool accepted = false;
  bool message_altered = false;
};

// l = 2m + ceil(log2 c) + s.
std::size_t qas_key_length(const Sptc& sptc);

// Per-code symplectic frames for the authentication protocol: a destabilizer
// for each syndrome bit and 2m centralizer elements independent modulo the
// stabilizer, which carry the one-time pad on the encoded block.
class QasContext {
 public:
  // `sptc` must outlive the context.
  explicit QasContext(const Sptc& sptc);

  const Sptc& sptc() const { return *sptc_; }
  // Pauli with syndrome y on code k.
  PauliVector syndrome_offset(std::size_t k, const BitVector& y) const;
  // Encoded pad displacement on code k.
  PauliVector pad_displacement(std::size_t k, const BitVector& pad) const;

  const std::vector<PauliVector>& destabilizers(std::size_t k) const { return frames_[k].destabilizers; }
  const std::vector<PauliVector>& pad_basis(std::size_t k) const { return frames_[k].pad_basis; }

 private:
  struct Frame {
    std::vector<PauliVector> destabilizers;
    std::vector<PauliVector> pad_basis;
  };
  const Sptc* sptc_;
  std::vector<Frame> frames_;
};

// One run of the authentication protocol: Alice's frame is the pad
// displacement times the syndrome offset for y; Bob measures y' on the frame
// times e, accepts iff y' = y, and the message is altered iff he accepts
// while the residual e lies outside the stabilizer.
QasSession qas_run(const QasContext& context, const QasKeys& keys, const PauliVector& e,
                   std::size_t message_qubits);

QasKeys random_qas_keys(const Sptc& sptc, Rng& rng);

// Pr_k[accept and altered].
Rational qas_forgery_probability(const QasContext& context, const PauliVector& e);

}  // namespace sptc

#endif  // SPTC_PROTOCOL_HPP_
