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

#include "sptc/protocol.hpp"

#include <algorithm>
#include <thread>

#include "sptc/error.hpp"

namespace sptc {

BitVector ptp_syndrome(const StabilizerCode& code, const PauliVector& e) { return code.syndrome(e); }

PtpOutcome ptp_evaluate(const Sptc& sptc, const PauliVector& e, std::size_t code_index) {
  if (code_index >= sptc.size()) throw_invalid("code index out of range");
  const auto& q = sptc.codes()[code_index];
  PtpOutcome out;
  out.chosen_code = code_index;
  out.syndrome = ptp_syndrome(q, e);
  out.accepted = !out.syndrome.any();
  out.corrupted = out.accepted && !q.in_stabilizer(e);
  return out;
}

PtpOutcome ptp_run(const Sptc& sptc, const PauliVector& e, std::uint64_t seed) {
  if (e.num_qubits() != sptc.num_qubits()) throw_invalid("error/SPTC qubit count mismatch");
  Rng rng(seed);
  return ptp_evaluate(sptc, e, uniform_below(rng, sptc.size()));
}

Rational ptp_soundness_exact(const Sptc& sptc, const PauliVector& e) {
  if (e.is_identity()) throw_invalid("soundness is defined for nonzero errors");
  return undetected_fraction(sptc, e, false);
}

MonteCarloSummary ptp_monte_carlo(const Sptc& sptc, const PauliVector& e, std::uint64_t trials,
                                  std::uint64_t seed, unsigned workers) {
  if (e.num_qubits() != sptc.num_qubits()) throw_invalid("error/SPTC qubit count mismatch");
  // The outcome depends on the drawn index only; tabulate it once.
  std::vector<PtpOutcome> table;
  table.reserve(sptc.size());
  for (std::size_t k = 0; k < sptc.size(); ++k) table.push_back(ptp_evaluate(sptc, e, k));

  const std::uint64_t batches = (trials + kMonteCarloBatch - 1) / kMonteCarloBatch;
  workers = std::max(1u, std::min<unsigned>(workers, 256));
  std::vector<MonteCarloSummary> partial(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = w; b < batches; b += workers) {
          Rng rng(derive_seed(seed, b));
          const std::uint64_t count = std::min(kMonteCarloBatch, trials - b * kMonteCarloBatch);
          for (std::uint64_t t = 0; t < count; ++t) {
            const auto& outcome = table[uniform_below(rng, table.size())];
            partial[w].accepted += outcome.accepted ? 1 : 0;
            partial[w].corrupted += outcome.corrupted ? 1 : 0;
          }
        }
      });
    }
  }
  MonteCarloSummary out;
  out.trials = trials;
  out.seed = seed;
  for (const auto& p : partial) {
    out.accepted += p.accepted;
    out.corrupted += p.corrupted;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t qas_key_length(const Sptc& sptc) {
  return 2 * sptc.num_logical() + ceil_log2(BigInt(sptc.size())) + sptc.num_syndrome_bits();
}

namespace {

PauliVector from_symplectic(const BitVector& v, std::size_t n) {
  PauliVector p(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.x().set(i, v.test(i));
    p.z().set(i, v.test(n + i));
  }
  return p;
}

}  // namespace

QasContext::QasContext(const Sptc& sptc) : sptc_(&sptc) {
  const std::size_t n = sptc.num_qubits();
  const std::size_t s = sptc.num_syndrome_bits();
  frames_.reserve(sptc.size());
  for (const auto& q : sptc.codes()) {
    // Row j of `rows` is (g_j.z | g_j.x), so rows[j] . (x | z) is the
    // canonical form of g_j with the Pauli (x | z). Reduce while tracking
    // the combination of original rows behind each reduced row.
    std::vector<BitVector> rows;
    std::vector<BitVector> combo;
    for (std::size_t j = 0; j < s; ++j) {
      const auto& g = q.generators()[j];
      rows.push_back(BitVector::concat(g.z(), g.x()));
      BitVector c(s);
      c.set(j);
      combo.push_back(std::move(c));
    }
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * n && rank < s; ++col) {
      std::size_t p = rank;
      while (p < s && !rows[p].test(col)) ++p;
      if (p == s) continue;
      std::swap(rows[p], rows[rank]);
      std::swap(combo[p], combo[rank]);
      for (std::size_t r = 0; r < s; ++r) {
        if (r != rank && rows[r].test(col)) {
          rows[r] ^= rows[rank];
          combo[r] ^= combo[rank];
        }
      }
      pivots.push_back(col);
      ++rank;
    }
    if (rank != s) throw_invariant("stabilizer generators are dependent");

    Frame frame;
    // rows = T * original, so original_j . v_t = delta_jt for
    // v_t = sum_i T_it e_{pivot_i}.
    for (std::size_t t = 0; t < s; ++t) {
      BitVector v(2 * n);
      for (std::size_t i = 0; i < s; ++i)
        if (combo[i].test(t)) v.flip(pivots[i]);
      frame.destabilizers.push_back(from_symplectic(v, n));
    }

    // Null space of the form = centralizer; keep the elements independent
    // modulo the stabilizer.
    Gf2RowSpace quotient = q.row_space();
    std::vector<bool> is_pivot(2 * n, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < 2 * n; ++f) {
      if (is_pivot[f]) continue;
      BitVector v(2 * n);
      v.set(f);
      for (std::size_t i = 0; i < s; ++i)
        if (rows[i].test(f)) v.set(pivots[i]);
      if (quotient.insert(v)) frame.pad_basis.push_back(from_symplectic(v, n));
    }
    if (frame.pad_basis.size() != 2 * sptc.num_logical())
      throw_invariant("centralizer quotient has unexpected dimension");
    frames_.push_back(std::move(frame));
  }
}

PauliVector QasContext::syndrome_offset(std::size_t k, const BitVector& y) const {
  const auto& d = frames_.at(k).destabilizers;
  if (y.size() != d.size()) throw_invalid("syndrome key has the wrong length");
  PauliVector out(sptc_->num_qubits());
  for (std::size_t t = 0; t < d.size(); ++t)
    if (y.test(t)) out *= d[t];
  return out;
}

PauliVector QasContext::pad_displacement(std::size_t k, const BitVector& pad) const {
  const auto& basis = frames_.at(k).pad_basis;
  if (pad.size() != basis.size()) throw_invalid("pad key has the wrong length");
  PauliVector out(sptc_->num_qubits());
  for (std::size_t t = 0; t < basis.size(); ++t)
    if (pad.test(t)) out *= basis[t];
  return out;
}

QasSession qas_run(const QasContext& context, const QasKeys& keys, const PauliVector& e,
                   std::size_t message_qubits) {
  const Sptc& sptc = context.sptc();
  if (message_qubits != sptc.num_logical())
    throw_invalid("message has " + std::to_string(message_qubits) + " qubits, blocks carry " +
                  std::to_string(sptc.num_logical()));
  if (keys.pad.size() != 2 * sptc.num_logical()) throw_invalid("pad key must have 2m bits");
  if (keys.syndrome.size() != sptc.num_syndrome_bits()) throw_invalid("syndrome key must have s bits");
  if (keys.code_index >= sptc.size()) throw_invalid("code index key out of range");
  if (e.num_qubits() != sptc.num_qubits()) throw_invalid("error/SPTC qubit count mismatch");

  const auto& code = sptc.codes()[keys.code_index];
  const PauliVector sent =
      context.pad_displacement(keys.code_index, keys.pad) * context.syndrome_offset(keys.code_index, keys.syndrome);
  const PauliVector received = sent * e;

  QasSession session;
  session.keys = keys;
  session.adversary = e;
  session.measured_syndrome = code.syndrome(received);
  session.accepted = session.measured_syndrome == keys.syndrome;
  // Bob removes the frame he expects; what remains is the adversary's action.
  const PauliVector residual = received * sent;
  session.message_altered = session.accepted && !code.in_stabilizer(residual);
  return session;
}

QasKeys random_qas_keys(const Sptc& sptc, Rng& rng) {
  QasKeys keys;
  keys.pad = BitVector(2 * sptc.num_logical());
  for (std::size_t i = 0; i < keys.pad.size(); ++i) keys.pad.set(i, uniform_below(rng, 2));
  keys.code_index = uniform_below(rng, sptc.size());
  keys.syndrome = BitVector(sptc.num_syndrome_bits());
  for (std::size_t i = 0; i < keys.syndrome.size(); ++i) keys.syndrome.set(i, uniform_below(rng, 2));
  return keys;
}

Rational qas_forgery_probability(const QasContext& context, const PauliVector& e) {
  if (e.is_identity()) throw_invalid("forgery probability is defined for nonzero errors");
  const Sptc& sptc = context.sptc();
  QasKeys keys;
  keys.pad = BitVector(2 * sptc.num_logical());
  keys.syndrome = BitVector(sptc.num_syndrome_bits());
  long long forged = 0;
  for (std::size_t k = 0; k < sptc.size(); ++k) {
    keys.code_index = k;
    const auto session = qas_run(context, keys, e, sptc.num_logical());
    forged += session.accepted && session.message_altered ? 1 : 0;
  }
  return Rational(forged, static_cast<long long>(sptc.size()));
}

}  // namespace sptc
