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

#include <algorithm>
#include <bit>
#include <thread>

#include "sptc/error.hpp"
#include "sptc/random.hpp"
#include "sptc/stabilizer.hpp"

namespace sptc {

namespace {

struct RangeBest {
  std::size_t count = 0;
  std::uint64_t index = 0;
};

// Generators packed as (z | x << n), so that the parity of (packed & index)
// is the canonical form with the error whose index is (x | z << n).
std::vector<std::uint64_t> pack_generators(const Sptc& sptc) {
  const std::size_t n = sptc.num_qubits();
  std::vector<std::uint64_t> packed;
  packed.reserve(sptc.size() * sptc.num_syndrome_bits());
  for (const auto& q : sptc.codes())
    for (const auto& g : q.generators()) packed.push_back(g.z().to_word() | (g.x().to_word() << n));
  return packed;
}

RangeBest scan_range(const std::vector<std::uint64_t>& packed, std::size_t gens_per_code,
                     std::uint64_t lo, std::uint64_t hi) {
  RangeBest best;
  const std::size_t codes = packed.size() / gens_per_code;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    std::size_t count = 0;
    for (std::size_t k = 0; k < codes; ++k) {
      const std::uint64_t* g = packed.data() + k * gens_per_code;
      bool commutes = true;
      for (std::size_t i = 0; i < gens_per_code && commutes; ++i)
        commutes = (std::popcount(g[i] & idx) & 1) == 0;
      count += commutes ? 1 : 0;
    }
    if (count > best.count || best.index == 0) {
      best.count = count;
      best.index = idx;
    }
  }
  return best;
}

}  // namespace

ErrorRateReport verify_error_rate(const Sptc& sptc, std::uint64_t budget, unsigned workers) {
  const std::size_t n = sptc.num_qubits();
  if (n > 31 || ((1ull << (2 * n)) - 1) > budget)
    throw_budget("exhaustive verification needs 4^" + std::to_string(n) +
                 " - 1 error vectors, budget is " + std::to_string(budget));
  const std::uint64_t end = 1ull << (2 * n);
  const auto packed = pack_generators(sptc);
  const std::size_t per_code = sptc.num_syndrome_bits();

  workers = std::max(1u, std::min<unsigned>(workers, 256));
  const std::uint64_t total = end - 1;
  if (total < workers) workers = 1;
  std::vector<RangeBest> partial(workers);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = total / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = 1 + w * chunk;
      const std::uint64_t hi = w + 1 == workers ? end : lo + chunk;
      pool.emplace_back([&, w, lo, hi] { partial[w] = scan_range(packed, per_code, lo, hi); });
    }
  }
  // Ranges are ascending, so the first strict maximum has the smallest index.
  RangeBest best = partial.front();
  for (const auto& p : partial)
    if (p.count > best.count) best = p;

  ErrorRateReport report;
  report.witness = PauliVector::from_index(n, best.index);
  report.max_fraction = Rational(static_cast<long long>(best.count), static_cast<long long>(sptc.size()));
  report.bound = sptc.eps_bound();
  report.holds = report.max_fraction <= report.bound;
  report.exhaustive = true;
  report.errors_checked = total;
  return report;
}

ErrorRateReport sample_error_rate(const Sptc& sptc, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw_invalid("sampled verification needs at least one sample");
  const std::size_t n = sptc.num_qubits();
  Rng rng(seed);
  std::size_t best_count = 0;
  PauliVector best_error;
  for (std::uint64_t i = 0; i < samples; ++i) {
    PauliVector e(n);
    do {
      for (std::size_t q = 0; q < n; ++q) {
        const auto letter = uniform_below(rng, 4);
        e.x().set(q, letter & 1u);
        e.z().set(q, letter & 2u);
      }
    } while (e.is_identity());
    const std::size_t count = undetected_count(sptc, e, true);
    if (best_error.num_qubits() == 0 || count > best_count) {
      best_count = count;
      best_error = e;
    }
  }
  ErrorRateReport report;
  report.witness = best_error;
  report.max_fraction = Rational(static_cast<long long>(best_count), static_cast<long long>(sptc.size()));
  report.bound = sptc.eps_bound();
  report.holds = report.max_fraction <= report.bound;
  report.exhaustive = false;
  report.errors_checked = samples;
  report.seed = seed;
  return report;
}

}  // namespace sptc
