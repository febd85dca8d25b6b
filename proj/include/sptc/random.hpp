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

#ifndef SPTC_RANDOM_HPP_
#define SPTC_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace sptc {

// Seeded generator shared by every randomized routine. mt19937_64 output is
// fixed by the standard; the range reduction below is ours so draws are
// identical across standard libraries.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound) by rejection. bound must be nonzero.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Independent stream seed for (seed, stream) pairs, e.g. Monte-Carlo batches.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace sptc

#endif  // SPTC_RANDOM_HPP_
