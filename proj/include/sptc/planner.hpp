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

#ifndef SPTC_PLANNER_HPP_
#define SPTC_PLANNER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sptc/codes.hpp"
#include "sptc/rational.hpp"

namespace sptc {

// Parameters [c, 2r, d]_{2^s} of a code family, kept symbolic so that fields
// far too large to materialise (s = 35 ovoids have c = 2^70 + 1) can still
// be planned for.
struct CodeParameters {
  CodeFamily family = CodeFamily::kCustom;
  unsigned s = 0;
  unsigned r = 0;
  BigInt c;
  BigInt d;

  std::uint64_t num_qubits() const { return static_cast<std::uint64_t>(r) * s; }
  std::uint64_t num_logical() const { return num_qubits() - s; }
  Rational eps() const { return Rational(c - d, c); }
  std::string label() const;
};

inline constexpr unsigned kMaxPlanDegree = 4096;

CodeParameters ers_parameters(unsigned s, unsigned r);
CodeParameters ovoid_parameters(unsigned s);
CodeParameters parameters_of(const LinearCode& code);
// "ers" / "ovoid" (also the document tags).
CodeParameters family_parameters(const std::string& family, unsigned s, unsigned r);

struct ErrorDetectionParams {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  Rational fidelity;  // d / c
  std::uint64_t classical_bits = 0;  // ceil(log2 c) + s
};

ErrorDetectionParams error_detection_params(const CodeParameters& code);

// Tuple <N, K, M, eps_in, delta, p> with N, K, M kept as base-2 logarithms.
struct GeppParams {
  std::uint64_t log2_n = 0;
  std::uint64_t log2_k = 0;
  std::uint64_t log2_m = 0;
  Rational eps_in;
  Rational delta;  // eps / (1 - eps_in)
  Rational p;      // = eps_in
  bool dcs = false;
  std::uint64_t comm_bits = 0;
};

GeppParams gepp_cs(const CodeParameters& code, const Rational& eps_in);
GeppParams gepp_dcs(const GeppParams& cs);

struct Fig1Row {
  unsigned s = 0;
  CodeFamily family = CodeFamily::kErs;
  Rational delta_times_fidelity;  // delta * (1 - eps_in) = eps
  std::uint64_t b = 0;
};

// For s = 1..s_max: ERS with r = 2, then ovoid.
std::vector<Fig1Row> fig1_data(unsigned s_max);

struct QasPlan {
  CodeParameters code;
  std::uint64_t target_qubits = 0;
  std::uint64_t block_len = 0;  // rs - s
  std::uint64_t blocks = 0;     // floor(target / block_len)
  std::uint64_t message_qubits = 0;
  std::uint64_t aux_qubits = 0;  // s * blocks
  std::uint64_t key_bits_per_block = 0;
  std::uint64_t key_bits_total = 0;
  Rational eps;
  long double eps_total = 0;  // 1 - (1 - eps)^blocks
};

QasPlan qas_plan(const CodeParameters& code, std::uint64_t target_qubits);

// 1 - (1 - eps)^blocks without cancellation for tiny eps.
long double total_error(const Rational& eps, std::uint64_t blocks);

struct TableSpec {
  CodeParameters code;
  std::uint64_t target_qubits = 0;
  // Published message-qubit figure, when it is known to disagree with the
  // other columns of its row.
  std::optional<std::uint64_t> reference_message_qubits;
};

struct TableRow {
  QasPlan plan;
  std::string note;
};

// "table1" (~10^5 message qubits) and "table2" (~10^2).
std::vector<TableSpec> table_preset(const std::string& name);
std::vector<TableRow> table_rows(const std::vector<TableSpec>& specs);

// printf %.{sig-1}e
std::string format_significant(long double value, int significant);
std::string format_eps(const Rational& eps);          // 5 significant figures
std::string format_eps_total(long double eps_total);  // 4 significant figures

std::string table_to_csv(const std::vector<TableRow>& rows);
std::string fig1_to_csv(const std::vector<Fig1Row>& rows);

}  // namespace sptc

#endif  // SPTC_PLANNER_HPP_
