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

#include "sptc/planner.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "sptc/error.hpp"

namespace sptc {

namespace {

void check_degree(unsigned s) {
  if (s == 0 || s > kMaxPlanDegree)
    throw_invalid("field degree must be in [1, " + std::to_string(kMaxPlanDegree) + "], got " +
                  std::to_string(s));
}

// Closed-form ERS parameters without the existence condition 2r <= q; the
// GEPP comparison evaluates the formulas on the whole s range.
CodeParameters ers_formula(unsigned s, unsigned r) {
  CodeParameters p;
  p.family = CodeFamily::kErs;
  p.s = s;
  p.r = r;
  p.c = pow2(s) + 1;
  p.d = pow2(s) + 2 - 2 * BigInt(r);
  return p;
}

}  // namespace

std::string CodeParameters::label() const {
  switch (family) {
    case CodeFamily::kErs: return "ERS r=" + std::to_string(r) + " s=" + std::to_string(s);
    case CodeFamily::kOvoid: return "ovoid s=" + std::to_string(s);
    default:
      return std::string(to_string(family)) + " [" + c.str() + "," + std::to_string(2 * r) + "," +
             d.str() + "]_2^" + std::to_string(s);
  }
}

CodeParameters ers_parameters(unsigned s, unsigned r) {
  check_degree(s);
  if (r == 0 || BigInt(2 * r) > pow2(s))
    throw_invalid("ERS code needs 1 <= 2r <= 2^s (r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")");
  return ers_formula(s, r);
}

CodeParameters ovoid_parameters(unsigned s) {
  check_degree(s);
  CodeParameters p;
  p.family = CodeFamily::kOvoid;
  p.s = s;
  p.r = 2;
  p.c = pow2(2 * s) + 1;
  p.d = pow2(2 * s) - pow2(s);
  return p;
}

CodeParameters parameters_of(const LinearCode& code) {
  if (!code.distance()) throw_invalid("code has no known minimum distance");
  CodeParameters p;
  p.family = code.family();
  p.s = code.field().degree();
  p.r = static_cast<unsigned>(code.half_dimension());
  p.c = code.length();
  p.d = *code.distance();
  return p;
}

CodeParameters family_parameters(const std::string& family, unsigned s, unsigned r) {
  if (family == "ers" || family == "ERS") return ers_parameters(s, r);
  if (family == "ovoid" || family == "OVOID") return ovoid_parameters(s);
  throw_invalid("unknown code family '" + family + "' (expected ers or ovoid)");
}

ErrorDetectionParams error_detection_params(const CodeParameters& code) {
  if (code.d <= 0 || code.d > code.c) throw_invalid("code distance must lie in [1, c]");
  ErrorDetectionParams out;
  out.n = code.num_qubits();
  out.m = code.num_logical();
  out.fidelity = Rational(code.d, code.c);
  out.classical_bits = ceil_log2(code.c) + code.s;
  return out;
}

GeppParams gepp_cs(const CodeParameters& code, const Rational& eps_in) {
  if (eps_in < 0 || eps_in >= 1) throw_invalid("initial infidelity must satisfy 0 <= eps_in < 1");
  GeppParams out;
  out.log2_n = code.num_qubits();
  out.log2_k = 0;
  out.log2_m = code.num_logical();
  out.eps_in = eps_in;
  out.delta = code.eps() / (1 - eps_in);
  out.p = eps_in;
  out.dcs = false;
  out.comm_bits = ceil_log2(code.c) + code.s;
  return out;
}

GeppParams gepp_dcs(const GeppParams& cs) {
  if (cs.dcs) throw_invalid("parameters already describe a DCS protocol");
  GeppParams out = cs;
  out.log2_k += cs.comm_bits;
  out.dcs = true;
  return out;
}

std::vector<Fig1Row> fig1_data(unsigned s_max) {
  check_degree(s_max);
  std::vector<Fig1Row> rows;
  for (unsigned s = 1; s <= s_max; ++s) {
    for (const auto& code : {ers_formula(s, 2), ovoid_parameters(s)}) {
      const auto gepp = gepp_cs(code, Rational(0));
      Fig1Row row;
      row.s = s;
      row.family = code.family;
      row.delta_times_fidelity = gepp.delta * (1 - gepp.eps_in);
      row.b = gepp.comm_bits;
      rows.push_back(row);
    }
  }
  return rows;
}

long double total_error(const Rational& eps, std::uint64_t blocks) {
  const long double e = to_long_double(eps);
  if (e >= 1.0L) return blocks ? 1.0L : 0.0L;
  return -std::expm1(static_cast<long double>(blocks) * std::log1p(-e));
}

QasPlan qas_plan(const CodeParameters& code, std::uint64_t target_qubits) {
  if (code.r < 2) throw_invalid("r must be at least 2 for blocks to carry message qubits");
  QasPlan plan;
  plan.code = code;
  plan.target_qubits = target_qubits;
  plan.block_len = code.num_logical();
  if (target_qubits < plan.block_len)
    throw_invalid("target of " + std::to_string(target_qubits) + " qubits is smaller than one block of " +
                  std::to_string(plan.block_len));
  plan.blocks = target_qubits / plan.block_len;
  plan.message_qubits = plan.blocks * plan.block_len;
  plan.aux_qubits = static_cast<std::uint64_t>(code.s) * plan.blocks;
  plan.key_bits_per_block = 2 * plan.block_len + ceil_log2(code.c) + code.s;
  plan.key_bits_total = plan.blocks * plan.key_bits_per_block;
  plan.eps = code.eps();
  plan.eps_total = total_error(plan.eps, plan.blocks);
  return plan;
}

std::vector<TableSpec> table_preset(const std::string& name) {
  std::vector<TableSpec> specs;
  if (name == "table1") {
    for (unsigned s : {15u, 25u, 35u}) {
      specs.push_back({ovoid_parameters(s), 100000, std::nullopt});
      for (unsigned r : {2u, 4u, 11u}) specs.push_back({ers_parameters(s, r), 100000, std::nullopt});
    }
    // Listed as 99 990 although B = 666 blocks of 150 give 99 900.
    specs[3].reference_message_qubits = 99990;
  } else if (name == "table2") {
    for (unsigned s : {10u, 15u, 30u}) {
      specs.push_back({ovoid_parameters(s), 100, std::nullopt});
      for (unsigned r : {2u, 4u}) specs.push_back({ers_parameters(s, r), 100, std::nullopt});
    }
  } else {
    throw_invalid("unknown table preset '" + name + "' (expected table1 or table2)");
  }
  return specs;
}

std::vector<TableRow> table_rows(const std::vector<TableSpec>& specs) {
  std::vector<TableRow> rows;
  for (const auto& spec : specs) {
    TableRow row;
    row.plan = qas_plan(spec.code, spec.target_qubits);
    if (spec.reference_message_qubits && *spec.reference_message_qubits != row.plan.message_qubits) {
      std::ostringstream note;
      note << "reference lists " << *spec.reference_message_qubits
           << " message qubits; inconsistent with its auxiliary and key columns which imply B="
           << row.plan.blocks << " blocks of " << row.plan.block_len << " = " << row.plan.message_qubits;
      row.note = note.str();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_significant(long double value, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Le", significant - 1, value);
  return buf;
}

std::string format_eps(const Rational& eps) { return format_significant(to_long_double(eps), 5); }
std::string format_eps_total(long double eps_total) { return format_significant(eps_total, 4); }

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "code,message_qubits,auxiliary_qubits,secret_key_bits,block_length,eps,eps_total,note\n";
  for (const auto& row : rows) {
    const auto& p = row.plan;
    os << p.code.label() << ',' << p.message_qubits << ',' << p.aux_qubits << ',' << p.key_bits_total << ','
       << p.block_len << ',' << format_eps(p.eps) << ',' << format_eps_total(p.eps_total) << ','
       << row.note << '\n';
  }
  return os.str();
}

std::string fig1_to_csv(const std::vector<Fig1Row>& rows) {
  std::ostringstream os;
  os << "s,family,delta_times_one_minus_eps_in,delta_times_one_minus_eps_in_float,b\n";
  for (const auto& row : rows) {
    os << row.s << ',' << (row.family == CodeFamily::kErs ? "ERS(r=2)" : "OVOID") << ','
       << to_string(row.delta_times_fidelity) << ','
       << format_significant(to_long_double(row.delta_times_fidelity), 10) << ',' << row.b << '\n';
  }
  return os.str();
}

}  // namespace sptc
