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

#ifndef SPTC_DOCUMENTS_HPP_
#define SPTC_DOCUMENTS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sptc/codes.hpp"
#include "sptc/field.hpp"
#include "sptc/planner.hpp"
#include "sptc/protocol.hpp"
#include "sptc/stabilizer.hpp"

// JSON documents and reports. Field elements are little-endian bit integers
// (bit i = coefficient of x^i); Pauli parts are big-endian hex with qubit 1
// as the most significant bit.
namespace sptc {

using Json = nlohmann::ordered_json;

// {"s": s, "prim_poly": integer including the x^s bit}; s <= 63.
Json field_to_json(const GaloisField& field);
FieldPtr field_from_json(const Json& doc);

// {field, c, k, d?, family_tag, G: rows of element integers}.
Json code_to_json(const LinearCode& code);
LinearCode code_from_json(const Json& doc);

// {code, n, m, s, eps_bound: "num/den", basis, codes: [{source_point, gens}]}.
// Loading rebuilds the SPTC from the embedded code and rejects documents
// whose generators disagree with the rebuild.
Json sptc_to_json(const Sptc& sptc);
Sptc sptc_from_json(const Json& doc);

// Parses text; malformed JSON is reported as a parse error.
Json parse_document(const std::string& text);

// Elements in generator order with their companion matrices.
Json field_table_json(const GaloisField& field);

// Short identification of an SPTC embedded in every simulation report.
Json sptc_reference(const Sptc& sptc);

Json error_rate_report_json(const Sptc& sptc, const ErrorRateReport& report);

Json ptp_exact_json(const Sptc& sptc, const std::vector<PauliVector>& errors);
Json ptp_monte_carlo_json(const Sptc& sptc, const std::vector<PauliVector>& errors,
                          std::uint64_t trials, std::uint64_t seed, unsigned workers);

Json qas_simulation_json(const Sptc& sptc, const PauliVector& error, std::uint64_t seed,
                         std::uint64_t sessions);

Json error_detection_json(const CodeParameters& code, const ErrorDetectionParams& params);
Json gepp_json(const CodeParameters& code, const GeppParams& params);
Json qas_plan_json(const QasPlan& plan);
std::string qas_plan_csv(const QasPlan& plan);
Json table_json(const std::string& preset, const std::vector<TableRow>& rows);
Json fig1_json(const std::vector<Fig1Row>& rows);

// Scope statement attached to every protocol report.
extern const char* const kPauliScope;

}  // namespace sptc

#endif  // SPTC_DOCUMENTS_HPP_
