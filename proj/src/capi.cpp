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

#include "sptc/sptc.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "sptc/codes.hpp"
#include "sptc/documents.hpp"
#include "sptc/error.hpp"
#include "sptc/field.hpp"
#include "sptc/planner.hpp"
#include "sptc/protocol.hpp"
#include "sptc/stabilizer.hpp"

struct sptc_code {
  sptc::LinearCode code;
};

struct sptc_family {
  sptc::Sptc sptc;
};

namespace {

thread_local std::string g_last_error;

sptc_status status_of(sptc::ErrorKind kind) {
  switch (kind) {
    case sptc::ErrorKind::kInvalidArgument: return SPTC_ERR_INVALID_ARGUMENT;
    case sptc::ErrorKind::kParse: return SPTC_ERR_PARSE;
    case sptc::ErrorKind::kInvariant: return SPTC_ERR_INVARIANT;
    case sptc::ErrorKind::kBudget: return SPTC_ERR_BUDGET;
  }
  return SPTC_ERR_INTERNAL;
}

template <typename F>
sptc_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return SPTC_OK;
  } catch (const sptc::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SPTC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SPTC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SPTC_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) { *out = dup_string(s); }

void put_json(char** out, const sptc::Json& doc) { put(out, doc.dump(2) + "\n"); }

template <typename T>
void require(const T* p, const char* name) {
  if (p == nullptr) sptc::throw_invalid(std::string(name) + " must not be null");
}

}  // namespace

extern "C" {

const char* sptc_version(void) { return "0.1.0"; }

const char* sptc_last_error(void) { return g_last_error.c_str(); }

const char* sptc_status_name(sptc_status status) {
  switch (status) {
    case SPTC_OK: return "ok";
    case SPTC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SPTC_ERR_PARSE: return "parse error";
    case SPTC_ERR_INVARIANT: return "invariant violated";
    case SPTC_ERR_BUDGET: return "budget exceeded";
    case SPTC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sptc_string_free(char* str) { delete[] str; }

sptc_status sptc_field_show(unsigned s, char** out_json) {
  return guard([&] {
    require(out_json, "out_json");
    put_json(out_json, sptc::field_table_json(*sptc::GaloisField::make(s)));
  });
}

sptc_status sptc_code_build(const char* family, unsigned s, unsigned r, sptc_code_t** out) {
  return guard([&] {
    require(family, "family");
    require(out, "out");
    const std::string name = family;
    if (name == "appendix-c") {
      *out = new sptc_code{sptc::single_parity_check_code()};
    } else if (name == "ers") {
      *out = new sptc_code{sptc::ers_code(sptc::GaloisField::make(s), r)};
    } else if (name == "ovoid") {
      *out = new sptc_code{sptc::ovoid_code(sptc::GaloisField::make(s))};
    } else {
      sptc::throw_invalid("unknown code family '" + name + "' (expected ers, ovoid or appendix-c)");
    }
  });
}

sptc_status sptc_code_load(const char* json, sptc_code_t** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = new sptc_code{sptc::code_from_json(sptc::parse_document(json))};
  });
}

sptc_status sptc_code_to_json(const sptc_code_t* code, char** out_json) {
  return guard([&] {
    require(code, "code");
    require(out_json, "out_json");
    put_json(out_json, sptc::code_to_json(code->code));
  });
}

sptc_status sptc_code_mindist(const sptc_code_t* code, uint64_t budget, char** out_json, int* consistent) {
  return guard([&] {
    require(code, "code");
    require(out_json, "out_json");
    const auto& c = code->code;
    const std::uint64_t d = sptc::min_distance(c, budget);
    const std::uint64_t singleton = c.length() - c.dimension() + 1;
    const bool agrees = !c.distance() || *c.distance() == d;
    sptc::Json doc{{"family_tag", sptc::to_string(c.family())},
                   {"s", c.field().degree()},
                   {"c", c.length()},
                   {"k", c.dimension()},
                   {"d", d},
                   {"singleton_bound", singleton},
                   {"mds", d == singleton}};
    if (c.distance()) doc["declared_d"] = *c.distance();
    doc["consistent"] = agrees;
    put_json(out_json, doc);
    if (consistent) *consistent = agrees ? 1 : 0;
  });
}

void sptc_code_free(sptc_code_t* code) { delete code; }

sptc_status sptc_family_build(const sptc_code_t* code, sptc_family_t** out) {
  return guard([&] {
    require(code, "code");
    require(out, "out");
    *out = new sptc_family{sptc::build_sptc(code->code)};
  });
}

sptc_status sptc_family_load(const char* json, sptc_family_t** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = new sptc_family{sptc::sptc_from_json(sptc::parse_document(json))};
  });
}

sptc_status sptc_family_to_json(const sptc_family_t* family, char** out_json) {
  return guard([&] {
    require(family, "family");
    require(out_json, "out_json");
    put_json(out_json, sptc::sptc_to_json(family->sptc));
  });
}

size_t sptc_family_num_qubits(const sptc_family_t* family) {
  return family ? family->sptc.num_qubits() : 0;
}

size_t sptc_family_size(const sptc_family_t* family) { return family ? family->sptc.size() : 0; }

sptc_status sptc_family_verify(const sptc_family_t* family, int exhaustive, uint64_t budget,
                               uint64_t samples, uint64_t seed, unsigned workers, char** out_json,
                               int* holds) {
  return guard([&] {
    require(family, "family");
    require(out_json, "out_json");
    const auto report = exhaustive ? sptc::verify_error_rate(family->sptc, budget, workers)
                                   : sptc::sample_error_rate(family->sptc, samples, seed);
    put_json(out_json, sptc::error_rate_report_json(family->sptc, report));
    if (holds) *holds = report.holds ? 1 : 0;
  });
}

void sptc_family_free(sptc_family_t* family) { delete family; }

sptc_status sptc_pauli_normalize(const char* text, size_t num_qubits, char** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    put(out, sptc::parse_pauli(text, num_qubits).to_hex());
  });
}

sptc_status sptc_ptp_simulate(const sptc_family_t* family, const char* const* errors, size_t num_errors,
                              int exact, uint64_t trials, uint64_t seed, unsigned workers,
                              char** out_json, int* holds) {
  return guard([&] {
    require(family, "family");
    require(out_json, "out_json");
    if (num_errors == 0) sptc::throw_invalid("at least one error is required");
    require(errors, "errors");
    std::vector<sptc::PauliVector> parsed;
    for (size_t i = 0; i < num_errors; ++i) {
      require(errors[i], "error");
      parsed.push_back(sptc::parse_pauli(errors[i], family->sptc.num_qubits()));
    }
    const auto doc = exact ? sptc::ptp_exact_json(family->sptc, parsed)
                           : sptc::ptp_monte_carlo_json(family->sptc, parsed, trials, seed, workers);
    put_json(out_json, doc);
    if (holds) *holds = doc.at("holds").get<bool>() ? 1 : 0;
  });
}

sptc_status sptc_qas_simulate(const sptc_family_t* family, const char* error, uint64_t seed,
                              uint64_t sessions, char** out_json, int* holds) {
  return guard([&] {
    require(family, "family");
    require(error, "error");
    require(out_json, "out_json");
    const auto e = sptc::parse_pauli(error, family->sptc.num_qubits());
    const auto doc = sptc::qas_simulation_json(family->sptc, e, seed, sessions);
    put_json(out_json, doc);
    if (holds) *holds = doc.at("holds").get<bool>() ? 1 : 0;
  });
}

sptc_status sptc_qas_plan(const char* family, unsigned s, unsigned r, uint64_t qubits, sptc_format format,
                          char** out) {
  return guard([&] {
    require(family, "family");
    require(out, "out");
    const auto plan = sptc::qas_plan(sptc::family_parameters(family, s, r), qubits);
    if (format == SPTC_FORMAT_CSV) {
      put(out, sptc::qas_plan_csv(plan));
    } else {
      put_json(out, sptc::qas_plan_json(plan));
    }
  });
}

sptc_status sptc_qas_table(const char* preset, sptc_format format, char** out) {
  return guard([&] {
    require(preset, "preset");
    require(out, "out");
    const auto rows = sptc::table_rows(sptc::table_preset(preset));
    if (format == SPTC_FORMAT_CSV) {
      put(out, sptc::table_to_csv(rows));
    } else {
      put_json(out, sptc::table_json(preset, rows));
    }
  });
}

sptc_status sptc_gepp_params(const char* family, unsigned s, unsigned r, const char* eps_in, int dcs,
                             char** out_json) {
  return guard([&] {
    require(family, "family");
    require(out_json, "out_json");
    const auto code = sptc::family_parameters(family, s, r);
    const sptc::Rational eps0 = eps_in ? sptc::parse_rational(eps_in) : sptc::Rational(0);
    auto params = sptc::gepp_cs(code, eps0);
    if (dcs) params = sptc::gepp_dcs(params);
    sptc::Json doc;
    doc["error_detection"] = sptc::error_detection_json(code, sptc::error_detection_params(code));
    doc["gepp"] = sptc::gepp_json(code, params);
    put_json(out_json, doc);
  });
}

sptc_status sptc_gepp_fig1(unsigned s_max, sptc_format format, char** out) {
  return guard([&] {
    require(out, "out");
    const auto rows = sptc::fig1_data(s_max);
    if (format == SPTC_FORMAT_CSV) {
      put(out, sptc::fig1_to_csv(rows));
    } else {
      put_json(out, sptc::fig1_json(rows));
    }
  });
}

}  // extern "C"
