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

// Command-line front end. Primary output goes to stdout (or --out), diagnostics
// to stderr. Exit codes: 0 ok, 1 usage or input error, 2 claim violated,
// 3 budget exceeded.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sptc/sptc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolated = 2;
constexpr int kExitBudget = 3;

struct Failure {
  int code;
};

int exit_code_of(sptc_status status) {
  switch (status) {
    case SPTC_OK: return kExitOk;
    case SPTC_ERR_INVARIANT: return kExitViolated;
    case SPTC_ERR_BUDGET: return kExitBudget;
    default: return kExitUsage;
  }
}

void check(sptc_status status) {
  if (status == SPTC_OK) return;
  std::cerr << "sptc: " << sptc_status_name(status) << ": " << sptc_last_error() << "\n";
  throw Failure{exit_code_of(status)};
}

struct StringDeleter {
  void operator()(char* p) const { sptc_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct CodeDeleter {
  void operator()(sptc_code_t* p) const { sptc_code_free(p); }
};
struct FamilyDeleter {
  void operator()(sptc_family_t* p) const { sptc_family_free(p); }
};
using CodeHandle = std::unique_ptr<sptc_code_t, CodeDeleter>;
using FamilyHandle = std::unique_ptr<sptc_family_t, FamilyDeleter>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "sptc: cannot open '" << path << "'\n";
    throw Failure{kExitUsage};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const char* text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text, stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "sptc: cannot write '" << out_path << "'\n";
    throw Failure{kExitUsage};
  }
}

sptc_format parse_format(const std::optional<std::string>& name, sptc_format fallback) {
  if (!name) return fallback;
  return *name == "csv" ? SPTC_FORMAT_CSV : SPTC_FORMAT_JSON;
}

FamilyHandle load_family(const std::string& path) {
  sptc_family_t* family = nullptr;
  check(sptc_family_load(read_file(path).c_str(), &family));
  return FamilyHandle(family);
}

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

int holds_exit(int holds) { return holds ? kExitOk : kExitViolated; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabilizer purity-testing codes: construction, verification and planning"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sptc_version()));

  std::string out_path;
  std::optional<std::string> format;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1ull << 24;
  unsigned workers = 1;
  unsigned s = 0;
  unsigned r = 2;
  std::string family_name;
  std::string in_path;
  int result = kExitOk;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  // field show
  auto* field = app.add_subcommand("field", "Finite field GF(2^s)")->require_subcommand(1);
  auto* field_show = field->add_subcommand("show", "Primitive polynomial, companion matrices, element table");
  field_show->add_option("--s", s, "Field degree")->required();
  field_show->callback([&] {
    char* text = nullptr;
    check(sptc_field_show(s, &text));
    OwnedString owned(text);
    emit(text, "");
  });

  // code build / code mindist
  auto* code = app.add_subcommand("code", "Classical linear codes")->require_subcommand(1);
  auto* code_build = code->add_subcommand("build", "Construct a code and write its document");
  code_build->add_option("--family", family_name, "ers, ovoid or appendix-c")
      ->required()
      ->check(CLI::IsMember({"ers", "ovoid", "appendix-c"}));
  code_build->add_option("--s", s, "Field degree");
  code_build->add_option("--r", r, "Half dimension (ers only)");
  code_build->add_option("--out", out_path, "Output file (default stdout)");
  code_build->callback([&] {
    if (family_name != "appendix-c" && s == 0) {
      std::cerr << "sptc: --s is required for family " << family_name << "\n";
      throw Failure{kExitUsage};
    }
    sptc_code_t* handle = nullptr;
    check(sptc_code_build(family_name.c_str(), s, r, &handle));
    CodeHandle owned_code(handle);
    char* text = nullptr;
    check(sptc_code_to_json(handle, &text));
    OwnedString owned(text);
    emit(text, out_path);
  });

  auto* code_mindist = code->add_subcommand("mindist", "Exhaustive minimum distance");
  code_mindist->add_option("--in", in_path, "Code document")->required();
  code_mindist->add_option("--budget", budget, "Maximum number of codewords to enumerate");
  code_mindist->callback([&] {
    sptc_code_t* handle = nullptr;
    check(sptc_code_load(read_file(in_path).c_str(), &handle));
    CodeHandle owned_code(handle);
    char* text = nullptr;
    int consistent = 0;
    check(sptc_code_mindist(handle, budget, &text, &consistent));
    OwnedString owned(text);
    emit(text, "");
    result = holds_exit(consistent);
  });

  // sptc build / sptc verify
  auto* family = app.add_subcommand("sptc", "Stabilizer purity-testing code families")->require_subcommand(1);
  std::string code_source;
  auto* sptc_build = family->add_subcommand("build", "Blow a code up into a family of stabilizer codes");
  sptc_build->add_option("--code", code_source, "Code document, or appendix-c for the built-in example")
      ->required();
  sptc_build->add_option("--out", out_path, "Output file (default stdout)");
  sptc_build->callback([&] {
    sptc_code_t* handle = nullptr;
    if (code_source == "appendix-c") {
      check(sptc_code_build("appendix-c", 0, 0, &handle));
    } else {
      check(sptc_code_load(read_file(code_source).c_str(), &handle));
    }
    CodeHandle owned_code(handle);
    sptc_family_t* fam = nullptr;
    check(sptc_family_build(handle, &fam));
    FamilyHandle owned_family(fam);
    char* text = nullptr;
    check(sptc_family_to_json(fam, &text));
    OwnedString owned(text);
    emit(text, out_path);
  });

  bool exhaustive = false;
  std::optional<std::uint64_t> samples;
  auto* sptc_verify = family->add_subcommand("verify", "Worst-case undetected fraction against the bound");
  sptc_verify->add_option("--in", in_path, "SPTC document")->required();
  auto* exhaustive_flag = sptc_verify->add_flag("--exhaustive", exhaustive, "Sweep every nonzero Pauli error");
  sptc_verify->add_option("--samples", samples, "Number of sampled errors")->excludes(exhaustive_flag);
  sptc_verify->add_option("--seed", seed, "Sampling seed");
  sptc_verify->add_option("--budget", budget, "Maximum number of errors for an exhaustive sweep");
  sptc_verify->add_option("--workers", workers, "Worker threads (output does not depend on it)");
  sptc_verify->callback([&] {
    auto fam = load_family(in_path);
    char* text = nullptr;
    int holds = 0;
    check(sptc_family_verify(fam.get(), samples ? 0 : 1, budget, samples.value_or(0), seed, workers, &text,
                             &holds));
    OwnedString owned(text);
    emit(text, "");
    result = holds_exit(holds);
  });

  // ptp simulate
  std::string sptc_path;
  std::vector<std::string> error_list;
  std::vector<std::string> error_specs;
  bool exact = false;
  std::optional<std::uint64_t> trials;
  auto* ptp = app.add_subcommand("ptp", "Purity testing protocol")->require_subcommand(1);
  auto* ptp_sim = ptp->add_subcommand("simulate", "Run the purity test against fixed Pauli errors");
  ptp_sim->add_option("--sptc", sptc_path, "SPTC document")->required();
  ptp_sim->add_option("--error", error_list, "Errors as XHEX:ZHEX or Pauli words, comma separated");
  ptp_sim->add_option("--error-spec", error_specs, "Error in sparse notation such as Z1,X3 (repeatable)");
  auto* exact_flag = ptp_sim->add_flag("--exact", exact, "Enumerate every code instead of sampling");
  ptp_sim->add_option("--trials", trials, "Monte-Carlo trials per error")->excludes(exact_flag);
  ptp_sim->add_option("--seed", seed, "Monte-Carlo seed");
  ptp_sim->add_option("--workers", workers, "Worker threads (output does not depend on it)");
  ptp_sim->callback([&] {
    auto errors = split_commas(error_list);
    errors.insert(errors.end(), error_specs.begin(), error_specs.end());
    if (errors.empty()) {
      std::cerr << "sptc: give at least one --error or --error-spec\n";
      throw Failure{kExitUsage};
    }
    std::vector<const char*> ptrs;
    for (const auto& e : errors) ptrs.push_back(e.c_str());
    auto fam = load_family(sptc_path);
    char* text = nullptr;
    int holds = 0;
    check(sptc_ptp_simulate(fam.get(), ptrs.data(), ptrs.size(), trials ? 0 : 1, trials.value_or(0), seed,
                            workers, &text, &holds));
    OwnedString owned(text);
    emit(text, "");
    result = holds_exit(holds);
  });

  // qas simulate / plan / table
  auto* qas = app.add_subcommand("qas", "Quantum message authentication")->require_subcommand(1);
  std::string qas_error;
  std::string qas_error_spec;
  std::uint64_t sessions = 1;
  auto* qas_sim = qas->add_subcommand("simulate", "Run seeded authentication sessions against a Pauli error");
  qas_sim->add_option("--sptc", sptc_path, "SPTC document")->required();
  auto* qas_error_opt = qas_sim->add_option("--error", qas_error, "Error as XHEX:ZHEX or a Pauli word");
  qas_sim->add_option("--error-spec", qas_error_spec, "Error in sparse notation such as Z1,X3")
      ->excludes(qas_error_opt);
  qas_sim->add_option("--seed", seed, "Key seed")->required();
  qas_sim->add_option("--sessions", sessions, "Number of sessions");
  qas_sim->callback([&] {
    const std::string& e = qas_error.empty() ? qas_error_spec : qas_error;
    if (e.empty()) {
      std::cerr << "sptc: give --error or --error-spec\n";
      throw Failure{kExitUsage};
    }
    auto fam = load_family(sptc_path);
    char* text = nullptr;
    int holds = 0;
    check(sptc_qas_simulate(fam.get(), e.c_str(), seed, sessions, &text, &holds));
    OwnedString owned(text);
    emit(text, "");
    result = holds_exit(holds);
  });

  std::uint64_t qubits = 0;
  auto* qas_plan = qas->add_subcommand("plan", "Block count, key length and total error for a message");
  qas_plan->add_option("--family", family_name, "ers or ovoid")->required()->check(CLI::IsMember({"ers", "ovoid"}));
  qas_plan->add_option("--s", s, "Field degree")->required();
  qas_plan->add_option("--r", r, "Half dimension (ers only)");
  qas_plan->add_option("--qubits", qubits, "Target message qubits")->required();
  add_format(qas_plan);
  qas_plan->callback([&] {
    char* text = nullptr;
    check(sptc_qas_plan(family_name.c_str(), s, r, qubits, parse_format(format, SPTC_FORMAT_JSON), &text));
    OwnedString owned(text);
    emit(text, "");
  });

  std::string preset;
  auto* qas_table = qas->add_subcommand("table", "Parameter tables for ~10^5 and ~10^2 message qubits");
  qas_table->add_option("--preset", preset, "table1 or table2")
      ->required()
      ->check(CLI::IsMember({"table1", "table2"}));
  add_format(qas_table);
  qas_table->callback([&] {
    char* text = nullptr;
    check(sptc_qas_table(preset.c_str(), parse_format(format, SPTC_FORMAT_CSV), &text));
    OwnedString owned(text);
    emit(text, "");
  });

  // gepp params / fig1
  auto* gepp = app.add_subcommand("gepp", "Entanglement purification parameters")->require_subcommand(1);
  std::string eps_in = "0";
  bool dcs = false;
  auto* gepp_params = gepp->add_subcommand("params", "Error-detection and CS/DCS parameter tuples");
  gepp_params->add_option("--family", family_name, "ers or ovoid")
      ->required()
      ->check(CLI::IsMember({"ers", "ovoid"}));
  gepp_params->add_option("--s", s, "Field degree")->required();
  gepp_params->add_option("--r", r, "Half dimension (ers only)");
  gepp_params->add_option("--eps-in", eps_in, "Initial infidelity as an exact rational or decimal");
  gepp_params->add_flag("--dcs", dcs, "Convert to a DCS protocol");
  gepp_params->callback([&] {
    char* text = nullptr;
    check(sptc_gepp_params(family_name.c_str(), s, r, eps_in.c_str(), dcs ? 1 : 0, &text));
    OwnedString owned(text);
    emit(text, "");
  });

  unsigned s_max = 0;
  auto* gepp_fig1 = gepp->add_subcommand("fig1", "delta(1 - eps_in) and b against s for both families");
  gepp_fig1->add_option("--s-max", s_max, "Largest field degree")->required();
  add_format(gepp_fig1);
  gepp_fig1->callback([&] {
    char* text = nullptr;
    check(sptc_gepp_fig1(s_max, parse_format(format, SPTC_FORMAT_CSV), &text));
    OwnedString owned(text);
    emit(text, "");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const Failure& f) {
    return f.code;
  }
  return result;
}
