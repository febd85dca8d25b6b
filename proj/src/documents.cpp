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

#include "sptc/documents.hpp"

#include <cmath>
#include <sstream>

#include "sptc/error.hpp"
#include "sptc/random.hpp"

namespace sptc {

const char* const kPauliScope =
    "Pauli adversaries only (phases ignored); general attacks reduce to Pauli attacks but that "
    "reduction is not simulated";

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw_parse(std::string(what) + ": " + e.what());
  }
}

Json pauli_json(const PauliVector& p) {
  return Json{{"x", part_to_hex(p.x())}, {"z", part_to_hex(p.z())}, {"pauli", p.to_word()}};
}

std::string bits(const BitVector& v) { return v.to_bit_string(); }

}  // namespace

Json parse_document(const std::string& text) {
  return guarded("malformed JSON document", [&] { return Json::parse(text); });
}

Json field_to_json(const GaloisField& field) {
  if (field.degree() > 63) throw_invalid("field documents support s <= 63");
  return Json{{"s", field.degree()}, {"prim_poly", field.poly_low() | (1ull << field.degree())}};
}

FieldPtr field_from_json(const Json& doc) {
  return guarded("bad field document", [&] {
    const auto s = doc.at("s").get<unsigned>();
    const auto poly = doc.at("prim_poly").get<std::uint64_t>();
    if (s == 0 || s > 63) throw_parse("field degree out of range");
    if ((poly >> s) != 1) throw_parse("prim_poly is not monic of degree s");
    return GaloisField::with_polynomial(s, poly ^ (1ull << s));
  });
}

Json code_to_json(const LinearCode& code) {
  Json doc;
  doc["field"] = field_to_json(code.field());
  doc["c"] = code.length();
  doc["k"] = code.dimension();
  if (code.distance()) doc["d"] = *code.distance();
  doc["family_tag"] = to_string(code.family());
  Json rows = Json::array();
  for (std::size_t i = 0; i < code.dimension(); ++i) {
    auto row = code.row(i);
    rows.push_back(Json(std::vector<std::uint64_t>(row.begin(), row.end())));
  }
  doc["G"] = std::move(rows);
  return doc;
}

LinearCode code_from_json(const Json& doc) {
  return guarded("bad code document", [&] {
    auto field = field_from_json(doc.at("field"));
    const auto c = doc.at("c").get<std::size_t>();
    const auto k = doc.at("k").get<std::size_t>();
    std::optional<std::uint64_t> d;
    if (doc.contains("d") && !doc.at("d").is_null()) d = doc.at("d").get<std::uint64_t>();
    const auto family = parse_code_family(doc.at("family_tag").get<std::string>());
    const auto& rows = doc.at("G");
    if (!rows.is_array() || rows.size() != k) throw_parse("G must have k rows");
    std::vector<GaloisField::Element> g;
    g.reserve(k * c);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != c) throw_parse("every row of G must have c entries");
      for (const auto& v : row) g.push_back(v.get<std::uint64_t>());
    }
    return LinearCode(field, k, c, std::move(g), d, family);
  });
}

Json sptc_to_json(const Sptc& sptc) {
  Json doc;
  doc["code"] = code_to_json(sptc.source());
  doc["n"] = sptc.num_qubits();
  doc["m"] = sptc.num_logical();
  doc["s"] = sptc.num_syndrome_bits();
  doc["eps_bound"] = to_string(sptc.eps_bound());
  doc["basis"] = Json{{"kind", to_string(sptc.basis().kind())}, {"elements", sptc.basis().elements()}};
  Json codes = Json::array();
  for (const auto& q : sptc.codes()) {
    Json gens = Json::array();
    for (const auto& g : q.generators()) gens.push_back(pauli_json(g));
    codes.push_back(Json{{"source_point", q.source_point()}, {"gens", std::move(gens)}});
  }
  doc["codes"] = std::move(codes);
  return doc;
}

Sptc sptc_from_json(const Json& doc) {
  return guarded("bad SPTC document", [&] {
    Sptc sptc = build_sptc(code_from_json(doc.at("code")));
    if (doc.at("n").get<std::size_t>() != sptc.num_qubits() ||
        doc.at("m").get<std::size_t>() != sptc.num_logical() ||
        doc.at("s").get<std::size_t>() != sptc.num_syndrome_bits())
      throw_invariant("SPTC document sizes disagree with its code");
    if (parse_rational(doc.at("eps_bound").get<std::string>()) != sptc.eps_bound())
      throw_invariant("SPTC document eps_bound disagrees with its code");
    if (doc.contains("basis") &&
        doc.at("basis").at("kind").get<std::string>() != to_string(sptc.basis().kind()))
      throw_invariant("SPTC document uses a different coordinate basis");
    const auto& codes = doc.at("codes");
    if (!codes.is_array() || codes.size() != sptc.size()) throw_invariant("SPTC document has the wrong number of codes");
    const std::size_t n = sptc.num_qubits();
    for (std::size_t k = 0; k < sptc.size(); ++k) {
      const auto& gens = codes[k].at("gens");
      const auto& expected = sptc.codes()[k].generators();
      if (!gens.is_array() || gens.size() != expected.size())
        throw_invariant("SPTC document code " + std::to_string(k + 1) + " has the wrong generator count");
      for (std::size_t i = 0; i < expected.size(); ++i) {
        PauliVector g(part_from_hex(gens[i].at("x").get<std::string>(), n),
                      part_from_hex(gens[i].at("z").get<std::string>(), n));
        if (!(g == expected[i]))
          throw_invariant("SPTC document generator " + std::to_string(i + 1) + " of code " +
                          std::to_string(k + 1) + " disagrees with the blow-up of its column");
      }
    }
    return sptc;
  });
}

Json field_table_json(const GaloisField& field) {
  Json doc;
  doc["s"] = field.degree();
  doc["polynomial"] = field.polynomial_string();
  if (field.degree() <= 63) doc["prim_poly"] = field.poly_low() | (1ull << field.degree());
  doc["companion"] = field.companion().to_string();
  Json elements = Json::array();
  if (field.degree() <= 8) {
    const auto all = field.elements();
    for (std::size_t i = 0; i < all.size(); ++i) {
      Json e;
      e["value"] = all[i];
      e["power"] = i == 0 ? Json(nullptr) : Json(i - 1);
      e["trace"] = field.trace(all[i]);
      e["matrix"] = field.companion_of(all[i]).to_string();
      elements.push_back(std::move(e));
    }
  }
  doc["elements"] = std::move(elements);
  doc["self_dual_basis"] = field.self_dual_basis();
  return doc;
}

Json sptc_reference(const Sptc& sptc) {
  const auto& code = sptc.source();
  return Json{{"family_tag", to_string(code.family())},
              {"s", code.field().degree()},
              {"c", code.length()},
              {"k", code.dimension()},
              {"d", code.distance().value_or(0)},
              {"n", sptc.num_qubits()},
              {"m", sptc.num_logical()},
              {"eps_bound", to_string(sptc.eps_bound())}};
}

Json error_rate_report_json(const Sptc& sptc, const ErrorRateReport& report) {
  Json doc;
  doc["sptc"] = sptc_reference(sptc);
  doc["mode"] = report.exhaustive ? "exhaustive" : "sampled";
  doc["approximate"] = !report.exhaustive;
  doc["errors_checked"] = report.errors_checked;
  if (report.seed) doc["seed"] = *report.seed;
  doc["max_fraction"] = to_string(report.max_fraction);
  doc["witness"] = pauli_json(report.witness);
  if (report.witness.num_qubits() <= 31) doc["witness_index"] = report.witness.to_index();
  doc["bound"] = to_string(report.bound);
  doc["holds"] = report.holds;
  doc["strong"] = true;
  return doc;
}

Json ptp_exact_json(const Sptc& sptc, const std::vector<PauliVector>& errors) {
  Json doc;
  doc["sptc"] = sptc_reference(sptc);
  doc["mode"] = "exact";
  doc["scope"] = kPauliScope;
  doc["bound"] = to_string(sptc.eps_bound());
  bool all_hold = true;
  Json results = Json::array();
  for (const auto& e : errors) {
    Json r;
    r["error"] = e.to_hex();
    r["pauli"] = e.to_word();
    Json accepted = Json::array();
    Json corrupted = Json::array();
    for (std::size_t k = 0; k < sptc.size(); ++k) {
      const auto outcome = ptp_evaluate(sptc, e, k);
      if (outcome.accepted) accepted.push_back(k + 1);
      if (outcome.corrupted) corrupted.push_back(k + 1);
    }
    r["accepting_codes"] = std::move(accepted);
    r["corrupting_codes"] = std::move(corrupted);
    if (e.is_identity()) {
      r["identity"] = true;
      r["holds"] = true;
    } else {
      const auto strong = undetected_fraction(sptc, e, true);
      const auto weak = ptp_soundness_exact(sptc, e);
      r["acceptance"] = to_string(strong);
      r["soundness_error"] = to_string(weak);
      r["holds"] = strong <= sptc.eps_bound();
      all_hold = all_hold && strong <= sptc.eps_bound();
    }
    results.push_back(std::move(r));
  }
  doc["results"] = std::move(results);
  doc["holds"] = all_hold;
  return doc;
}

Json ptp_monte_carlo_json(const Sptc& sptc, const std::vector<PauliVector>& errors,
                          std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  Json doc;
  doc["sptc"] = sptc_reference(sptc);
  doc["mode"] = "montecarlo";
  doc["scope"] = kPauliScope;
  doc["trials"] = trials;
  doc["seed"] = seed;
  doc["bound"] = to_string(sptc.eps_bound());
  bool all_hold = true;
  Json results = Json::array();
  for (std::size_t i = 0; i < errors.size(); ++i) {
    const auto& e = errors[i];
    const std::uint64_t stream = derive_seed(seed, i);
    const auto mc = ptp_monte_carlo(sptc, e, trials, stream, workers);
    Json r;
    r["error"] = e.to_hex();
    r["pauli"] = e.to_word();
    r["stream_seed"] = stream;
    r["accepted"] = mc.accepted;
    r["corrupted"] = mc.corrupted;
    const double freq = trials ? static_cast<double>(mc.accepted) / static_cast<double>(trials) : 0.0;
    r["acceptance_frequency"] = freq;
    if (!e.is_identity()) {
      const auto exact = undetected_fraction(sptc, e, true);
      const double p = static_cast<double>(to_long_double(exact));
      const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(trials ? trials : 1));
      r["exact_acceptance"] = to_string(exact);
      r["sigma"] = sigma;
      r["deviation_sigmas"] = sigma > 0 ? std::abs(freq - p) / sigma : 0.0;
      r["holds"] = exact <= sptc.eps_bound();
      all_hold = all_hold && exact <= sptc.eps_bound();
    }
    results.push_back(std::move(r));
  }
  doc["results"] = std::move(results);
  doc["holds"] = all_hold;
  return doc;
}

Json qas_simulation_json(const Sptc& sptc, const PauliVector& error, std::uint64_t seed,
                         std::uint64_t sessions) {
  const QasContext context(sptc);
  Rng rng(seed);
  std::uint64_t accepted = 0;
  std::uint64_t altered = 0;
  Json listed = Json::array();
  for (std::uint64_t i = 0; i < sessions; ++i) {
    const auto keys = random_qas_keys(sptc, rng);
    const auto session = qas_run(context, keys, error, sptc.num_logical());
    accepted += session.accepted ? 1 : 0;
    altered += session.message_altered ? 1 : 0;
    if (sessions <= 100) {
      listed.push_back(Json{{"code_index", keys.code_index + 1},
                            {"key_x", bits(keys.pad)},
                            {"key_y", bits(keys.syndrome)},
                            {"measured_y", bits(session.measured_syndrome)},
                            {"accepted", session.accepted},
                            {"message_altered", session.message_altered}});
    }
  }
  Json doc;
  doc["sptc"] = sptc_reference(sptc);
  doc["mode"] = "montecarlo";
  doc["scope"] = kPauliScope;
  doc["seed"] = seed;
  doc["sessions"] = sessions;
  doc["error"] = error.to_hex();
  doc["pauli"] = error.to_word();
  doc["key_length"] = qas_key_length(sptc);
  doc["accepted"] = accepted;
  doc["altered"] = altered;
  doc["bound"] = to_string(sptc.eps_bound());
  if (error.is_identity()) {
    doc["forgery_probability"] = "0/1";
    doc["holds"] = altered == 0;
  } else {
    const auto forgery = qas_forgery_probability(context, error);
    doc["forgery_probability"] = to_string(forgery);
    doc["holds"] = forgery <= sptc.eps_bound();
  }
  doc["strong_sptc"] = true;
  if (sessions <= 100) doc["session_log"] = std::move(listed);
  return doc;
}

Json error_detection_json(const CodeParameters& code, const ErrorDetectionParams& params) {
  return Json{{"code", code.label()},
              {"n", params.n},
              {"m", params.m},
              {"F", to_string(params.fidelity)},
              {"b", params.classical_bits}};
}

Json gepp_json(const CodeParameters& code, const GeppParams& params) {
  return Json{{"code", code.label()},
              {"kind", params.dcs ? "DCS" : "CS"},
              {"N", "2^" + std::to_string(params.log2_n)},
              {"K", "2^" + std::to_string(params.log2_k)},
              {"M", "2^" + std::to_string(params.log2_m)},
              {"eps_in", to_string(params.eps_in)},
              {"delta", to_string(params.delta)},
              {"p", to_string(params.p)},
              {"comm_bits", params.comm_bits}};
}

Json qas_plan_json(const QasPlan& plan) {
  return Json{{"code", plan.code.label()},
              {"target_qubits", plan.target_qubits},
              {"block_length", plan.block_len},
              {"blocks", plan.blocks},
              {"message_qubits", plan.message_qubits},
              {"auxiliary_qubits", plan.aux_qubits},
              {"key_bits_per_block", plan.key_bits_per_block},
              {"secret_key_bits", plan.key_bits_total},
              {"eps_exact", to_string(plan.eps)},
              {"eps", format_eps(plan.eps)},
              {"eps_total", format_eps_total(plan.eps_total)},
              {"key_recycling", "strong SPTC: whole key reusable on accept, pad bits discarded on reject"}};
}

std::string qas_plan_csv(const QasPlan& plan) {
  return table_to_csv({TableRow{plan, ""}});
}

Json table_json(const std::string& preset, const std::vector<TableRow>& rows) {
  Json out;
  out["preset"] = preset;
  Json list = Json::array();
  for (const auto& row : rows) {
    Json r = qas_plan_json(row.plan);
    if (!row.note.empty()) r["note"] = row.note;
    list.push_back(std::move(r));
  }
  out["rows"] = std::move(list);
  return out;
}

Json fig1_json(const std::vector<Fig1Row>& rows) {
  Json list = Json::array();
  for (const auto& row : rows) {
    list.push_back(Json{{"s", row.s},
                        {"family", row.family == CodeFamily::kErs ? "ERS(r=2)" : "OVOID"},
                        {"delta_times_one_minus_eps_in", to_string(row.delta_times_fidelity)},
                        {"b", row.b}});
  }
  return Json{{"rows", std::move(list)}};
}

}  // namespace sptc
