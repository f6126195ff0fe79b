#pragma once

// JSON form of ideals and certificates (schema "v1"). Polynomials are
// written in canonical text form so every record can be replayed.

#include <json.hpp>

#include <string>
#include <vector>

#include "nucideal/certificates.hpp"
#include "nucideal/groebner.hpp"
#include "nucideal/ideals.hpp"

namespace nucideal {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "v1";

inline Json shape_json(const TensorShape& shape) { return Json(shape.dims()); }

inline Json to_json(const IdealSpec& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators) gens.push_back(format(g));
  return Json{{"shape", shape_json(ideal.shape)},
              {"p", ideal.p_tag.to_string()},
              {"count", ideal.generators.size()},
              {"claimed_groebner", ideal.claimed_groebner},
              {"generators", gens}};
}

inline Json to_json(const GroebnerCheck& check) {
  Json out{{"is_gb", check.is_gb}, {"spairs_checked", check.spairs_checked}};
  if (check.witness) {
    out["witness"] = Json{{"pair", {check.witness->first, check.witness->second}},
                          {"remainder", format(check.witness->remainder)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

inline Json index_list(const std::vector<MultiIndex>& idx) {
  Json out = Json::array();
  for (const auto& a : idx) out.push_back(a.to_string());
  return out;
}

inline Json to_json(const PrimalityCertificate& c) {
  Json records = Json::array();
  for (const auto& r : c.records) {
    Json rec{{"a", r.a.to_string()},
             {"case", r.case_id},
             {"H", format(r.H)},
             {"variables_ok", r.variables_ok},
             {"membership_ok", r.membership_ok},
             {"squarefree_ok", r.squarefree_ok},
             {"degree_in_a", r.degree},
             {"gcd_degree", r.gcd_degree}};
    if (r.f) rec["f"] = format(*r.f);
    if (r.g) rec["g"] = format(*r.g);
    if (!r.failure.empty()) rec["failure"] = r.failure;
    records.push_back(std::move(rec));
  }
  Json witnesses = Json::array();
  for (const auto& w : c.independence.witnesses) witnesses.push_back(format(w));
  return Json{
      {"kind", "primality"},
      {"shape", shape_json(c.shape)},
      {"p", c.p_tag.to_string()},
      {"J", index_list(c.J.J)},
      {"independence", {{"independent", c.independence.independent},
                        {"verified", c.independence.verified},
                        {"witnesses", witnesses},
                        {"note", c.independence.note}}},
      {"membership_basis", {{"generators_are_gb", c.generators_are_gb},
                            {"completed", c.gb_completed},
                            {"size", c.gb_size},
                            {"note", c.gb_note}}},
      {"gcd_field", "Q(J); gcd degree 0 over Q(J) implies degree 0 over C(J)"},
      {"records", records},
      {"primary_assumed", c.primary_assumed},
      {"primary_source", c.primary_source},
      {"verdict", to_string(c.verdict)},
      {"dimension", c.dimension ? Json(*c.dimension) : Json(nullptr)},
      {"reasons", c.reasons}};
}

inline Json to_json(const RadicalCertificate& c) {
  Json out{{"kind", "radical"},
           {"shape", shape_json(c.shape)},
           {"p", c.p_tag ? Json(c.p_tag->to_string()) : Json(nullptr)},
           {"method", to_string(c.method)},
           {"zero_dimensional", c.zero_dimensional}};
  if (c.method == RadicalMethod::seidenberg) {
    Json recs = Json::array();
    for (const auto& r : c.univariate) {
      recs.push_back(Json{{"a", r.a.to_string()},
                          {"f_a", format(r.f_a)},
                          {"membership_ok", r.membership_ok},
                          {"gcd_degree", r.gcd_degree},
                          {"coprime", r.coprime}});
    }
    out["univariate"] = recs;
  } else {
    Json recs = Json::array();
    for (const auto& r : c.leading_terms) {
      recs.push_back(Json{{"lt", format_monomial(r.lt, c.shape)}, {"squarefree", r.squarefree}});
    }
    out["leading_terms"] = recs;
  }
  out["radical"] = c.radical;
  out["reasons"] = c.reasons;
  return out;
}

inline Json to_json(const SmoothnessCertificate& c) {
  Json point = Json::array();
  for (const auto& q : c.point) point.push_back(format_rational(q));
  return Json{{"kind", "smoothness"},
              {"shape", shape_json(c.shape)},
              {"p", c.p_tag.to_string()},
              {"point", point},
              {"on_variety", c.on_variety},
              {"jacobian", {{"rows", c.jacobian_rows}, {"cols", c.jacobian_cols}}},
              {"rank", c.rank},
              {"required_rank", c.required_rank},
              {"prime_established", c.prime_established},
              {"real_radical", c.real_radical},
              {"reasons", c.reasons}};
}

}  // namespace nucideal
