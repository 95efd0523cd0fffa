#include "fpd/ring_spec.hpp"

namespace fpd {

using nlohmann::json;

const char* kReportVersion = "0.1.0";

namespace {

const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError("missing field '" + std::string(key) + "'", path);
  }
  return j.at(key);
}

std::uint32_t require_prime(const json& j, const std::string& path) {
  const json& p = require(j, "p", path);
  if (!p.is_number_unsigned()) throw SchemaError("'p' must be a nonnegative integer", path + ".p");
  std::uint32_t v = p.get<std::uint32_t>();
  fpmod::check_prime(v);
  return v;
}

std::vector<std::string> require_variables(const json& j, const std::string& path) {
  const json& vars = require(j, "variables", path);
  if (!vars.is_array() || vars.empty()) {
    throw SchemaError("'variables' must be a nonempty array", path + ".variables");
  }
  std::vector<std::string> out;
  for (const auto& v : vars) {
    if (!v.is_string()) throw SchemaError("variable names must be strings", path + ".variables");
    out.push_back(v.get<std::string>());
  }
  return out;
}

MonomialOrder parse_order(const json& j, const std::string& path) {
  if (!j.contains("order")) return MonomialOrder::Grevlex;
  std::string o = j.at("order").get<std::string>();
  if (o == "lex") return MonomialOrder::Lex;
  if (o == "grevlex") return MonomialOrder::Grevlex;
  throw SchemaError("order must be 'lex' or 'grevlex'", path + ".order");
}

RingValue from_structure_constants(const json& j) {
  const std::string path = "$";
  std::uint32_t p = require_prime(j, path);
  const json& table = require(j, "table", path);
  if (!table.is_array() || table.empty()) throw SchemaError("'table' must be an array", "$.table");
  const std::size_t d = table.size();

  std::vector<std::string> names;
  if (j.contains("basis")) {
    for (const auto& b : j.at("basis")) names.push_back(b.get<std::string>());
    if (names.size() != d) throw SchemaError("'basis' length must match 'table'", "$.basis");
  } else {
    for (std::size_t i = 0; i < d; ++i) names.push_back("b" + std::to_string(i));
  }

  std::vector<std::vector<Row>> tbl(d, std::vector<Row>(d));
  for (std::size_t i = 0; i < d; ++i) {
    const json& row = table.at(i);
    if (!row.is_array() || row.size() != d) {
      throw SchemaError("table rows must have length dim", "$.table[" + std::to_string(i) + "]");
    }
    for (std::size_t k = 0; k < d; ++k) {
      const json& cell = row.at(k);
      if (!cell.is_array() || cell.size() != d) {
        throw SchemaError("structure-constant vectors must have length dim",
                          "$.table[" + std::to_string(i) + "][" + std::to_string(k) + "]");
      }
      Row v(d);
      for (std::size_t t = 0; t < d; ++t) v[t] = cell.at(t).get<std::uint32_t>();
      tbl[i][k] = std::move(v);
    }
  }
  const json& unit = require(j, "unit", path);
  if (!unit.is_array() || unit.size() != d) {
    throw SchemaError("'unit' must have length dim", "$.unit");
  }
  Row u(d);
  for (std::size_t t = 0; t < d; ++t) u[t] = unit.at(t).get<std::uint32_t>();
  AlgebraPtr A = FiniteAlgebra::create(p, std::move(names), std::move(tbl), std::move(u));
  return RingValue{RingValue::Backend::Finite, A, {}, j};
}

RingValue from_poly_quotient(const json& j) {
  std::uint32_t p = require_prime(j, "$");
  std::vector<std::string> vars = require_variables(j, "$");
  PolyRingPtr ring = PolyRing::create(p, vars, parse_order(j, "$"));
  const json& rels = require(j, "relations", "$");
  if (!rels.is_array()) throw SchemaError("'relations' must be an array", "$.relations");
  std::vector<Polynomial> relations;
  for (const auto& r : rels) {
    relations.push_back(parse_poly(ring, r.get<std::string>()));
  }
  try {
    AlgebraPtr A = algebra_from_zero_dim_quotient(ring, relations);
    return RingValue{RingValue::Backend::Finite, A, {}, j};
  } catch (const InfiniteDimensional&) {
    return RingValue{RingValue::Backend::Poly, nullptr,
                     make_poly_quotient(ring, std::move(relations)), j};
  }
}

RingValue from_poly(const json& j) {
  std::uint32_t p = require_prime(j, "$");
  std::vector<std::string> vars = require_variables(j, "$");
  PolyRingPtr ring = PolyRing::create(p, vars, parse_order(j, "$"));
  return RingValue{RingValue::Backend::Poly, nullptr, make_poly_quotient(ring), j};
}

RingValue from_family(const json& j) {
  std::string name = require(j, "name", "$").get<std::string>();
  if (name == "chain") {
    std::uint32_t p = require_prime(j, "$");
    std::size_t k = require(j, "k", "$").get<std::size_t>();
    return RingValue{RingValue::Backend::Finite, family_chain(p, k), {}, j};
  }
  if (name == "trunc") {
    std::uint32_t p = require_prime(j, "$");
    std::size_t n = require(j, "n", "$").get<std::size_t>();
    std::size_t deg = require(j, "deg", "$").get<std::size_t>();
    return RingValue{RingValue::Backend::Finite, family_trunc(p, n, deg), {}, j};
  }
  if (name == "field_product") {
    std::uint32_t p = require_prime(j, "$");
    std::size_t m = require(j, "m", "$").get<std::size_t>();
    return RingValue{RingValue::Backend::Finite, family_field_product(p, m), {}, j};
  }
  if (name == "idealization") {
    RingValue base = parse_ring_spec(require(j, "base", "$"));
    if (!base.finite()) {
      throw SchemaError("idealization base must be a finite ring", "$.base");
    }
    std::string mod = j.contains("module") ? j.at("module").get<std::string>() : "regular";
    IdealizationModule which;
    if (mod == "regular") {
      which = IdealizationModule::Regular;
    } else if (mod == "residue_field") {
      which = IdealizationModule::ResidueField;
    } else {
      throw SchemaError("module must be 'regular' or 'residue_field'", "$.module");
    }
    return RingValue{RingValue::Backend::Finite, family_idealization(base.algebra, which), {}, j};
  }
  throw SchemaError("unknown family '" + name + "'", "$.name");
}

}  // namespace

RingValue parse_ring_spec(const json& spec) {
  std::string kind = require(spec, "kind", "$").get<std::string>();
  if (kind == "structure_constants") return from_structure_constants(spec);
  if (kind == "poly_quotient") return from_poly_quotient(spec);
  if (kind == "poly") return from_poly(spec);
  if (kind == "family") return from_family(spec);
  throw SchemaError("unknown kind '" + kind + "'", "$.kind");
}

RingValue parse_ring_spec_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what(), "$");
  }
  return parse_ring_spec(j);
}

json make_report(const std::string& command, const json& spec_echo, std::uint64_t seed,
                 json results) {
  json rep;
  rep["version"] = kReportVersion;
  rep["command"] = command;
  rep["spec"] = spec_echo;
  rep["seed"] = seed;
  rep["results"] = std::move(results);
  return rep;
}

json classifier_report_to_json(const ClassifierReport& rep) {
  json out;
  out["ring"] = rep.ring_desc;
  out["fpd"] = {{"value", rep.fpd.value.to_string()},
                {"method_grade", rep.fpd.method_grade},
                {"method_ext", rep.fpd.method_ext},
                {"agree", rep.fpd.agree}};
  json gv = json::array();
  for (const auto& v : rep.gv_ideals) {
    gv.push_back({{"ideal", v.ideal_desc},
                  {"hom_zero", v.hom_zero},
                  {"ext1_zero", v.ext1_zero},
                  {"is_gv", v.is_gv}});
  }
  out["gv_ideals"] = std::move(gv);
  out["is_dw"] = rep.is_dw;
  if (rep.dw_witness.has_value()) out["dw_witness"] = *rep.dw_witness;
  out["strong_w_ok"] = rep.strong_w_ok;
  out["self_injective_dim"] = rep.self_injective_dim.to_string();
  out["gorenstein_factors"] = rep.gorenstein_factors;
  out["prufer"] = rep.prufer;
  out["strong_prufer"] = rep.strong_prufer;
  json wit = json::array();
  for (const auto& w : rep.witnesses) {
    wit.push_back({{"ideal", w.ideal_desc}, {"reason", w.reason}});
  }
  out["witnesses"] = std::move(wit);
  out["weak_1_0"] = {{"verdict", tri_to_string(rep.weak_10.is_weak_1d)},
                     {"implies_fpd_le_0_verified", rep.weak_10.implies_fpd_le_d_verified}};
  if (rep.weak_10.witness.has_value()) {
    out["weak_1_0"]["witness"] = rep.weak_10.witness->to_string();
  }
  return out;
}

}  // namespace fpd
