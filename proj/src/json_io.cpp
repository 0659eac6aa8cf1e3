#include "chern3/json_io.hpp"

#include <algorithm>

#include "chern3/error.hpp"

namespace chern3::json_io {

namespace {

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorKind::SchemaError, msg); }

json pair_to_json(const std::pair<long, long>& p) { return json::array({p.first, p.second}); }

json scalar_to_json(const ScalarChern& s) {
  return {{"c1", rat_to_json(s.c1)}, {"c2", rat_to_json(s.c2)}, {"c3", rat_to_json(s.c3)}};
}

json roots_to_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rat_to_json(x));
  return out;
}

std::vector<Rat> rats_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where + " must be an array");
  std::vector<Rat> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(rat_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

void require_keys_subset(const json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& where) {
  if (!obj.is_object()) schema(where + " must be an object");
  for (const auto& [key, _] : obj.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      schema("unknown key \"" + key + "\" in " + where);
}

const json& require(const json& obj, std::string_view key, const std::string& where) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) schema("missing key \"" + std::string(key) + "\" in " + where);
  return *it;
}

json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    try {
      return Rat::parse(j.get<std::string>());
    } catch (const Error& e) {
      schema(where + ": " + e.what());
    }
  }
  schema(where + " must be an integer or a rational string \"p/q\"");
}

long long_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    const Rat r = rat_from_json(j, where);
    if (r.is_integer() && r.num().fits_slong_p()) return r.num().get_si();
  }
  schema(where + " must be an integer");
}

json div_to_json(const DivClass& d) { return roots_to_json(d.v); }
DivClass div_from_json(const json& j, const std::string& where) {
  return DivClass(rats_from_json(j, where));
}
json curve_to_json(const CurveClass& c) { return roots_to_json(c.v); }
CurveClass curve_from_json(const json& j, const std::string& where) {
  return CurveClass(rats_from_json(j, where));
}

json threefold_to_json(const Threefold& X) {
  const std::size_t m = X.rank();
  json T = json::array();
  for (std::size_t i = 0; i < m; ++i) {
    json plane = json::array();
    for (std::size_t j = 0; j < m; ++j) {
      json row = json::array();
      for (std::size_t k = 0; k < m; ++k) row.push_back(rat_to_json(X.form(i, j, k)));
      plane.push_back(std::move(row));
    }
    T.push_back(std::move(plane));
  }
  json out = {{"generators", X.generator_names()},
              {"T", std::move(T)},
              {"c1X", div_to_json(X.c1X())},
              {"c2X", curve_to_json(X.c2X())}};
  if (X.curve_lattice()) {
    json lat = json::array();
    for (const auto& g : *X.curve_lattice()) lat.push_back(curve_to_json(g));
    out["curve_lattice"] = std::move(lat);
  }
  return out;
}

Threefold threefold_from_json(const json& j) {
  const std::string where = "threefold";
  require_keys_subset(j, {"generators", "T", "c1X", "c2X", "curve_lattice"}, where);
  const json& gens = require(j, "generators", where);
  if (!gens.is_array()) schema("threefold.generators must be an array of names");
  std::vector<std::string> names;
  for (const auto& g : gens) {
    if (!g.is_string()) schema("threefold.generators must be an array of names");
    names.push_back(g.get<std::string>());
  }
  const json& T = require(j, "T", where);
  if (!T.is_array()) schema("threefold.T must be a nested array");
  std::vector<std::vector<std::vector<Rat>>> form;
  for (std::size_t a = 0; a < T.size(); ++a) {
    if (!T[a].is_array()) schema("threefold.T must be a nested array");
    std::vector<std::vector<Rat>> plane;
    for (std::size_t b = 0; b < T[a].size(); ++b)
      plane.push_back(rats_from_json(T[a][b], "threefold.T[" + std::to_string(a) + "][" +
                                                  std::to_string(b) + "]"));
    form.push_back(std::move(plane));
  }
  std::optional<std::vector<CurveClass>> lattice;
  if (j.contains("curve_lattice")) {
    const json& lat = j["curve_lattice"];
    if (!lat.is_array()) schema("threefold.curve_lattice must be an array of pairing vectors");
    lattice.emplace();
    for (std::size_t i = 0; i < lat.size(); ++i)
      lattice->push_back(curve_from_json(lat[i], "threefold.curve_lattice[" + std::to_string(i) + "]"));
  }
  return Threefold::make(std::move(names), form, div_from_json(require(j, "c1X", where), "threefold.c1X"),
                         curve_from_json(require(j, "c2X", where), "threefold.c2X"),
                         std::move(lattice));
}

json preset_to_json(const CIPreset& p) { return {{"ambient", p.ambient}, {"degrees", p.degrees}}; }

CIPreset preset_from_json(const json& j) {
  require_keys_subset(j, {"ambient", "degrees"}, "preset");
  const long n = long_from_json(require(j, "ambient", "preset"), "preset.ambient");
  const json& d = require(j, "degrees", "preset");
  if (!d.is_array()) schema("preset.degrees must be an array of integers");
  std::vector<int> degrees;
  for (std::size_t i = 0; i < d.size(); ++i)
    degrees.push_back(static_cast<int>(long_from_json(d[i], "preset.degrees[" + std::to_string(i) + "]")));
  return CIPreset::make(static_cast<int>(n), std::move(degrees));
}

json chern_to_json(const ChernData& F) {
  return {{"rank", F.rank},
          {"c1", div_to_json(F.c1)},
          {"c2", curve_to_json(F.c2)},
          {"c3", rat_to_json(F.c3.value)}};
}

ChernData chern_from_json(const Threefold& X, const json& j, const std::string& where) {
  require_keys_subset(j, {"rank", "c1", "c2", "c3"}, where);
  ChernData F = ChernData::trivial(X, long_from_json(require(j, "rank", where), where + ".rank"));
  if (j.contains("c1")) F.c1 = div_from_json(j["c1"], where + ".c1");
  if (j.contains("c2")) F.c2 = curve_from_json(j["c2"], where + ".c2");
  if (j.contains("c3")) F.c3 = {rat_from_json(j["c3"], where + ".c3")};
  validate(X, F);
  return F;
}

json ledger_to_json(const CohomologyLedger& l) {
  json out = {{"h0_N", l.h0_N}, {"h0_F", l.h0_F}};
  if (l.h0_IF) out["h0_IF"] = *l.h0_IF;
  out["h1_IC_zero"] = l.h1_IC_zero;
  return out;
}

CohomologyLedger ledger_from_json(const json& j) {
  require_keys_subset(j, {"h0_N", "h0_F", "h0_IF", "h1_IC_zero"}, "ledger");
  CohomologyLedger l;
  l.h0_N = long_from_json(require(j, "h0_N", "ledger"), "ledger.h0_N");
  l.h0_F = long_from_json(require(j, "h0_F", "ledger"), "ledger.h0_F");
  if (j.contains("h0_IF") && !j["h0_IF"].is_null())
    l.h0_IF = long_from_json(j["h0_IF"], "ledger.h0_IF");
  if (j.contains("h1_IC_zero")) {
    if (!j["h1_IC_zero"].is_boolean()) schema("ledger.h1_IC_zero must be a boolean");
    l.h1_IC_zero = j["h1_IC_zero"].get<bool>();
  }
  return l;
}

json moduli_to_json(const ModuliReport& r) {
  return {{"threefold", r.threefold},
          {"sheaf", chern_to_json(r.sheaf)},
          {"ext_euler", rat_to_json(r.ext_euler)},
          {"expected_dim", rat_to_json(r.expected_dim)}};
}

json dzero_to_json(const DZeroReport& r) {
  json out = {{"threefold", r.label},
              {"condition", {{"a", rat_to_json(r.condition.a)},
                             {"b", rat_to_json(r.condition.b)},
                             {"e", rat_to_json(r.condition.e)}}},
              {"relation", r.relation.str()},
              {"relation_coefficients",
               {{"A", r.relation.A.get_str()}, {"B", r.relation.B.get_str()}, {"E", r.relation.E.get_str()}}},
              {"lattice_step", rat_to_json(r.lattice_step)},
              {"k_range", pair_to_json({r.k.lo, r.k.hi})},
              {"c_range", pair_to_json({r.c.lo, r.c.hi})},
              {"status", std::string(to_string(r.status))},
              {"solvable", r.status == DZeroStatus::Solvable || r.status == DZeroStatus::IdenticallyZero}};
  if (r.obstruction)
    out["certificate"] = {{"modulus", r.obstruction->modulus},
                          {"rhs_residues", r.obstruction->rhs_residues},
                          {"description", r.obstruction->description}};
  if (r.classes)
    out["k_classes"] = {{"modulus", r.classes->modulus}, {"residues", r.classes->k_residues}};
  json w = json::array();
  for (const auto& p : r.witnesses) w.push_back(pair_to_json(p));
  out["witnesses"] = std::move(w);
  out["enumeration"] = {{"points", r.enumerated_points},
                        {"zeros", r.enumerated_zeros},
                        {"agrees", r.enumeration_agrees}};
  return out;
}

json claims_to_json(const PaperClaimsReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json je = {{"preset", e.preset},
               {"expected", e.expect_solvable ? "solvable" : "obstructed"},
               {"ok", e.ok},
               {"note", e.note}};
    if (e.expected_relation) je["expected_relation"] = e.expected_relation->str();
    if (!e.report.label.empty()) je["report"] = dzero_to_json(e.report);
    entries.push_back(std::move(je));
  }
  return {{"passed", r.all_ok()}, {"entries", std::move(entries)}};
}

json tensor_report_to_json(const TensorVerifyReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    json jp = {{"r1", p.r1}, {"r2", p.r2}, {"random_trials", p.random_trials},
               {"grid_points", p.grid_points}, {"passed", p.passed}};
    if (p.counterexample)
      jp["counterexample"] = {{"rootsE", roots_to_json(p.counterexample->spec.rootsE)},
                              {"rootsF", roots_to_json(p.counterexample->spec.rootsF)},
                              {"from_roots", scalar_to_json(p.counterexample->from_roots)},
                              {"closed_form", scalar_to_json(p.counterexample->closed_form)}};
    pairs.push_back(std::move(jp));
  }
  return {{"max_rank", r.max_rank}, {"trials", r.trials}, {"seed", r.seed},
          {"passed", r.all_passed()}, {"pairs", std::move(pairs)}};
}

}  // namespace chern3::json_io
