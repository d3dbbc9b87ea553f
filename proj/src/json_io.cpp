#include "ptmnc/json_io.hpp"

#include <fstream>

#include "ptmnc/errors.hpp"

namespace ptmnc {

namespace {

json rat(const Rational& r) { return to_string(r); }

Rational unrat(const json& j) {
  if (!j.is_string()) throw InputError("expected a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

json vec(const RationalVector& v) {
  json out = json::array();
  for (const Rational& x : v) out.push_back(rat(x));
  return out;
}

RationalVector unvec(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  RationalVector v;
  v.reserve(j.size());
  for (const json& x : j) v.push_back(unrat(x));
  return v;
}

json mat(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec(m.row(r)));
  return out;
}

RationalMatrix unmat(const json& j) {
  if (!j.is_array() || j.empty())
    throw InputError("expected a nested array matrix");
  std::vector<RationalVector> rows;
  for (const json& r : j) rows.push_back(unvec(r));
  return RationalMatrix::from_rows(rows);
}

}  // namespace

json to_json(const GptFragment& f) {
  json j;
  j["dim"] = f.dim;
  j["states"] = json::array();
  for (const auto& [id, v] : f.states)
    j["states"].push_back({{"id", id}, {"vector", vec(v)}});
  j["effects"] = json::array();
  for (const auto& [id, v] : f.effects)
    j["effects"].push_back({{"id", id}, {"vector", vec(v)}});
  j["unit_effect"] = vec(f.unit_effect);
  j["transformations"] = json::array();
  for (const auto& [id, m] : f.transformations)
    j["transformations"].push_back({{"id", id}, {"matrix", mat(m)}});
  j["measurements"] = f.measurements;
  return j;
}

GptFragment fragment_from_json(const json& j) {
  try {
    GptFragment f;
    f.dim = j.at("dim").get<std::size_t>();
    for (const json& s : j.at("states")) {
      f.states.emplace_back(s.at("id").get<std::string>(),
                            unvec(s.at("vector")));
    }
    for (const json& e : j.at("effects")) {
      f.effects.emplace_back(e.at("id").get<std::string>(),
                             unvec(e.at("vector")));
    }
    f.unit_effect = unvec(j.at("unit_effect"));
    for (const json& t : j.at("transformations")) {
      f.transformations.emplace_back(t.at("id").get<std::string>(),
                                     unmat(t.at("matrix")));
    }
    f.measurements =
        j.at("measurements").get<std::vector<std::vector<std::string>>>();
    return f;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad scenario JSON: ") + e.what());
  }
}

json to_json(const DataTable& t) {
  json entries = json::array();
  for (const auto& [key, p] : t.entries) {
    entries.push_back(
        {{"k", key.k}, {"s", key.s}, {"t", key.t}, {"p", rat(p)}});
  }
  return {{"entries", entries}};
}

DataTable data_table_from_json(const json& j) {
  try {
    DataTable t;
    for (const json& e : j.at("entries")) {
      DataKey key{e.at("k").get<std::string>(), e.at("s").get<std::string>(),
                  e.at("t").get<std::string>()};
      if (!t.entries.emplace(key, unrat(e.at("p"))).second)
        throw InputError("duplicate data entry (k=" + key.k + ", s=" + key.s +
                         ", t=" + key.t + ")");
    }
    return t;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad data table JSON: ") + e.what());
  }
}

json to_json(const IdentitySet& ids) {
  json gens = json::array();
  for (const auto& g : ids.generators) gens.push_back(vec(g));
  return {{"kind", to_string(ids.kind)},
          {"ids", ids.process_ids},
          {"generators", gens}};
}

IdentitySet identity_set_from_json(const json& j) {
  try {
    IdentitySet ids;
    ids.kind = process_kind_from_string(j.at("kind").get<std::string>());
    ids.process_ids = j.at("ids").get<std::vector<std::string>>();
    for (const json& g : j.at("generators")) ids.generators.push_back(unvec(g));
    return ids;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad identity set JSON: ") + e.what());
  }
}

json to_json(const VRep& v) {
  json verts = json::array();
  for (const auto& x : v.vertices) verts.push_back(vec(x));
  return {{"labels", v.var_labels}, {"vertices", verts}};
}

VRep vrep_from_json(const json& j) {
  try {
    VRep v;
    v.var_labels = j.at("labels").get<std::vector<std::string>>();
    for (const json& x : j.at("vertices")) v.vertices.push_back(unvec(x));
    return v;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad vertex set JSON: ") + e.what());
  }
}

json to_json(const NcInequality& ineq) {
  json coeffs = json::array();
  for (const auto& [key, g] : ineq.coeffs) {
    coeffs.push_back(
        {{"k", key.k}, {"s", key.s}, {"t", key.t}, {"gamma", rat(g)}});
  }
  return {{"coeffs", coeffs}, {"constant", rat(ineq.constant)}};
}

NcInequality inequality_from_json(const json& j) {
  try {
    NcInequality ineq;
    for (const json& c : j.at("coeffs")) {
      DataKey key{c.at("k").get<std::string>(), c.at("s").get<std::string>(),
                  c.at("t").get<std::string>()};
      ineq.coeffs[key] = unrat(c.at("gamma"));
    }
    ineq.constant = unrat(j.at("constant"));
    return ineq;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad inequality JSON: ") + e.what());
  }
}

json to_json(const CertResult& res, const NcProgram& prog) {
  json j;
  if (res.verdict == CertResult::Verdict::feasible) {
    j["verdict"] = "feasible";
    j["x"] = vec(res.x);
    j["column_order"] = {{"kappa_prime_count", prog.n_phi},
                         {"kappa_count", prog.n_psi},
                         {"t_ids", prog.t_ids}};
  } else {
    j["verdict"] = "infeasible";
    j["witness_inequality"] = to_json(witness_to_inequality(res, prog));
    j["violation"] = rat(res.witness_value);
  }
  return j;
}

json to_json(const OntModel& m) {
  json mu = json::array();
  for (const auto& [key, v] : m.mu)
    mu.push_back({{"s", key.first}, {"kappa", key.second}, {"p", rat(v)}});
  json gamma = json::array();
  for (const auto& [key, v] : m.gamma) {
    gamma.push_back({{"t", std::get<0>(key)},
                     {"kappa_prime", std::get<1>(key)},
                     {"kappa", std::get<2>(key)},
                     {"p", rat(v)}});
  }
  json xi = json::array();
  for (const auto& [key, v] : m.xi)
    xi.push_back({{"k", key.first}, {"kappa_prime", key.second}, {"p", rat(v)}});
  json pk = json::array();
  for (const auto& [k, v] : m.p_kappa)
    pk.push_back({{"kappa", k}, {"p", rat(v)}});
  return {{"ontic_in", m.ontic_in}, {"ontic_out", m.ontic_out},
          {"mu", mu},               {"gamma", gamma},
          {"xi", xi},               {"p_kappa", pk}};
}

json to_json(const ModelReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(
        {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"checks", checks},
          {"notes", rep.notes},
          {"all_passed", rep.all_passed()}};
}

json to_json(const ValidationReport& rep) {
  auto issues = [](const std::vector<ValidationIssue>& v) {
    json out = json::array();
    for (const auto& i : v)
      out.push_back({{"code", i.code}, {"detail", i.detail}});
    return out;
  };
  return {{"structural", issues(rep.structural)},
          {"violations", issues(rep.violations)},
          {"notes", rep.notes},
          {"passed", rep.passed()}};
}

json to_json(const EliminationResult& res) {
  json ineqs = json::array();
  for (const auto& i : res.inequalities) ineqs.push_back(to_json(i));
  return {{"inequalities", ineqs},
          {"complete", res.complete},
          {"max_live_rows", res.max_live_rows},
          {"fm_steps", res.fm_steps}};
}

json to_json(const RobustnessResult& res) {
  json probes = json::array();
  for (const auto& p : res.probes) {
    probes.push_back(
        {{"r", rat(p.r)}, {"verdict", p.feasible ? "feasible" : "infeasible"}});
  }
  return {{"r_lo", rat(res.r_lo)}, {"r_hi", rat(res.r_hi)}, {"probes", probes}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("cannot parse '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace ptmnc
