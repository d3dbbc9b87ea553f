// ptmnc: decide with exact arithmetic whether prepare-transform-measure data
// admits a classical (noncontextual) model, derive the inequalities that
// carve out the classical set, and reconstruct explicit classical models.
//
// Exit codes: 0 success (and "classical" verdicts), 1 nonclassical verdict,
// 2 input error, 3 resource budget exhausted.

#include <CLI11.hpp>
#include <iostream>
#include <random>
#include <optional>
#include <string>

#include "ptmnc/errors.hpp"
#include "ptmnc/fm.hpp"
#include "ptmnc/json_io.hpp"
#include "ptmnc/model.hpp"
#include "ptmnc/robustness.hpp"

namespace {

using namespace ptmnc;

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_file(out_path, j);
  }
}

GptFragment load_fragment(const std::string& path) {
  GptFragment f = fragment_from_json(load_json_file(path));
  const ValidationReport rep = validate(f);
  if (!rep.passed()) {
    std::string msg = "scenario '" + path + "' is invalid:";
    for (const auto& i : rep.structural) msg += "\n  " + i.code + ": " + i.detail;
    for (const auto& i : rep.violations) msg += "\n  " + i.code + ": " + i.detail;
    throw InputError(msg);
  }
  return f;
}

struct Pipeline {
  GptFragment fragment;
  IdentitySet s_ids, e_ids, t_ids;
  VRep phi, psi;

  explicit Pipeline(const std::string& scenario_path)
      : fragment(load_fragment(scenario_path)),
        s_ids(state_identities(fragment)),
        e_ids(effect_identities(fragment)),
        t_ids(transformation_identities(fragment)),
        phi(enumerate_vertices(measurement_polytope(fragment, e_ids))),
        psi(enumerate_vertices(source_polytope(fragment, s_ids))) {}

  NcProgram program(const DataTable& data) const {
    return build_program(phi, psi, t_ids, data, fragment.states.size());
  }
};

DataTable load_table(const std::string& path, const GptFragment& f) {
  DataTable t = data_table_from_json(load_json_file(path));
  for (const auto& [kid, _k] : f.effects) {
    for (const auto& [sid, _s] : f.states) {
      for (const auto& [tid, _t] : f.transformations) {
        t.at({kid, sid, tid});  // throws on missing keys
      }
    }
  }
  return t;
}

// Placeholder table (all zeros) for commands that only use the program
// skeleton; the data rows of b are never read by them.
DataTable placeholder_table(const Pipeline& pipe) {
  DataTable t;
  for (const auto& [kid, _k] : pipe.fragment.effects) {
    for (const auto& [sid, _s] : pipe.fragment.states) {
      for (const auto& [tid, _t] : pipe.fragment.transformations) {
        t.entries[{kid, sid, tid}] = 0;
      }
    }
  }
  return t;
}

// Classify random tables by the derived inequalities and by the LP and count
// agreements. Half the tables come from random classical models (always
// satisfiable), half are random normalized tables.
json run_oracle_check(const Pipeline& pipe, const NcProgram& skeleton,
                      const std::vector<NcInequality>& ineqs, std::size_t n,
                      unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::size_t agree = 0, feasible = 0, infeasible = 0;
  for (std::size_t trial = 0; trial < n; ++trial) {
    DataTable table;
    if (trial % 2 == 0) {
      for (const auto& [sid, _s] : pipe.fragment.states) {
        for (const auto& [tid, _t] : pipe.fragment.transformations) {
          for (const auto& m : pipe.fragment.measurements) {
            Rational left(1);
            for (std::size_t i = 0; i < m.size(); ++i) {
              Rational p = (i + 1 == m.size())
                               ? left
                               : Rational(static_cast<long>(rng() % 65), 64);
              if (p > left) p = left;
              left -= p;
              table.entries[{m[i], sid, tid}] = p;
            }
          }
        }
      }
    } else {
      const std::size_t nt = skeleton.t_ids.size();
      RationalVector pk(skeleton.n_psi);
      Rational total;
      for (auto& v : pk) {
        v = Rational(static_cast<long>(rng() % 16 + 1));
        total += v;
      }
      RationalVector x(skeleton.cols());
      for (std::size_t k = 0; k < skeleton.n_psi; ++k) {
        for (std::size_t t = 0; t < nt; ++t) {
          RationalVector cond(skeleton.n_phi);
          Rational csum;
          for (auto& v : cond) {
            v = Rational(static_cast<long>(rng() % 16 + 1));
            csum += v;
          }
          for (std::size_t kp = 0; kp < skeleton.n_phi; ++kp)
            x[skeleton.col_index(kp, k, t)] = pk[k] / total * cond[kp] / csum;
        }
      }
      for (std::size_t r = 0; r < skeleton.rows(); ++r) {
        if (skeleton.row_tags[r].kind != RowTag::Kind::data) continue;
        Rational p;
        for (std::size_t j = 0; j < skeleton.cols(); ++j) {
          if (skeleton.M.at(r, j) != 0 && x[j] != 0)
            p += skeleton.M.at(r, j) * x[j];
        }
        table.entries[skeleton.row_tags[r].key] = p;
      }
    }
    bool by_ineqs = true;
    for (const auto& ineq : ineqs) {
      if (!evaluate(ineq, table).satisfied) {
        by_ineqs = false;
        break;
      }
    }
    const bool by_lp = certify(with_data(skeleton, table)).verdict ==
                       CertResult::Verdict::feasible;
    if (by_ineqs == by_lp) ++agree;
    (by_lp ? feasible : infeasible)++;
  }
  return {{"tables", n},
          {"agreements", agree},
          {"classical", feasible},
          {"nonclassical", infeasible}};
}

std::vector<std::pair<std::string, RationalMatrix>> pick_transformations(
    const GptFragment& f, const std::string& csv) {
  std::vector<std::pair<std::string, RationalMatrix>> out;
  if (csv.empty()) return f.transformations;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string id = csv.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (id.empty()) throw InputError("empty transformation id in list");
    out.push_back(f.transformations[f.transformation_index(id)]);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact classicality certification for prepare-transform-measure data"};
  app.require_subcommand(1);

  std::string scenario_path, data_path, ineq_path, target_path, out_path;
  std::string out_dir = ".";
  std::string kind = "states", which = "measurement";
  std::string precision = "1/1024";
  std::size_t row_budget = 1'000'000;
  std::size_t oracle_check = 0;
  unsigned long seed = 20250810;
  bool no_redundancy_filter = false;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the JSON artifact here");
  };

  auto* c_example = app.add_subcommand(
      "example", "write a built-in scenario and its data tables");
  std::string example_name = "stabilizer-qubit";
  c_example->add_option("name", example_name,
                        "built-in example (stabilizer-qubit)");
  c_example->add_option("--out-dir", out_dir, "directory for the JSON files");

  auto* c_ident = app.add_subcommand(
      "identities", "generating set of linear operational identities");
  c_ident->add_option("scenario", scenario_path)->required();
  c_ident->add_option("--kind", kind, "states|effects|transformations");
  add_out(c_ident);

  auto* c_poly = app.add_subcommand(
      "polytope", "vertices of an assignment polytope");
  c_poly->add_option("scenario", scenario_path)->required();
  c_poly->add_option("--which", which, "measurement|source");
  add_out(c_poly);

  auto* c_cert = app.add_subcommand(
      "certify", "decide whether a data table admits a classical model");
  c_cert->add_option("scenario", scenario_path)->required();
  c_cert->add_option("data", data_path)->required();
  add_out(c_cert);

  auto* c_enum = app.add_subcommand(
      "enumerate-inequalities",
      "derive the complete set of noncontextuality inequalities");
  c_enum->add_option("scenario", scenario_path)->required();
  c_enum->add_option("--row-budget", row_budget,
                     "cap on live rows during elimination");
  c_enum->add_flag("--no-redundancy-filter", no_redundancy_filter,
                   "skip the exact-LP redundancy post-pass");
  c_enum->add_option("--oracle-check", oracle_check,
                     "cross-check the set against the LP verdict on this "
                     "many random tables");
  c_enum->add_option("--seed", seed, "seed for randomized checks");
  add_out(c_enum);

  auto* c_eval = app.add_subcommand(
      "evaluate", "evaluate an inequality on a data table");
  c_eval->add_option("inequality", ineq_path)->required();
  c_eval->add_option("data", data_path)->required();
  add_out(c_eval);

  auto* c_bound = app.add_subcommand(
      "bound", "exact classical bound of an inequality over a scenario");
  c_bound->add_option("scenario", scenario_path)->required();
  c_bound->add_option("inequality", ineq_path)->required();
  add_out(c_bound);

  auto* c_model = app.add_subcommand(
      "model", "build and verify an explicit classical model");
  c_model->add_option("scenario", scenario_path)->required();
  c_model->add_option("data", data_path)->required();
  add_out(c_model);

  auto* c_lump = app.add_subcommand(
      "lump", "compose two transformation stages into one scenario");
  std::string first_csv, second_csv;
  c_lump->add_option("scenario", scenario_path)->required();
  c_lump->add_option("--first", first_csv,
                     "comma-separated transformation ids of the first stage "
                     "(default: all)");
  c_lump->add_option("--second", second_csv,
                     "comma-separated transformation ids of the second stage "
                     "(default: all)");
  add_out(c_lump);

  auto* c_rob = app.add_subcommand(
      "robustness", "bisect the classicality threshold along a noise segment");
  c_rob->add_option("scenario", scenario_path)->required();
  c_rob->add_option("data", data_path)->required();
  c_rob->add_option("--target", target_path,
                    "feasible mixing target (default: uniform table)");
  c_rob->add_option("--precision", precision, "bracket width, as p/q");
  add_out(c_rob);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_example) {
      if (example_name != "stabilizer-qubit")
        throw InputError("unknown example '" + example_name + "'");
      const GptFragment f = stabilizer_qubit_fragment();
      write_json_file(out_dir + "/scenario.json", to_json(f));
      write_json_file(out_dir + "/data.json", to_json(predict(f)));
      std::cout << "wrote " << out_dir << "/scenario.json and " << out_dir
                << "/data.json\n";
    } else if (*c_ident) {
      const GptFragment f = load_fragment(scenario_path);
      const ProcessKind k = process_kind_from_string(kind);
      IdentitySet ids;
      if (k == ProcessKind::states) ids = state_identities(f);
      if (k == ProcessKind::effects) ids = effect_identities(f);
      if (k == ProcessKind::transformations) ids = transformation_identities(f);
      emit(to_json(ids), out_path);
    } else if (*c_poly) {
      const GptFragment f = load_fragment(scenario_path);
      HPolytope p;
      if (which == "measurement") {
        p = measurement_polytope(f, effect_identities(f));
      } else if (which == "source") {
        p = source_polytope(f, state_identities(f));
      } else {
        throw InputError("--which must be measurement or source");
      }
      emit(to_json(enumerate_vertices(p)), out_path);
    } else if (*c_cert) {
      const Pipeline pipe(scenario_path);
      const DataTable data = load_table(data_path, pipe.fragment);
      const NcProgram prog = pipe.program(data);
      const CertResult res = certify(prog);
      emit(to_json(res, prog), out_path);
      return res.verdict == CertResult::Verdict::infeasible ? 1 : 0;
    } else if (*c_enum) {
      const Pipeline pipe(scenario_path);
      const NcProgram skeleton = pipe.program(placeholder_table(pipe));
      FmOptions opts;
      opts.row_budget = row_budget;
      opts.lp_redundancy_filter = !no_redundancy_filter;
      const EliminationResult fc =
          eliminate_all(build_ineq_system(skeleton, true), opts);
      EliminationResult res = fc;
      res.inequalities =
          to_original(fc.inequalities, pipe.fragment.states.size());
      json j = to_json(res);
      if (oracle_check > 0 && res.complete) {
        j["oracle_check"] = run_oracle_check(pipe, skeleton, res.inequalities,
                                             oracle_check, seed);
      }
      emit(j, out_path);
      return res.complete ? 0 : 3;
    } else if (*c_eval) {
      const NcInequality ineq = inequality_from_json(load_json_file(ineq_path));
      const DataTable data = data_table_from_json(load_json_file(data_path));
      const EvalResult res = evaluate(ineq, data);
      emit({{"value", to_string(res.value)},
            {"constant", to_string(ineq.constant)},
            {"satisfied", res.satisfied}},
           out_path);
    } else if (*c_bound) {
      const Pipeline pipe(scenario_path);
      const NcInequality ineq = inequality_from_json(load_json_file(ineq_path));
      const NcProgram skeleton = pipe.program(placeholder_table(pipe));
      emit({{"bound", to_string(nc_bound(ineq, skeleton))}}, out_path);
    } else if (*c_model) {
      const Pipeline pipe(scenario_path);
      const DataTable data = load_table(data_path, pipe.fragment);
      const NcProgram prog = pipe.program(data);
      const CertResult res = certify(prog);
      if (res.verdict == CertResult::Verdict::infeasible) {
        emit(to_json(res, prog), out_path);
        return 1;
      }
      const OntModel m = build_model(res.x, pipe.phi, pipe.psi, prog);
      const ModelReport rep = verify_model(m, pipe.fragment, data, pipe.s_ids,
                                           pipe.e_ids, pipe.t_ids);
      emit({{"model", to_json(m)}, {"verification", to_json(rep)}}, out_path);
    } else if (*c_lump) {
      const GptFragment f = load_fragment(scenario_path);
      const LumpResult res = lump(pick_transformations(f, first_csv),
                                  pick_transformations(f, second_csv), f);
      json j = to_json(res.fragment);
      json merged = json::array();
      for (const auto& [dropped, kept] : res.merged)
        merged.push_back({{"dropped", dropped}, {"kept", kept}});
      emit({{"scenario", j}, {"merged", merged}}, out_path);
    } else if (*c_rob) {
      const Pipeline pipe(scenario_path);
      const DataTable data = load_table(data_path, pipe.fragment);
      const DataTable target = target_path.empty()
                                   ? uniform_table(pipe.fragment)
                                   : load_table(target_path, pipe.fragment);
      const NcProgram prog = pipe.program(data);
      const RobustnessResult res =
          robustness_scan(prog, data, target, parse_rational(precision));
      emit(to_json(res), out_path);
    }
    return 0;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
