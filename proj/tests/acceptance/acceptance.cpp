// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Criteria run in order and share the stabilizer pipeline state;
// every comparison is exact rational equality and every runtime cap is
// enforced on the wall clock.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "ptmnc/fm.hpp"
#include "ptmnc/json_io.hpp"
#include "ptmnc/model.hpp"
#include "ptmnc/robustness.hpp"
#include "stabilizer_reference_inequality.hpp"
#include "test_support.hpp"

using namespace ptmnc;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (elapsed >= limit_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
  }
  std::printf("[%s] criterion %2d: %s (%.2fs < %.0fs)%s%s\n",
              ok ? "PASS" : "FAIL", number, label.c_str(), elapsed,
              limit_seconds, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool same_span(const std::vector<RationalVector>& a,
               const std::vector<RationalVector>& b) {
  std::vector<RationalVector> joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  const std::size_t ra = rank(RationalMatrix::from_rows(a));
  const std::size_t rb = rank(RationalMatrix::from_rows(b));
  const std::size_t rj = rank(RationalMatrix::from_rows(joint));
  return ra == rb && rb == rj;
}

RationalVector v6(long a, long b, long c, long d, long e, long f) {
  return {Rational(a), Rational(b), Rational(c),
          Rational(d), Rational(e), Rational(f)};
}

}  // namespace

int main() {
  GptFragment frag;
  IdentitySet s_ids, e_ids, t_ids;
  VRep phi, psi;
  NcProgram program;  // with quantum data
  DataTable quantum, depolarized;

  criterion(1, "stabilizer identity recovery", 1.0, [&](std::string& detail) {
    frag = stabilizer_qubit_fragment();
    if (!validate(frag).passed()) {
      detail = "fragment does not validate";
      return false;
    }
    quantum = predict(frag);
    depolarized = uniform_table(frag);
    s_ids = state_identities(frag);
    e_ids = effect_identities(frag);
    t_ids = transformation_identities(frag);
    if (t_ids.generators.size() != 1) {
      detail = "expected exactly one transformation generator";
      return false;
    }
    const RationalVector expect{Rational(1), Rational(1), Rational(-1),
                                Rational(-1)};
    if (!same_span({t_ids.generators[0]}, {expect})) {
      detail = "transformation generator not proportional to (1,1,-1,-1)";
      return false;
    }
    const std::vector<RationalVector> ref = {v6(1, 1, -1, -1, 0, 0),
                                             v6(1, 1, 0, 0, -1, -1)};
    if (s_ids.generators.size() != 2 || !same_span(s_ids.generators, ref)) {
      detail = "state generators span mismatch";
      return false;
    }
    if (e_ids.generators.size() != 2 || !same_span(e_ids.generators, ref)) {
      detail = "effect generators span mismatch";
      return false;
    }
    return true;
  });

  criterion(2, "assignment polytope vertices", 5.0, [&](std::string& detail) {
    phi = enumerate_vertices(measurement_polytope(frag, e_ids));
    psi = enumerate_vertices(source_polytope(frag, s_ids));
    if (phi.vertices.size() != 8 || psi.vertices.size() != 8) {
      detail = "expected 8 vertices on each side";
      return false;
    }
    for (const auto& v : phi.vertices) {
      for (const Rational& x : v) {
        if (x != 0 && x != 1) {
          detail = "measurement vertex not 0/1";
          return false;
        }
      }
    }
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 6; ++j) {
        if (psi.vertices[i][j] != phi.vertices[i][j] / 3) {
          detail = "source vertices are not the 1/3-scaled patterns";
          return false;
        }
      }
    }
    return true;
  });

  criterion(3, "program shape 260 x 256", 5.0, [&](std::string& detail) {
    program = build_program(phi, psi, t_ids, quantum, 6);
    if (program.cols() != 256) {
      detail = "columns != 256";
      return false;
    }
    if (program.rows() != 260) {
      detail = "rows != 260";
      return false;
    }
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const auto& tag : program.row_tags)
      ++counts[static_cast<int>(tag.kind)];
    if (counts[0] != 4 || counts[1] != 48 || counts[2] != 64 ||
        counts[3] != 144) {
      detail = "row budget is not 4 + 48 + 64 + 144";
      return false;
    }
    return true;
  });

  criterion(4, "quantum data certified nonclassical", 60.0,
            [&](std::string& detail) {
    const CertResult res = certify(program);
    if (res.verdict != CertResult::Verdict::infeasible) {
      detail = "expected infeasible";
      return false;
    }
    for (std::size_t j = 0; j < program.cols(); ++j) {
      Rational ym;
      for (std::size_t i = 0; i < program.rows(); ++i) {
        if (program.M.at(i, j) != 0) ym += res.witness[i] * program.M.at(i, j);
      }
      if (ym < 0 || ym > 1) {
        detail = "witness violates 0 <= y.M <= 1";
        return false;
      }
    }
    if (dot(res.witness, program.b) >= 0) {
      detail = "witness value not negative";
      return false;
    }
    return true;
  });

  criterion(5, "reference inequality: value -12, bound -6", 120.0,
            [&](std::string& detail) {
    const NcInequality ineq = testing::stabilizer_reference_inequality();
    const Rational beta = evaluate(ineq, quantum).value;
    if (beta != -12) {
      detail = "quantum value is " + to_string(beta);
      return false;
    }
    const Rational bound = nc_bound(ineq, program);
    if (bound != -6) {
      detail = "noncontextual bound is " + to_string(bound);
      return false;
    }
    return true;
  });

  criterion(6, "depolarized data: classical model built and verified", 60.0,
            [&](std::string& detail) {
    const NcProgram dep = with_data(program, depolarized);
    const CertResult res = certify(dep);
    if (res.verdict != CertResult::Verdict::feasible) {
      detail = "expected feasible";
      return false;
    }
    const OntModel model = build_model(res.x, phi, psi, dep);
    const ModelReport rep =
        verify_model(model, frag, depolarized, s_ids, e_ids, t_ids);
    if (rep.checks.size() != 5 || !rep.all_passed()) {
      for (const auto& c : rep.checks) {
        if (!c.passed) detail += c.name + " failed; ";
      }
      return false;
    }
    return true;
  });

  criterion(7, "toy scenario: elimination matches the LP oracle on 100 tables",
            300.0, [&](std::string& detail) {
    const testing::ToyScenario sc = testing::make_toy_scenario();
    const EliminationResult res =
        eliminate_all(build_ineq_system(sc.program, false));
    if (!res.complete) {
      detail = "elimination did not complete";
      return false;
    }
    std::mt19937_64 rng(20250810);
    int feasible = 0, infeasible = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const DataTable table =
          (trial % 2 == 0) ? testing::random_raw_table(sc.fragment, rng)
                           : testing::random_model_table(sc.program, rng);
      bool by_ineqs = true;
      for (const auto& ineq : res.inequalities) {
        if (!evaluate(ineq, table).satisfied) {
          by_ineqs = false;
          break;
        }
      }
      const bool by_lp = certify(with_data(sc.program, table)).verdict ==
                         CertResult::Verdict::feasible;
      if (by_ineqs != by_lp) {
        detail = "disagreement at trial " + std::to_string(trial);
        return false;
      }
      (by_lp ? feasible : infeasible)++;
    }
    if (feasible == 0 || infeasible == 0) {
      detail = "both classes must be exercised";
      return false;
    }
    detail = std::to_string(feasible) + " classical / " +
             std::to_string(infeasible) + " nonclassical";
    return true;
  });

  criterion(8, "factor-N mapping commutes with elimination", 300.0,
            [&](std::string& detail) {
    const testing::ToyScenario sc = testing::make_toy_scenario();
    const EliminationResult direct =
        eliminate_all(build_ineq_system(sc.program, false));
    const EliminationResult fc =
        eliminate_all(build_ineq_system(sc.program, true));
    if (!direct.complete || !fc.complete) {
      detail = "elimination did not complete";
      return false;
    }
    const auto mapped =
        to_original(fc.inequalities, sc.fragment.states.size());
    if (mapped != direct.inequalities) {
      detail = "canonical inequality sets differ";
      return false;
    }
    return true;
  });

  criterion(9, "robustness bracket of width 1/1024", 600.0,
            [&](std::string& detail) {
    const RobustnessResult res =
        robustness_scan(program, quantum, depolarized, Rational(1, 1024));
    if (res.r_hi - res.r_lo > Rational(1, 1024)) {
      detail = "bracket too wide";
      return false;
    }
    bool lo_checked = false, hi_checked = false;
    for (const auto& p : res.probes) {
      if (p.r == res.r_lo && !p.feasible) lo_checked = true;
      if (p.r == res.r_hi && p.feasible) hi_checked = true;
    }
    if (!lo_checked || !hi_checked) {
      detail = "bracket endpoints not certified";
      return false;
    }
    for (const auto& a : res.probes) {
      for (const auto& b : res.probes) {
        if (!a.feasible && b.feasible && b.r < a.r) {
          detail = "feasibility not monotone along the segment";
          return false;
        }
      }
    }
    detail = "bracket [" + to_string(res.r_lo) + ", " + to_string(res.r_hi) +
             "]";
    return true;
  });

  criterion(10, "lumping {I,Z} x {I,S} recovers the scenario", 60.0,
            [&](std::string& detail) {
    std::vector<std::pair<std::string, RationalMatrix>> first = {
        frag.transformations[0], frag.transformations[1]};
    std::vector<std::pair<std::string, RationalMatrix>> second = {
        frag.transformations[0], frag.transformations[2]};
    const LumpResult lumped = lump(first, second, frag);
    if (lumped.fragment.transformations.size() != 4) {
      detail = "expected 4 lumped transformations";
      return false;
    }
    const IdentitySet lumped_tids =
        transformation_identities(lumped.fragment);
    if (lumped_tids.generators.size() != 1) {
      detail = "expected one lumped identity generator";
      return false;
    }
    // the generator must express I + Z = S + S^-1 over the lumped matrices
    const RationalVector& g = lumped_tids.generators[0];
    for (std::size_t i = 0; i < 4; ++i) {
      const RationalMatrix& m = lumped.fragment.transformations[i].second;
      Rational expect;
      if (m == frag.transformations[0].second ||
          m == frag.transformations[1].second) {
        expect = 1;  // I and Z
      } else {
        expect = -1;  // S and S^-1
      }
      if (g[i] != expect) {
        detail = "generator does not encode (I+Z) - (S+Sinv) = 0";
        return false;
      }
    }
    const DataTable lumped_data = predict(lumped.fragment);
    const NcProgram lumped_prog = build_program(
        enumerate_vertices(
            measurement_polytope(lumped.fragment,
                                 effect_identities(lumped.fragment))),
        enumerate_vertices(source_polytope(
            lumped.fragment, state_identities(lumped.fragment))),
        lumped_tids, lumped_data, 6);
    if (certify(lumped_prog).verdict != CertResult::Verdict::infeasible) {
      detail = "lumped quantum data should be nonclassical";
      return false;
    }
    return true;
  });

  if (failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", failures);
  }
  return failures;
}
