#include "ptmnc/polytope.hpp"

#include <algorithm>
#include <set>

#include "ptmnc/lp.hpp"

namespace ptmnc {

HPolytope measurement_polytope(const GptFragment& f, const IdentitySet& ids) {
  if (ids.kind != ProcessKind::effects)
    throw InputError("measurement_polytope expects effect identities");
  if (ids.process_ids != f.effect_ids())
    throw InputError("identity set does not match the fragment's effects");
  HPolytope p;
  p.num_vars = f.effects.size();
  p.var_labels = f.effect_ids();
  for (const auto& m : f.measurements) {
    LinearConstraint c{RationalVector(p.num_vars), Rational(1)};
    for (const auto& id : m) c.coeffs[f.effect_index(id)] += 1;
    p.equalities.push_back(std::move(c));
  }
  for (const auto& gen : ids.generators) {
    p.equalities.push_back({gen, Rational(0)});
  }
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    LinearConstraint c{RationalVector(p.num_vars), Rational(0)};
    c.coeffs[j] = 1;
    p.inequalities.push_back(std::move(c));
  }
  return p;
}

HPolytope source_polytope(const GptFragment& f, const IdentitySet& ids) {
  if (ids.kind != ProcessKind::states)
    throw InputError("source_polytope expects state identities");
  if (ids.process_ids != f.state_ids())
    throw InputError("identity set does not match the fragment's states");
  HPolytope p;
  p.num_vars = f.states.size();
  p.var_labels = f.state_ids();
  p.equalities.push_back(
      {RationalVector(p.num_vars, Rational(1)), Rational(1)});
  for (const auto& gen : ids.generators) {
    p.equalities.push_back({gen, Rational(0)});
  }
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    LinearConstraint c{RationalVector(p.num_vars), Rational(0)};
    c.coeffs[j] = 1;
    p.inequalities.push_back(std::move(c));
  }
  return p;
}

bool contains(const HPolytope& p, const RationalVector& x) {
  if (x.size() != p.num_vars) return false;
  for (const auto& c : p.equalities) {
    if (dot(c.coeffs, x) != c.rhs) return false;
  }
  for (const auto& c : p.inequalities) {
    if (dot(c.coeffs, x) < c.rhs) return false;
  }
  return true;
}

namespace {

void check_feasible(const HPolytope& p) {
  LpProblem lp;
  lp.num_vars = p.num_vars;
  lp.free_vars.assign(p.num_vars, true);
  for (const auto& c : p.equalities)
    lp.rows.push_back({c.coeffs, Relation::eq, c.rhs});
  for (const auto& c : p.inequalities)
    lp.rows.push_back({c.coeffs, Relation::ge, c.rhs});
  if (solve_lp(lp).status == LpStatus::infeasible)
    throw EmptyPolytopeError("polytope is empty");
}

void check_bounded(const HPolytope& p) {
  // The recession cone {Ed = 0, Gd >= 0} must be trivial. Probe each
  // coordinate over the cone intersected with the unit box.
  LpProblem cone;
  cone.num_vars = p.num_vars;
  cone.free_vars.assign(p.num_vars, true);
  for (const auto& c : p.equalities)
    cone.rows.push_back({c.coeffs, Relation::eq, Rational(0)});
  for (const auto& c : p.inequalities)
    cone.rows.push_back({c.coeffs, Relation::ge, Rational(0)});
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    RationalVector e(p.num_vars);
    e[j] = 1;
    cone.rows.push_back({e, Relation::le, Rational(1)});
    e[j] = -1;
    cone.rows.push_back({std::move(e), Relation::le, Rational(1)});
  }
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    for (int sign : {1, -1}) {
      cone.objective.assign(p.num_vars, Rational());
      cone.objective[j] = sign;  // minimize +/- d_j
      LpSolution sol = solve_lp(cone);
      if (sol.status != LpStatus::optimal)
        throw DomainError("recession cone probe did not solve");
      if (sol.objective < 0)
        throw UnboundedPolytopeError("polytope is unbounded");
    }
  }
}

}  // namespace

VRep enumerate_vertices(const HPolytope& p) {
  check_feasible(p);
  check_bounded(p);

  std::vector<RationalVector> eq_rows;
  for (const auto& c : p.equalities) eq_rows.push_back(c.coeffs);
  std::size_t eq_rank =
      eq_rows.empty() ? 0 : rank(RationalMatrix::from_rows(eq_rows));
  if (eq_rank > p.num_vars) throw DomainError("equality rank exceeds vars");
  std::size_t need = p.num_vars - eq_rank;
  if (need > p.inequalities.size())
    throw EmptyPolytopeError("not enough constraints for a vertex");

  std::set<RationalVector> found;
  std::vector<std::size_t> pick(need);
  for (std::size_t i = 0; i < need; ++i) pick[i] = i;
  bool done = false;
  while (!done) {
    RationalMatrix sys(p.equalities.size() + need, p.num_vars);
    RationalVector rhs(sys.rows());
    std::size_t r = 0;
    for (const auto& c : p.equalities) {
      for (std::size_t j = 0; j < p.num_vars; ++j) sys.at(r, j) = c.coeffs[j];
      rhs[r++] = c.rhs;
    }
    for (std::size_t i : pick) {
      const auto& c = p.inequalities[i];
      for (std::size_t j = 0; j < p.num_vars; ++j) sys.at(r, j) = c.coeffs[j];
      rhs[r++] = c.rhs;
    }
    if (rank(sys) == p.num_vars) {
      if (auto x = solve_linear(sys, rhs)) {
        if (contains(p, *x)) found.insert(std::move(*x));
      }
    }
    // advance the combination
    if (need == 0) break;
    std::size_t i = need;
    while (i > 0) {
      --i;
      if (pick[i] + (need - i) < p.inequalities.size()) {
        ++pick[i];
        for (std::size_t j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
        break;
      }
      if (i == 0) done = true;
    }
  }
  VRep v;
  v.var_labels = p.var_labels;
  v.vertices.assign(found.begin(), found.end());  // set order: lexicographic
  if (v.vertices.empty()) throw EmptyPolytopeError("polytope has no vertex");
  return v;
}

}  // namespace ptmnc
