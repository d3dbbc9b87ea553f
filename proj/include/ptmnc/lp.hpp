#pragma once

#include <cstddef>
#include <vector>

#include "ptmnc/rational.hpp"

namespace ptmnc {

enum class Relation { eq, le, ge };

struct LpRow {
  RationalVector coeffs;
  Relation rel = Relation::eq;
  Rational rhs;
};

// minimize objective . x  subject to rows, with x_j >= 0 unless free_vars[j].
struct LpProblem {
  std::size_t num_vars = 0;
  RationalVector objective;
  std::vector<LpRow> rows;
  std::vector<bool> free_vars;  // empty means all nonnegative
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::optimal;
  Rational objective;
  RationalVector x;

  // Optimal simplex multipliers, one per original row (zero for rows that
  // turned out redundant). Satisfies, at optimality,
  //   objective(x) == sum_i row_duals[i] * rhs[i] + contributions of
  //   nonbasic-at-bound columns; tests check the usual sign conditions.
  RationalVector row_duals;

  // For infeasible problems: y with y.rhs > 0, y.A <= 0 on all columns of
  // nonnegative variables, y.A == 0 on free variables, and the relation sign
  // conditions y_i <= 0 for 'le' rows, y_i >= 0 for 'ge' rows.
  RationalVector farkas;
};

// Exact two-phase primal simplex. Deterministic: Dantzig pricing with
// lowest-index tie-breaks, falling back to Bland's rule after a run of
// degenerate pivots.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace ptmnc
