#pragma once

#include <cstdint>
#include <vector>

#include "ptmnc/program.hpp"

namespace ptmnc {

// One row of the parametric system: unknowns (the p(kappa' kappa|t)) with
// symbolic data terms and a constant, either an equality or a >= 0 row:
//   unknown_coeffs.x + data_coeffs.d + constant  (= 0 | >= 0)
struct SymbolicRow {
  RationalVector unknown_coeffs;
  RationalVector data_coeffs;
  Rational constant;
  bool is_equality = false;
  std::vector<std::uint64_t> ancestors;  // bitset over post-substitution rows
};

struct IneqSystem {
  std::size_t num_unknowns = 0;
  std::vector<DataKey> data_symbols;
  std::vector<SymbolicRow> rows;
};

// The program's rows plus positivity, with the data entries of b turned into
// symbols. flag_convexified divides the data rows by N, so the symbols mean
// p(k s-bar | t) = p(k|s,t)/N; otherwise they mean p(k|s,t).
IneqSystem build_ineq_system(const NcProgram& prog, bool flag_convexified);

struct FmOptions {
  std::size_t row_budget = 1'000'000;  // max live rows at any point
  bool chernikov = true;
  bool lp_redundancy_filter = true;  // exact post-pass on the final set
};

struct EliminationResult {
  std::vector<NcInequality> inequalities;  // canonical, sorted, duplicate-free
  bool complete = true;
  std::size_t max_live_rows = 0;
  std::size_t fm_steps = 0;
};

// Eliminates every unknown: equalities by exact substitution first, the rest
// by Chernikov-refined Fourier-Motzkin. A data table satisfies the returned
// inequalities iff the original system is feasible for it (when complete).
// Data-level equalities are emitted as inequality pairs.
EliminationResult eliminate_all(const IneqSystem& sys, const FmOptions& opts = {});

// Appendix-B mapping: identical coefficients, constant scaled by N, then
// re-canonicalized.
std::vector<NcInequality> to_original(const std::vector<NcInequality>& ineqs,
                                      std::size_t n_states);

}  // namespace ptmnc
