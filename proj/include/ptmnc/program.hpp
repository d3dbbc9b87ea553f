#pragma once

#include <map>
#include <string>
#include <vector>

#include "ptmnc/fragment.hpp"
#include "ptmnc/identities.hpp"
#include "ptmnc/linalg.hpp"
#include "ptmnc/polytope.hpp"

namespace ptmnc {

struct RowTag {
  enum class Kind {
    normalization,              // one per t: sum_{k'k} p(k'k|t) = 1
    causal_independence,        // per kappa and unordered pair t < t'
    transformation_identity,    // per (kappa', kappa, generator)
    data,                       // per (k, s, t): N sum PhiPsi p = p(k|s,t)
  };
  Kind kind;
  std::size_t t = 0, t2 = 0;
  std::size_t kappa = 0, kappa_prime = 0, generator = 0;
  DataKey key;  // data rows only
};

// The feasibility program M.x = b, x >= 0 over unknowns p(kappa' kappa | t).
struct NcProgram {
  RationalMatrix M;
  RationalVector b;
  std::vector<RowTag> row_tags;
  std::size_t n_phi = 0;     // |kappa'|
  std::size_t n_psi = 0;     // |kappa|
  std::size_t n_states = 0;  // N
  std::vector<std::string> effect_ids, state_ids, t_ids;
  std::vector<DataKey> data_keys;  // data-row order

  std::size_t col_index(std::size_t kappa_prime, std::size_t kappa,
                        std::size_t t) const {
    return (kappa_prime * n_psi + kappa) * t_ids.size() + t;
  }
  std::size_t cols() const { return M.cols(); }
  std::size_t rows() const { return M.rows(); }
  std::size_t data_row(const DataKey& key) const;
};

NcProgram build_program(const VRep& phi, const VRep& psi,
                        const IdentitySet& t_identities, const DataTable& data,
                        std::size_t n_states);

// Same program with the data entries of b replaced from another table.
NcProgram with_data(const NcProgram& prog, const DataTable& data);

struct CertResult {
  enum class Verdict { feasible, infeasible };
  Verdict verdict = Verdict::feasible;
  RationalVector x;        // feasible: M.x = b, x >= 0
  RationalVector witness;  // infeasible: 0 <= y.M <= 1 and y.b < 0
  Rational witness_value;  // y.b
};

// Exact verdict; the infeasible witness minimizes y.b over 0 <= y.M <= 1
// (when that dual is unbounded below, a ray with y.M = 0, y.b < 0 is
// returned instead).
CertResult certify(const NcProgram& prog);

// gamma coefficients keyed by (k, s, t); meaning
//   sum gamma_{k,s,t} p(k|s,t) + constant >= 0.
struct NcInequality {
  std::map<DataKey, Rational> coeffs;
  Rational constant;
  bool operator==(const NcInequality&) const = default;
  bool operator<(const NcInequality& o) const;
};

// Witness scale preserved as produced (no rescaling).
NcInequality witness_to_inequality(const CertResult& result,
                                   const NcProgram& prog);

struct EvalResult {
  Rational value;  // sum gamma * p, the beta-style functional
  bool satisfied;  // value + constant >= 0
};

EvalResult evaluate(const NcInequality& ineq, const DataTable& data);

// Exact minimum of sum gamma * p(k|s,t) over all tables expressible through
// the program's non-data rows (the noncontextual bound of the inequality).
Rational nc_bound(const NcInequality& ineq, const NcProgram& skeleton);

// Integerizes coefficients (common denominator, gcd 1). Positive scaling
// only; the relation's direction is preserved.
NcInequality canonicalize(const NcInequality& ineq);

}  // namespace ptmnc
