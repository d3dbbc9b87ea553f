#include "ptmnc/program.hpp"

#include <algorithm>

#include "ptmnc/errors.hpp"
#include "ptmnc/lp.hpp"

namespace ptmnc {

std::size_t NcProgram::data_row(const DataKey& key) const {
  for (std::size_t r = 0; r < row_tags.size(); ++r) {
    if (row_tags[r].kind == RowTag::Kind::data && row_tags[r].key == key)
      return r;
  }
  throw InputError("program has no data row for (k=" + key.k + ", s=" + key.s +
                   ", t=" + key.t + ")");
}

NcProgram build_program(const VRep& phi, const VRep& psi,
                        const IdentitySet& t_identities, const DataTable& data,
                        std::size_t n_states) {
  if (t_identities.kind != ProcessKind::transformations)
    throw InputError("build_program expects transformation identities");
  if (psi.var_labels.size() != n_states)
    throw InputError("state count does not match the source polytope");

  NcProgram prog;
  prog.n_phi = phi.vertices.size();
  prog.n_psi = psi.vertices.size();
  prog.n_states = n_states;
  prog.effect_ids = phi.var_labels;
  prog.state_ids = psi.var_labels;
  prog.t_ids = t_identities.process_ids;

  const std::size_t nt = prog.t_ids.size();
  const std::size_t cols = prog.n_phi * prog.n_psi * nt;
  const std::size_t n_gen = t_identities.generators.size();
  const std::size_t rows = nt + prog.n_psi * (nt * (nt - 1) / 2) +
                           prog.n_phi * prog.n_psi * n_gen +
                           prog.effect_ids.size() * prog.state_ids.size() * nt;
  prog.M = RationalMatrix(rows, cols);
  prog.b.assign(rows, Rational());
  prog.row_tags.reserve(rows);

  std::size_t r = 0;
  for (std::size_t t = 0; t < nt; ++t) {
    for (std::size_t kp = 0; kp < prog.n_phi; ++kp) {
      for (std::size_t k = 0; k < prog.n_psi; ++k) {
        prog.M.at(r, prog.col_index(kp, k, t)) = 1;
      }
    }
    prog.b[r] = 1;
    RowTag tag;
    tag.kind = RowTag::Kind::normalization;
    tag.t = t;
    prog.row_tags.push_back(tag);
    ++r;
  }
  for (std::size_t k = 0; k < prog.n_psi; ++k) {
    for (std::size_t t = 0; t < nt; ++t) {
      for (std::size_t t2 = t + 1; t2 < nt; ++t2) {
        for (std::size_t kp = 0; kp < prog.n_phi; ++kp) {
          prog.M.at(r, prog.col_index(kp, k, t)) += 1;
          prog.M.at(r, prog.col_index(kp, k, t2)) -= 1;
        }
        RowTag tag;
        tag.kind = RowTag::Kind::causal_independence;
        tag.t = t;
        tag.t2 = t2;
        tag.kappa = k;
        prog.row_tags.push_back(tag);
        ++r;
      }
    }
  }
  for (std::size_t kp = 0; kp < prog.n_phi; ++kp) {
    for (std::size_t k = 0; k < prog.n_psi; ++k) {
      for (std::size_t c = 0; c < n_gen; ++c) {
        for (std::size_t t = 0; t < nt; ++t) {
          const Rational& alpha = t_identities.generators[c][t];
          if (alpha != 0) prog.M.at(r, prog.col_index(kp, k, t)) = alpha;
        }
        RowTag tag;
        tag.kind = RowTag::Kind::transformation_identity;
        tag.kappa_prime = kp;
        tag.kappa = k;
        tag.generator = c;
        prog.row_tags.push_back(tag);
        ++r;
      }
    }
  }
  for (std::size_t ke = 0; ke < prog.effect_ids.size(); ++ke) {
    for (std::size_t s = 0; s < prog.state_ids.size(); ++s) {
      for (std::size_t t = 0; t < nt; ++t) {
        for (std::size_t kp = 0; kp < prog.n_phi; ++kp) {
          const Rational& phik = phi.vertices[kp][ke];
          if (phik == 0) continue;
          for (std::size_t k = 0; k < prog.n_psi; ++k) {
            const Rational& psis = psi.vertices[k][s];
            if (psis == 0) continue;
            prog.M.at(r, prog.col_index(kp, k, t)) =
                Rational(static_cast<long>(n_states)) * phik * psis;
          }
        }
        DataKey key{prog.effect_ids[ke], prog.state_ids[s], prog.t_ids[t]};
        prog.b[r] = data.at(key);
        RowTag tag;
        tag.kind = RowTag::Kind::data;
        tag.t = t;
        tag.key = key;
        prog.row_tags.push_back(tag);
        prog.data_keys.push_back(key);
        ++r;
      }
    }
  }
  return prog;
}

NcProgram with_data(const NcProgram& prog, const DataTable& data) {
  NcProgram out = prog;
  for (std::size_t r = 0; r < out.row_tags.size(); ++r) {
    if (out.row_tags[r].kind == RowTag::Kind::data) {
      out.b[r] = data.at(out.row_tags[r].key);
    }
  }
  return out;
}

CertResult certify(const NcProgram& prog) {
  // Solve min sum(v) s.t. M u - M v = b, u, v >= 0, the dual of
  // min y.b over 0 <= y.M <= 1. Optimum 0 <=> the primal M x = b, x >= 0 is
  // feasible (then v = 0 and x = u); otherwise the simplex multipliers give
  // the dual-optimal Farkas witness.
  const std::size_t m = prog.rows();
  const std::size_t n = prog.cols();
  LpProblem lp;
  lp.num_vars = 2 * n;
  lp.objective.assign(2 * n, Rational());
  for (std::size_t j = n; j < 2 * n; ++j) lp.objective[j] = 1;
  lp.rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    LpRow row;
    row.rel = Relation::eq;
    row.rhs = prog.b[i];
    row.coeffs.assign(2 * n, Rational());
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& mij = prog.M.at(i, j);
      if (mij != 0) {
        row.coeffs[j] = mij;
        row.coeffs[n + j] = -mij;
      }
    }
    lp.rows.push_back(std::move(row));
  }
  LpSolution sol = solve_lp(lp);

  CertResult res;
  if (sol.status == LpStatus::infeasible) {
    // b is outside the column span of M: the witness dual is unbounded along
    // a ray y with y.M = 0, y.b < 0.
    res.verdict = CertResult::Verdict::infeasible;
    res.witness.assign(m, Rational());
    for (std::size_t i = 0; i < m; ++i) res.witness[i] = -sol.farkas[i];
    res.witness_value = dot(res.witness, prog.b);
    if (res.witness_value >= 0)
      throw DomainError("internal: ray witness lost its sign");
    return res;
  }
  if (sol.status != LpStatus::optimal)
    throw DomainError("internal: certify subproblem unbounded");
  if (sol.objective == 0) {
    res.verdict = CertResult::Verdict::feasible;
    res.x.assign(sol.x.begin(), sol.x.begin() + n);
    return res;
  }
  res.verdict = CertResult::Verdict::infeasible;
  res.witness.assign(m, Rational());
  for (std::size_t i = 0; i < m; ++i) res.witness[i] = -sol.row_duals[i];
  res.witness_value = dot(res.witness, prog.b);
  if (res.witness_value != -sol.objective)
    throw DomainError("internal: witness value mismatch");
  return res;
}

bool NcInequality::operator<(const NcInequality& o) const {
  if (coeffs != o.coeffs) return coeffs < o.coeffs;
  return constant < o.constant;
}

NcInequality witness_to_inequality(const CertResult& result,
                                   const NcProgram& prog) {
  if (result.verdict != CertResult::Verdict::infeasible)
    throw DomainError("witness_to_inequality needs an infeasible result");
  NcInequality ineq;
  for (std::size_t r = 0; r < prog.rows(); ++r) {
    const RowTag& tag = prog.row_tags[r];
    if (tag.kind == RowTag::Kind::data) {
      if (result.witness[r] != 0) ineq.coeffs[tag.key] = result.witness[r];
    } else if (prog.b[r] != 0) {
      ineq.constant += result.witness[r] * prog.b[r];
    }
  }
  return ineq;
}

EvalResult evaluate(const NcInequality& ineq, const DataTable& data) {
  Rational value;
  for (const auto& [key, gamma] : ineq.coeffs) value += gamma * data.at(key);
  return {value, value + ineq.constant >= 0};
}

Rational nc_bound(const NcInequality& ineq, const NcProgram& skeleton) {
  RationalVector objective(skeleton.cols());
  for (const auto& [key, gamma] : ineq.coeffs) {
    std::size_t r = skeleton.data_row(key);  // throws when not keyed here
    for (std::size_t j = 0; j < skeleton.cols(); ++j) {
      const Rational& mrj = skeleton.M.at(r, j);
      if (mrj != 0) objective[j] += gamma * mrj;
    }
  }
  LpProblem lp;
  lp.num_vars = skeleton.cols();
  lp.objective = std::move(objective);
  for (std::size_t r = 0; r < skeleton.rows(); ++r) {
    if (skeleton.row_tags[r].kind == RowTag::Kind::data) continue;
    LpRow row;
    row.rel = Relation::eq;
    row.rhs = skeleton.b[r];
    row.coeffs = skeleton.M.row(r);
    lp.rows.push_back(std::move(row));
  }
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal)
    throw DomainError("nc_bound: skeleton program did not solve");
  return sol.objective;
}

NcInequality canonicalize(const NcInequality& ineq) {
  RationalVector all;
  all.reserve(ineq.coeffs.size() + 1);
  for (const auto& [_, g] : ineq.coeffs) all.push_back(g);
  all.push_back(ineq.constant);

  mpz_class lcm_den(1);
  for (const Rational& x : all)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class g(0);
  for (const Rational& x : all) {
    mpz_class num = x.get_num() * (lcm_den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  NcInequality out;
  if (g == 0) return out;  // the zero inequality
  Rational scale = Rational(lcm_den) / Rational(g);
  for (const auto& [key, gamma] : ineq.coeffs) {
    Rational v = gamma * scale;
    if (v != 0) out.coeffs[key] = v;
  }
  out.constant = ineq.constant * scale;
  return out;
}

}  // namespace ptmnc
