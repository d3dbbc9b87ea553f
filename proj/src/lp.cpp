#include "ptmnc/lp.hpp"

#include <cstddef>
#include <limits>

#include "ptmnc/errors.hpp"

namespace ptmnc {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr int kDegenerateStreakLimit = 64;

// Dense exact tableau, rows 0..m-1 constraints, row m the phase-2 reduced
// cost row, row m+1 the phase-1 reduced cost row; last column is the rhs
// (cost-row rhs cells hold -objective).
class Simplex {
 public:
  Simplex(const LpProblem& p) : p_(p) {
    m_ = p.rows.size();
    plus_col_.resize(p.num_vars);
    neg_col_.assign(p.num_vars, kNone);
    std::size_t col = 0;
    for (std::size_t j = 0; j < p.num_vars; ++j) plus_col_[j] = col++;
    for (std::size_t j = 0; j < p.num_vars; ++j) {
      if (!p.free_vars.empty() && p.free_vars[j]) neg_col_[j] = col++;
    }
    slack_col_.assign(m_, kNone);
    for (std::size_t i = 0; i < m_; ++i) {
      if (p.rows[i].rel != Relation::eq) slack_col_[i] = col++;
    }
    art_col_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) art_col_[i] = col++;
    ncols_ = col;
    rhs_ = ncols_;

    tab_.assign(m_ + 2, std::vector<Rational>(ncols_ + 1));
    flip_.assign(m_, 1);
    basis_.resize(m_);
    active_.assign(m_, true);
    for (std::size_t i = 0; i < m_; ++i) {
      const LpRow& row = p.rows[i];
      if (row.coeffs.size() != p.num_vars)
        throw InputError("lp row width mismatch");
      int f = row.rhs < 0 ? -1 : 1;
      flip_[i] = f;
      auto& t = tab_[i];
      for (std::size_t j = 0; j < p.num_vars; ++j) {
        if (row.coeffs[j] == 0) continue;
        t[plus_col_[j]] = f * row.coeffs[j];
        if (neg_col_[j] != kNone) t[neg_col_[j]] = -f * row.coeffs[j];
      }
      if (slack_col_[i] != kNone) {
        t[slack_col_[i]] = (row.rel == Relation::le ? 1 : -1) * f;
      }
      t[art_col_[i]] = 1;
      t[rhs_] = f * row.rhs;
      basis_[i] = art_col_[i];
    }
    // phase-2 costs
    auto& c2 = tab_[m_];
    for (std::size_t j = 0; j < p.num_vars; ++j) {
      if (p.objective.size() > j && p.objective[j] != 0) {
        c2[plus_col_[j]] = p.objective[j];
        if (neg_col_[j] != kNone) c2[neg_col_[j]] = -p.objective[j];
      }
    }
    // phase-1 costs: artificials cost 1, reduced against the artificial basis
    auto& c1 = tab_[m_ + 1];
    for (std::size_t i = 0; i < m_; ++i) c1[art_col_[i]] = 1;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j <= rhs_; ++j) {
        if (tab_[i][j] != 0) c1[j] -= tab_[i][j];
      }
    }
  }

  LpSolution run() {
    // Phase 1: minimize the sum of artificials. Artificial columns never
    // enter the basis (the minimum over the remaining columns is zero iff
    // the true minimum is); rows whose artificial never leaves are then
    // never pivot rows, so deactivating them keeps the tableau consistent.
    iterate(m_ + 1, /*allow_artificials=*/false);
    Rational infeas = -tab_[m_ + 1][rhs_];
    if (infeas > 0) return infeasible_result();
    drive_out_artificials();
    bool bounded = iterate(m_, /*allow_artificials=*/false);
    if (!bounded) {
      LpSolution sol;
      sol.status = LpStatus::unbounded;
      return sol;
    }
    return optimal_result();
  }

 private:
  bool is_artificial(std::size_t col) const {
    return col >= art_col_[0];
  }

  void pivot(std::size_t r, std::size_t s) {
    auto& pr = tab_[r];
    Rational inv = 1 / pr[s];
    for (std::size_t j = 0; j <= rhs_; ++j) {
      if (pr[j] != 0) pr[j] *= inv;
    }
    for (std::size_t i = 0; i < m_ + 2; ++i) {
      if (i == r) continue;
      if (i < m_ && !active_[i]) continue;
      auto& row = tab_[i];
      const Rational f = row[s];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= rhs_; ++j) {
        if (pr[j] != 0) row[j] -= f * pr[j];
      }
      row[s] = 0;
    }
    basis_[r] = s;
  }

  // Returns false when unbounded. Dantzig pricing with lowest-index ties,
  // Bland's rule after a degenerate streak.
  bool iterate(std::size_t cost_row, bool allow_artificials) {
    int degenerate_streak = 0;
    bool bland = false;
    while (true) {
      const auto& cr = tab_[cost_row];
      std::size_t enter = kNone;
      if (bland) {
        for (std::size_t j = 0; j < ncols_; ++j) {
          if (!allow_artificials && is_artificial(j)) continue;
          if (cr[j] < 0) {
            enter = j;
            break;
          }
        }
      } else {
        const Rational* best = nullptr;
        for (std::size_t j = 0; j < ncols_; ++j) {
          if (!allow_artificials && is_artificial(j)) continue;
          if (cr[j] < 0 && (best == nullptr || cr[j] < *best)) {
            best = &cr[j];
            enter = j;
          }
        }
      }
      if (enter == kNone) return true;

      std::size_t leave = kNone;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_[i] || tab_[i][enter] <= 0) continue;
        Rational ratio = tab_[i][rhs_] / tab_[i][enter];
        bool better = leave == kNone || ratio < best_ratio ||
                      (ratio == best_ratio && basis_[i] < basis_[leave]);
        if (better) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == kNone) return false;  // unbounded direction

      Rational before = cr[rhs_];
      pivot(leave, enter);
      if (tab_[cost_row][rhs_] == before) {
        if (++degenerate_streak > kDegenerateStreakLimit) bland = true;
      } else {
        degenerate_streak = 0;
        bland = false;
      }
    }
  }

  // After a zero phase-1 optimum, remove artificials from the basis so they
  // cannot creep back above zero in phase 2. Rows that cannot be pivoted are
  // linearly dependent and get deactivated.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i] || !is_artificial(basis_[i])) continue;
      std::size_t col = kNone;
      for (std::size_t j = 0; j < ncols_ && col == kNone; ++j) {
        if (!is_artificial(j) && tab_[i][j] != 0) col = j;
      }
      if (col == kNone) {
        active_[i] = false;
      } else {
        pivot(i, col);
      }
    }
  }

  LpSolution infeasible_result() const {
    LpSolution sol;
    sol.status = LpStatus::infeasible;
    sol.farkas.assign(m_, Rational());
    const auto& c1 = tab_[m_ + 1];
    for (std::size_t i = 0; i < m_; ++i) {
      // phase-1 multiplier: pi_i = 1 - reduced cost of the artificial of row i
      Rational pi = 1 - c1[art_col_[i]];
      sol.farkas[i] = flip_[i] * pi;
    }
    sol.objective = -c1[rhs_];  // infeasibility mass, > 0
    return sol;
  }

  LpSolution optimal_result() const {
    LpSolution sol;
    sol.status = LpStatus::optimal;
    sol.objective = -tab_[m_][rhs_];
    RationalVector colval(ncols_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (active_[i]) colval[basis_[i]] = tab_[i][rhs_];
    }
    sol.x.assign(p_.num_vars, Rational());
    for (std::size_t j = 0; j < p_.num_vars; ++j) {
      sol.x[j] = colval[plus_col_[j]];
      if (neg_col_[j] != kNone) sol.x[j] -= colval[neg_col_[j]];
    }
    sol.row_duals.assign(m_, Rational());
    const auto& c2 = tab_[m_];
    Rational pib;
    for (std::size_t i = 0; i < m_; ++i) {
      // Deactivated rows were redundant; their multiplier stays zero.
      if (!active_[i]) continue;
      Rational pi = -c2[art_col_[i]];
      sol.row_duals[i] = flip_[i] * pi;
      pib += sol.row_duals[i] * p_.rows[i].rhs;
    }
    if (pib != sol.objective)
      throw DomainError("simplex: dual multipliers violate strong duality");
    return sol;
  }

  const LpProblem& p_;
  std::size_t m_ = 0, ncols_ = 0, rhs_ = 0;
  std::vector<std::vector<Rational>> tab_;
  std::vector<std::size_t> plus_col_, neg_col_, slack_col_, art_col_, basis_;
  std::vector<int> flip_;
  std::vector<bool> active_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  if (!problem.free_vars.empty() &&
      problem.free_vars.size() != problem.num_vars) {
    throw InputError("lp: free_vars size mismatch");
  }
  if (!problem.objective.empty() &&
      problem.objective.size() != problem.num_vars) {
    throw InputError("lp: objective size mismatch");
  }
  if (problem.rows.empty()) {
    // No constraints: 0 is optimal iff no improving direction exists.
    LpSolution sol;
    for (std::size_t j = 0; j < problem.num_vars; ++j) {
      Rational c = problem.objective.empty() ? Rational() : problem.objective[j];
      bool is_free = !problem.free_vars.empty() && problem.free_vars[j];
      if (c < 0 || (is_free && c != 0)) {
        sol.status = LpStatus::unbounded;
        return sol;
      }
    }
    sol.status = LpStatus::optimal;
    sol.x.assign(problem.num_vars, Rational());
    return sol;
  }
  Simplex simplex(problem);
  return simplex.run();
}

}  // namespace ptmnc
