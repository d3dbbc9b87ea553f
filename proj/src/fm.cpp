#include "ptmnc/fm.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

#include "ptmnc/errors.hpp"
#include "ptmnc/lp.hpp"

namespace ptmnc {

namespace {

std::size_t popcount(const std::vector<std::uint64_t>& bits) {
  std::size_t n = 0;
  for (std::uint64_t w : bits) n += std::popcount(w);
  return n;
}

std::vector<std::uint64_t> union_bits(const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] |= a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] |= b[i];
  return out;
}

// Positive integer scaling: common denominator, then gcd 1.
void scale_canonical(SymbolicRow& row) {
  mpz_class lcm_den(1);
  auto lcm_in = [&lcm_den](const Rational& x) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  };
  for (const Rational& x : row.unknown_coeffs) lcm_in(x);
  for (const Rational& x : row.data_coeffs) lcm_in(x);
  lcm_in(row.constant);
  mpz_class g(0);
  auto gcd_in = [&](const Rational& x) {
    mpz_class num = x.get_num() * (lcm_den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  };
  for (const Rational& x : row.unknown_coeffs) gcd_in(x);
  for (const Rational& x : row.data_coeffs) gcd_in(x);
  gcd_in(row.constant);
  if (g == 0) return;
  Rational scale = Rational(lcm_den) / Rational(g);
  for (Rational& x : row.unknown_coeffs) x *= scale;
  for (Rational& x : row.data_coeffs) x *= scale;
  row.constant *= scale;
}

bool has_unknowns(const SymbolicRow& row) {
  for (const Rational& x : row.unknown_coeffs)
    if (x != 0) return true;
  return false;
}

NcInequality row_to_inequality(const SymbolicRow& row,
                               const std::vector<DataKey>& symbols) {
  NcInequality ineq;
  for (std::size_t i = 0; i < row.data_coeffs.size(); ++i) {
    if (row.data_coeffs[i] != 0) ineq.coeffs[symbols[i]] = row.data_coeffs[i];
  }
  ineq.constant = row.constant;
  return ineq;
}

}  // namespace

IneqSystem build_ineq_system(const NcProgram& prog, bool flag_convexified) {
  IneqSystem sys;
  sys.num_unknowns = prog.cols();
  sys.data_symbols = prog.data_keys;
  std::map<DataKey, std::size_t> sym_index;
  for (std::size_t i = 0; i < sys.data_symbols.size(); ++i)
    sym_index[sys.data_symbols[i]] = i;

  Rational n_inv(1, static_cast<long>(prog.n_states));
  for (std::size_t r = 0; r < prog.rows(); ++r) {
    SymbolicRow row;
    row.is_equality = true;
    row.unknown_coeffs = prog.M.row(r);
    row.data_coeffs.assign(sys.data_symbols.size(), Rational());
    const RowTag& tag = prog.row_tags[r];
    if (tag.kind == RowTag::Kind::data) {
      if (flag_convexified) {
        for (Rational& x : row.unknown_coeffs) x *= n_inv;
      }
      row.data_coeffs[sym_index.at(tag.key)] = -1;
    } else {
      row.constant = -prog.b[r];
    }
    sys.rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < sys.num_unknowns; ++j) {
    SymbolicRow row;
    row.unknown_coeffs.assign(sys.num_unknowns, Rational());
    row.unknown_coeffs[j] = 1;
    row.data_coeffs.assign(sys.data_symbols.size(), Rational());
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

namespace {

std::vector<NcInequality> redundancy_filter(std::vector<NcInequality> ineqs,
                                            const std::vector<DataKey>& symbols) {
  std::map<DataKey, std::size_t> sym_index;
  for (std::size_t i = 0; i < symbols.size(); ++i) sym_index[symbols[i]] = i;
  for (std::size_t i = 0; i < ineqs.size();) {
    LpProblem lp;
    lp.num_vars = symbols.size();
    lp.free_vars.assign(lp.num_vars, true);
    lp.objective.assign(lp.num_vars, Rational());
    for (const auto& [key, g] : ineqs[i].coeffs)
      lp.objective[sym_index.at(key)] = g;
    for (std::size_t j = 0; j < ineqs.size(); ++j) {
      if (j == i) continue;
      LpRow row;
      row.rel = Relation::ge;
      row.rhs = -ineqs[j].constant;
      row.coeffs.assign(lp.num_vars, Rational());
      for (const auto& [key, g] : ineqs[j].coeffs)
        row.coeffs[sym_index.at(key)] = g;
      lp.rows.push_back(std::move(row));
    }
    LpSolution sol = solve_lp(lp);
    bool redundant = sol.status == LpStatus::optimal &&
                     sol.objective + ineqs[i].constant >= 0;
    if (redundant) {
      ineqs.erase(ineqs.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return ineqs;
}

}  // namespace

EliminationResult eliminate_all(const IneqSystem& sys, const FmOptions& opts) {
  EliminationResult result;
  std::vector<SymbolicRow> rows = sys.rows;
  std::vector<SymbolicRow> outputs;  // rows free of unknowns

  // Phase A: Gaussian substitution on the equalities.
  while (true) {
    std::size_t eq_row = rows.size(), pivot = 0;
    for (std::size_t i = 0; i < rows.size() && eq_row == rows.size(); ++i) {
      if (!rows[i].is_equality) continue;
      for (std::size_t v = 0; v < sys.num_unknowns; ++v) {
        if (rows[i].unknown_coeffs[v] != 0) {
          eq_row = i;
          pivot = v;
          break;
        }
      }
    }
    if (eq_row == rows.size()) break;
    SymbolicRow eq = std::move(rows[eq_row]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(eq_row));
    const Rational inv = 1 / eq.unknown_coeffs[pivot];
    for (SymbolicRow& r : rows) {
      const Rational f = r.unknown_coeffs[pivot] * inv;
      if (f == 0) continue;
      for (std::size_t v = 0; v < sys.num_unknowns; ++v) {
        if (eq.unknown_coeffs[v] != 0)
          r.unknown_coeffs[v] -= f * eq.unknown_coeffs[v];
      }
      r.unknown_coeffs[pivot] = 0;
      for (std::size_t d = 0; d < eq.data_coeffs.size(); ++d) {
        if (eq.data_coeffs[d] != 0) r.data_coeffs[d] -= f * eq.data_coeffs[d];
      }
      r.constant -= f * eq.constant;
    }
  }

  // Unknown-free rows leave the elimination; equalities among them surface as
  // data-level constraints.
  {
    std::vector<SymbolicRow> active;
    for (SymbolicRow& r : rows) {
      if (has_unknowns(r)) {
        active.push_back(std::move(r));
      } else {
        outputs.push_back(std::move(r));
      }
    }
    rows = std::move(active);
  }

  // Fresh singleton ancestor sets for the Chernikov rule.
  const std::size_t words = rows.size() / 64 + 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].ancestors.assign(words, 0);
    rows[i].ancestors[i / 64] |= std::uint64_t(1) << (i % 64);
    scale_canonical(rows[i]);
  }
  result.max_live_rows = rows.size();

  while (true) {
    // Pick the unknown with the fewest pos*neg combinations.
    std::size_t best_var = sys.num_unknowns;
    std::size_t best_score = 0;
    for (std::size_t v = 0; v < sys.num_unknowns; ++v) {
      std::size_t pos = 0, neg = 0;
      for (const SymbolicRow& r : rows) {
        int s = sgn(r.unknown_coeffs[v]);
        if (s > 0) ++pos;
        if (s < 0) ++neg;
      }
      if (pos + neg == 0) continue;
      std::size_t score = pos * neg;
      if (best_var == sys.num_unknowns || score < best_score) {
        best_var = v;
        best_score = score;
      }
    }
    if (best_var == sys.num_unknowns) break;
    ++result.fm_steps;

    std::vector<std::size_t> pos, neg;
    std::vector<SymbolicRow> carried;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      int s = sgn(rows[i].unknown_coeffs[best_var]);
      if (s > 0) pos.push_back(i);
      else if (s < 0) neg.push_back(i);
      else carried.push_back(rows[i]);
    }

    // content -> ancestors (keep the smallest set for better pruning)
    using RowKey = std::tuple<RationalVector, RationalVector, Rational>;
    std::map<RowKey, std::vector<std::uint64_t>> fresh;
    bool over_budget = false;
    for (std::size_t ip : pos) {
      if (over_budget) break;
      for (std::size_t in : neg) {
        if (carried.size() > opts.row_budget) {
          over_budget = true;
          break;
        }
        auto anc = union_bits(rows[ip].ancestors, rows[in].ancestors);
        if (opts.chernikov && popcount(anc) > result.fm_steps + 1) continue;
        const SymbolicRow& rp = rows[ip];
        const SymbolicRow& rn = rows[in];
        const Rational a = rp.unknown_coeffs[best_var];   // > 0
        const Rational b = -rn.unknown_coeffs[best_var];  // > 0
        SymbolicRow combo;
        combo.unknown_coeffs.resize(sys.num_unknowns);
        for (std::size_t v = 0; v < sys.num_unknowns; ++v) {
          combo.unknown_coeffs[v] =
              b * rp.unknown_coeffs[v] + a * rn.unknown_coeffs[v];
        }
        combo.unknown_coeffs[best_var] = 0;
        combo.data_coeffs.resize(sys.data_symbols.size());
        for (std::size_t d = 0; d < combo.data_coeffs.size(); ++d) {
          combo.data_coeffs[d] = b * rp.data_coeffs[d] + a * rn.data_coeffs[d];
        }
        combo.constant = b * rp.constant + a * rn.constant;
        scale_canonical(combo);
        bool zero = !has_unknowns(combo);
        if (zero) {
          bool all_zero_data = true;
          for (const Rational& x : combo.data_coeffs) {
            if (x != 0) {
              all_zero_data = false;
              break;
            }
          }
          if (all_zero_data && combo.constant >= 0) continue;  // 0 >= -c holds
        }
        RowKey key{combo.unknown_coeffs, combo.data_coeffs, combo.constant};
        auto it = fresh.find(key);
        if (it == fresh.end()) {
          combo.ancestors = std::move(anc);
          fresh.emplace(std::move(key), combo.ancestors);
          if (!has_unknowns(combo)) {
            outputs.push_back(std::move(combo));
          } else {
            carried.push_back(std::move(combo));
          }
        } else if (popcount(anc) < popcount(it->second) ||
                   (popcount(anc) == popcount(it->second) &&
                    anc < it->second)) {
          // same content reached with a smaller ancestor set
          for (SymbolicRow& r : carried) {
            if (r.unknown_coeffs == std::get<0>(key) &&
                r.data_coeffs == std::get<1>(key) &&
                r.constant == std::get<2>(key)) {
              r.ancestors = anc;
            }
          }
          it->second = std::move(anc);
        }
      }
    }
    rows = std::move(carried);
    result.max_live_rows = std::max(result.max_live_rows, rows.size());
    if (over_budget || rows.size() > opts.row_budget) {
      result.complete = false;
      break;
    }
  }

  // Convert the unknown-free rows; equalities become inequality pairs.
  std::vector<NcInequality> out;
  for (const SymbolicRow& r : outputs) {
    NcInequality ineq = row_to_inequality(r, sys.data_symbols);
    out.push_back(canonicalize(ineq));
    if (r.is_equality) {
      NcInequality flipped;
      for (const auto& [k, g] : ineq.coeffs) flipped.coeffs[k] = -g;
      flipped.constant = -ineq.constant;
      out.push_back(canonicalize(flipped));
    }
  }
  // Drop trivial rows, deduplicate, and order deterministically.
  std::vector<NcInequality> kept;
  for (NcInequality& ineq : out) {
    if (ineq.coeffs.empty() && ineq.constant >= 0) continue;
    kept.push_back(std::move(ineq));
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (opts.lp_redundancy_filter && result.complete) {
    kept = redundancy_filter(std::move(kept), sys.data_symbols);
  }
  result.inequalities = std::move(kept);
  return result;
}

std::vector<NcInequality> to_original(const std::vector<NcInequality>& ineqs,
                                      std::size_t n_states) {
  std::vector<NcInequality> out;
  out.reserve(ineqs.size());
  for (const NcInequality& ineq : ineqs) {
    NcInequality mapped = ineq;
    mapped.constant *= static_cast<long>(n_states);
    out.push_back(canonicalize(mapped));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ptmnc
