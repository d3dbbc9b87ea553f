#include "ptmnc/robustness.hpp"

#include "ptmnc/errors.hpp"

namespace ptmnc {

DataTable mix_tables(const DataTable& a, const DataTable& b,
                     const Rational& r) {
  if (a.entries.size() != b.entries.size())
    throw InputError("mix_tables: key sets differ");
  DataTable out;
  for (const auto& [key, pa] : a.entries) {
    out.entries[key] = (1 - r) * pa + r * b.at(key);
  }
  return out;
}

RobustnessResult robustness_scan(const NcProgram& prog,
                                 const DataTable& infeasible_data,
                                 const DataTable& target,
                                 const Rational& precision) {
  if (precision <= 0) throw InputError("robustness: precision must be > 0");
  RobustnessResult res;
  auto probe = [&](const Rational& r) {
    DataTable mixed = mix_tables(infeasible_data, target, r);
    bool feasible = certify(with_data(prog, mixed)).verdict ==
                    CertResult::Verdict::feasible;
    res.probes.push_back({r, feasible});
    return feasible;
  };
  if (probe(Rational(0)))
    throw DomainError("robustness: data is already classical at r = 0");
  if (!probe(Rational(1)))
    throw DomainError("robustness: mixing target is not classical at r = 1");
  Rational lo(0), hi(1);
  while (hi - lo > precision) {
    Rational mid = (lo + hi) / 2;
    if (probe(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
    // Convexity of the feasible segment keeps the bracket consistent: every
    // feasible probe must sit above every infeasible one.
    for (const auto& p1 : res.probes) {
      for (const auto& p2 : res.probes) {
        if (!p1.feasible && p2.feasible && p2.r < p1.r)
          throw DomainError("robustness: feasibility not monotone in r");
      }
    }
  }
  res.r_lo = lo;
  res.r_hi = hi;
  return res;
}

}  // namespace ptmnc
