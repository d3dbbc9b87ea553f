#pragma once

#include <vector>

#include "ptmnc/program.hpp"

namespace ptmnc {

struct RobustnessProbe {
  Rational r;
  bool feasible = false;
};

struct RobustnessResult {
  Rational r_lo;  // certified infeasible
  Rational r_hi;  // certified feasible
  std::vector<RobustnessProbe> probes;  // in probing order
};

// Mixes (1-r) * infeasible_data + r * target along r in [0,1] and bisects the
// feasibility threshold down to a bracket of width <= precision, certifying
// every probe exactly. Preconditions: infeasible_data certifies infeasible,
// target certifies feasible; violations throw DomainError.
RobustnessResult robustness_scan(const NcProgram& prog,
                                 const DataTable& infeasible_data,
                                 const DataTable& target,
                                 const Rational& precision);

DataTable mix_tables(const DataTable& a, const DataTable& b, const Rational& r);

}  // namespace ptmnc
