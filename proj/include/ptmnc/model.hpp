#pragma once

#include <map>
#include <string>
#include <vector>

#include "ptmnc/identities.hpp"
#include "ptmnc/polytope.hpp"
#include "ptmnc/program.hpp"

namespace ptmnc {

// Candidate classical model reconstructed from a feasible program solution:
// mu_s(kappa) = N [Psi_kappa]_s p(kappa), Gamma_t(kappa'|kappa) =
// p(kappa' kappa|t)/p(kappa), xi_k(kappa') = [Phi_kappa']_k.
struct OntModel {
  std::vector<std::size_t> ontic_in;   // kappa with p(kappa) > 0
  std::vector<std::size_t> ontic_out;  // all kappa'
  std::map<std::pair<std::string, std::size_t>, Rational> mu;
  std::map<std::tuple<std::string, std::size_t, std::size_t>, Rational>
      gamma;  // (t, kappa', kappa)
  std::map<std::pair<std::string, std::size_t>, Rational> xi;
  std::map<std::size_t, Rational> p_kappa;
};

// x must satisfy the program rows for some data table; throws DomainError
// when the kappa-marginal of x depends on t.
OntModel build_model(const RationalVector& x, const VRep& phi, const VRep& psi,
                     const NcProgram& prog);

struct ModelCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ModelReport {
  std::vector<ModelCheck> checks;
  std::vector<std::string> notes;
  bool all_passed() const;
};

// Exact pass/fail for: data reproduction, the three identity families, and
// the distribution invariants. Diagram preservation is reported in notes,
// never enforced.
ModelReport verify_model(const OntModel& m, const GptFragment& f,
                         const DataTable& data, const IdentitySet& state_ids,
                         const IdentitySet& effect_ids,
                         const IdentitySet& t_ids);

}  // namespace ptmnc
