#pragma once

#include <string>
#include <vector>

#include "ptmnc/errors.hpp"
#include "ptmnc/fragment.hpp"
#include "ptmnc/identities.hpp"

namespace ptmnc {

struct LinearConstraint {
  RationalVector coeffs;
  Rational rhs;
};

// Half-space form. Equalities mean coeffs.x == rhs, inequalities mean
// coeffs.x >= rhs. Variables carry ids in var_labels.
struct HPolytope {
  std::size_t num_vars = 0;
  std::vector<LinearConstraint> equalities;
  std::vector<LinearConstraint> inequalities;
  std::vector<std::string> var_labels;
};

// Vertex form; vertices are sorted lexicographically and pairwise distinct.
struct VRep {
  std::vector<RationalVector> vertices;
  std::vector<std::string> var_labels;
};

struct EmptyPolytopeError : DomainError {
  using DomainError::DomainError;
};
struct UnboundedPolytopeError : DomainError {
  using DomainError::DomainError;
};

// Measurement-assignment polytope: one variable per effect, measurement sums
// pinned to 1, positivity, and one equality per effect-identity generator.
HPolytope measurement_polytope(const GptFragment& f, const IdentitySet& ids);

// Source-assignment polytope: one variable per state, total sum pinned to 1,
// positivity, and one equality per state-identity generator.
HPolytope source_polytope(const GptFragment& f, const IdentitySet& ids);

// Complete vertex set by exhaustive basic-solution enumeration. Throws
// EmptyPolytopeError / UnboundedPolytopeError.
VRep enumerate_vertices(const HPolytope& p);

// True when x satisfies every constraint exactly.
bool contains(const HPolytope& p, const RationalVector& x);

}  // namespace ptmnc
