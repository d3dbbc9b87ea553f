#pragma once

#include <string>
#include <vector>

#include "ptmnc/fragment.hpp"

namespace ptmnc {

enum class ProcessKind { states, effects, transformations };

std::string to_string(ProcessKind kind);
ProcessKind process_kind_from_string(const std::string& s);

// A generating set of linear operational identities: every coefficient vector
// alpha satisfies sum_i alpha_i * (process vector i) = 0 exactly, and the set
// spans all such relations.
struct IdentitySet {
  ProcessKind kind;
  std::vector<std::string> process_ids;
  std::vector<RationalVector> generators;
};

// Kernel basis of the d x N matrix whose columns are the state vectors.
IdentitySet state_identities(const GptFragment& f);

// Same over the effect covectors (the unit effect is not a column; identities
// involving u are carried by the measurement-sum constraints downstream).
IdentitySet effect_identities(const GptFragment& f);

// Transformations are vectorized by column stacking into d^2-vectors first.
IdentitySet transformation_identities(const GptFragment& f);

}  // namespace ptmnc
