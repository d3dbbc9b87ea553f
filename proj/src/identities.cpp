#include "ptmnc/identities.hpp"

#include "ptmnc/errors.hpp"

namespace ptmnc {

std::string to_string(ProcessKind kind) {
  switch (kind) {
    case ProcessKind::states: return "states";
    case ProcessKind::effects: return "effects";
    case ProcessKind::transformations: return "transformations";
  }
  throw DomainError("unreachable process kind");
}

ProcessKind process_kind_from_string(const std::string& s) {
  if (s == "states") return ProcessKind::states;
  if (s == "effects") return ProcessKind::effects;
  if (s == "transformations") return ProcessKind::transformations;
  throw InputError("unknown process kind '" + s + "'");
}

namespace {

IdentitySet kernel_identities(ProcessKind kind,
                              std::vector<std::string> ids,
                              const std::vector<RationalVector>& columns) {
  IdentitySet out;
  out.kind = kind;
  out.process_ids = std::move(ids);
  out.generators = kernel_basis(RationalMatrix::from_columns(columns));
  return out;
}

}  // namespace

IdentitySet state_identities(const GptFragment& f) {
  std::vector<RationalVector> cols;
  for (const auto& [_, v] : f.states) cols.push_back(v);
  return kernel_identities(ProcessKind::states, f.state_ids(), cols);
}

IdentitySet effect_identities(const GptFragment& f) {
  std::vector<RationalVector> cols;
  for (const auto& [_, v] : f.effects) cols.push_back(v);
  return kernel_identities(ProcessKind::effects, f.effect_ids(), cols);
}

IdentitySet transformation_identities(const GptFragment& f) {
  std::vector<RationalVector> cols;
  for (const auto& [_, m] : f.transformations) {
    RationalVector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (std::size_t r = 0; r < m.rows(); ++r) v.push_back(m.at(r, c));
    }
    cols.push_back(std::move(v));
  }
  return kernel_identities(ProcessKind::transformations,
                           f.transformation_ids(), cols);
}

}  // namespace ptmnc
