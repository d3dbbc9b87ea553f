#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ptmnc/linalg.hpp"
#include "ptmnc/rational.hpp"

namespace ptmnc {

// (effect id, state id, transformation id) key of one probability entry.
struct DataKey {
  std::string k, s, t;
  auto operator<=>(const DataKey&) const = default;
};

// A prepare-transform-measure scenario: states and effects as vectors in a
// fixed coordinate chart of dimension dim (effects as covectors in the same
// chart, paired by dot product), transformations as dim x dim matrices.
struct GptFragment {
  std::size_t dim = 0;
  std::vector<std::pair<std::string, RationalVector>> states;
  std::vector<std::pair<std::string, RationalVector>> effects;
  RationalVector unit_effect;
  std::vector<std::pair<std::string, RationalMatrix>> transformations;
  std::vector<std::vector<std::string>> measurements;

  std::vector<std::string> state_ids() const;
  std::vector<std::string> effect_ids() const;
  std::vector<std::string> transformation_ids() const;

  // Index of an id in the declared order; throws InputError when unknown.
  std::size_t state_index(const std::string& id) const;
  std::size_t effect_index(const std::string& id) const;
  std::size_t transformation_index(const std::string& id) const;
};

struct DataTable {
  std::map<DataKey, Rational> entries;

  const Rational& at(const DataKey& key) const;
  bool operator==(const DataTable&) const = default;
};

struct ValidationIssue {
  std::string code;    // stable machine-readable tag
  std::string detail;  // offending ids and values
};

struct ValidationReport {
  std::vector<ValidationIssue> structural;  // dimension mismatches etc.
  std::vector<ValidationIssue> violations;  // failed invariants
  std::vector<std::string> notes;           // reported but not rejected
  bool passed() const { return structural.empty() && violations.empty(); }
};

ValidationReport validate(const GptFragment& f);

// p(k|s,t) = e_k . T_t . w_s for every triple, exact.
DataTable predict(const GptFragment& f);

// The single-qubit stabilizer scenario in the Pauli coordinate chart
// (1, X, Y, Z): six states/effects ordered {+, -, +i, -i, 0, 1},
// transformations {I, Z, S, Sinv}, measurements {0,1}, {+,-}, {+i,-i}.
GptFragment stabilizer_qubit_fragment();

// Quantum data table of the stabilizer scenario (predict of the above).
DataTable stabilizer_qubit_data();

// Uniform table: p(k|s,t) = 1/|M| for the measurement M containing k.
// Throws InputError when an effect sits in measurements of different sizes.
DataTable uniform_table(const GptFragment& f);

struct LumpResult {
  GptFragment fragment;
  // composite id that was dropped -> earlier id with the same exact matrix
  std::vector<std::pair<std::string, std::string>> merged;
};

// Replaces base's transformations by all exact products first*second with
// composite ids "t1∘t2"; duplicates (exact matrix equality) merge under the
// earliest id.
LumpResult lump(
    const std::vector<std::pair<std::string, RationalMatrix>>& first_stage,
    const std::vector<std::pair<std::string, RationalMatrix>>& second_stage,
    const GptFragment& base);

}  // namespace ptmnc
