#pragma once

#include <string>

#include <json.hpp>

#include "ptmnc/fm.hpp"
#include "ptmnc/fragment.hpp"
#include "ptmnc/identities.hpp"
#include "ptmnc/model.hpp"
#include "ptmnc/polytope.hpp"
#include "ptmnc/program.hpp"
#include "ptmnc/robustness.hpp"

namespace ptmnc {

using nlohmann::json;

// Rationals serialize as "p/q" strings ("p" when q = 1); all formats
// round-trip exactly.

json to_json(const GptFragment& f);
GptFragment fragment_from_json(const json& j);

json to_json(const DataTable& t);
DataTable data_table_from_json(const json& j);

json to_json(const IdentitySet& ids);
IdentitySet identity_set_from_json(const json& j);

json to_json(const VRep& v);
VRep vrep_from_json(const json& j);

json to_json(const NcInequality& ineq);
NcInequality inequality_from_json(const json& j);

json to_json(const CertResult& res, const NcProgram& prog);

json to_json(const OntModel& m);
json to_json(const ModelReport& rep);
json to_json(const ValidationReport& rep);
json to_json(const EliminationResult& res);
json to_json(const RobustnessResult& res);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace ptmnc
