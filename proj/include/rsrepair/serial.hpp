#pragma once

#include <string>

#include <json.hpp>

#include "rsrepair/cluster.hpp"
#include "rsrepair/construct.hpp"
#include "rsrepair/repair.hpp"
#include "rsrepair/search.hpp"

namespace rsrepair {

// All documents carry format_version 1 and embed a field descriptor, so a
// file is self-sufficient. Loaders that take a context field instead verify
// the embedded descriptor matches and rebind elements into the context, so
// everything in one process shares a single Field instance.
using json = nlohmann::ordered_json;

json field_to_json(const Field& fld);
std::shared_ptr<const Field> field_from_json(const json& j);

// Elements travel as base-p digit arrays, constant term first.
json element_to_json(const FieldElement& a);
FieldElement element_from_json(const Field& fld, const json& j);

json code_to_json(const RsCode& code);
RsCode code_from_json(const json& j);

json scheme_to_json(const RepairScheme& s);
RepairScheme scheme_from_json(const json& j);

json collection_to_json(const SchemeCollection& c);
SchemeCollection collection_from_json(const json& j);

json codeword_to_json(const Field& fld, const Codeword& w);
Codeword codeword_from_json(const Field& fld, const json& j);

json basis_to_json(const SubfieldBasis& b);
SubfieldBasis basis_from_json(const Field& fld, const json& j);

json cost_to_json(const CostReport& r);
std::string cost_to_csv(const CostReport& r);
std::string cost_to_table(const CostReport& r);

json report_to_json(const VerifyReport& r, long long wall_ms);
std::string report_to_text(const VerifyReport& r);

json transcript_to_json(const RepairTranscript& t);
std::string transcript_to_text(const RepairTranscript& t);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace rsrepair
