#pragma once

#include <json.hpp>

#include <string>

#include "sumprodlab/counting.hpp"
#include "sumprodlab/families.hpp"
#include "sumprodlab/harness.hpp"
#include "sumprodlab/numset.hpp"
#include "sumprodlab/search.hpp"

namespace sumprodlab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "sumprodlab";
inline constexpr const char* kToolVersion = "0.1.0";

// ---- set files -------------------------------------------------------------
// {"elements": [...]}: each element a JSON integer or a string "p" /
// "p/q"; the parser accepts non-canonical fractions and canonicalizes,
// the writer emits canonical form sorted ascending (integers as JSON
// numbers when they fit 64 bits, decimal strings beyond that).

NumSet set_from_json(const Json& doc);
Json set_to_json(const NumSet& a);
NumSet read_set_file(const std::string& path);
void write_set_file(const std::string& path, const NumSet& a);

// ---- JSON views ------------------------------------------------------------

Json scalar_to_json(const ExactScalar& x);
Json bigint_to_json(const BigInt& v);  // number if it fits, string otherwise

Json multiplicity_table_to_json(const MultiplicityTable& table);
Json record_to_json(const InequalityRecord& record);
Json fit_to_json(const ExponentFit& fit);

Json family_to_json(const FamilySpec& spec);
FamilySpec family_from_json(const Json& doc);

Json search_config_to_json(const SearchConfig& config);
SearchConfig search_config_from_json(const Json& doc);
Json search_result_to_json(const SearchResult& result);

// ---- report envelope -------------------------------------------------------
// {"schema_version", "tool", "generated_at", "input_digest", "payload"}.
// Everything except generated_at is deterministic for fixed inputs.

std::string fnv1a_digest(const std::string& bytes);
Json report_envelope(Json payload, const std::string& input_digest);

// ---- CSV -------------------------------------------------------------------

std::string records_to_csv(const std::vector<InequalityRecord>& records);
std::string fit_points_to_csv(const ExponentFit& fit);

}  // namespace sumprodlab
