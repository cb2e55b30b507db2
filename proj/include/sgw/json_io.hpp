#pragma once

#include <string>

#include "json.hpp"
#include "sgw/cayley.hpp"
#include "sgw/classifier.hpp"
#include "sgw/models.hpp"
#include "sgw/oracle.hpp"
#include "sgw/suites.hpp"

namespace sgw {

/// Schema: {"name", "order", "labels", "table", "zero"?, "identity"?}.
/// "table" is a list of rows; row index = left factor. "zero"/"identity"
/// appear only when the element exists.
nlohmann::json table_to_json(const CayleyTable& S);

/// Validates the table (associativity re-proved) and checks any declared
/// "zero"/"identity" against what the table actually has.
CayleyTable table_from_json(const nlohmann::json& j);

CayleyTable load_table_file(const std::string& path);

nlohmann::json model_to_json(const LabeledModel& m);

nlohmann::json classification_to_json(const Classification& c);

nlohmann::json counterexample_to_json(const Counterexample& c);
Counterexample counterexample_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const SuiteReport& r);

}  // namespace sgw
