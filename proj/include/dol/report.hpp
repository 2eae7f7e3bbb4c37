#pragma once

// Serialization of reasoning results: a stable JSON shape for tools and a
// plain text rendering for people.

#include <json.hpp>

#include "dol/syntax.hpp"
#include "dol/verification.hpp"

namespace dol {

using Json = nlohmann::ordered_json;

/// {"domain_size": n, "tables": {pred: [[...], ...]}, "constants": {c: v}}.
/// Symbol names are compacted with `prefixes` when given.
Json model_to_json(const FiniteModel& model, const PrefixMap* prefixes = nullptr);
Json verdict_to_json(const Verdict& verdict, const PrefixMap* prefixes = nullptr);
Json report_to_json(const RelationshipReport& report, const PrefixMap* prefixes = nullptr);

/// One line per relation, e.g. "leq = {(0,0), (1,1)}".
std::string model_to_text(const FiniteModel& model, const PrefixMap* prefixes = nullptr);
std::string report_to_text(const RelationshipReport& report, const PrefixMap* prefixes = nullptr);

/// "VerifiedUpToBound(3)", "Refuted", ...
std::string overall_label(const RelationshipReport& report);

}  // namespace dol
