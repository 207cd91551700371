#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dilint/analyzer.hpp"
#include "dilint/model.hpp"

namespace dilint {

// JSON (de)serialization. All emitters use ordered_json with a fixed key
// order and integer-only numbers, so identical inputs dump byte-identically.

nlohmann::ordered_json span_to_json(const SourceSpan& span);
SourceSpan span_from_json(const nlohmann::json& value);

nlohmann::ordered_json story_to_json(const UserStory& story);
UserStory story_from_json(const nlohmann::json& value);

nlohmann::ordered_json diagnostic_to_json(const Diagnostic& diagnostic);
Diagnostic diagnostic_from_json(const nlohmann::json& value);

// Full machine-readable report: keys "diagnostics", "stories", "coverage",
// "conflicts", "attributes", "diagnostics_summary" in that order.
nlohmann::ordered_json report_to_json(const std::vector<Diagnostic>& diagnostics,
                                      const std::vector<UserStory>& stories,
                                      const CoverageReport& coverage,
                                      const std::vector<ConflictFinding>& conflicts,
                                      const AttributeDistribution& attributes);

// "file:line: severity: [rule] message"
std::string render_diagnostic(const Diagnostic& diagnostic);

// Human-readable coverage / conflict / attribute / diagnostics summary.
std::string render_text_report(const CoverageReport& coverage,
                               const std::vector<ConflictFinding>& conflicts,
                               const AttributeDistribution& attributes,
                               const std::vector<Diagnostic>& diagnostics);

}  // namespace dilint
