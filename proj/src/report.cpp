#include "dilint/report.hpp"

#include <sstream>

namespace dilint {

namespace {

using nlohmann::ordered_json;

ordered_json optional_string(const std::optional<std::string>& value) {
  if (value) return *value;
  return nullptr;
}

std::optional<std::string> optional_from(const nlohmann::json& value) {
  if (value.is_null()) return std::nullopt;
  return value.get<std::string>();
}

std::string join_ints(const std::set<int>& values) {
  std::ostringstream out;
  bool first = true;
  for (const int v : values) {
    if (!first) out << ", ";
    out << v;
    first = false;
  }
  return out.str();
}

}  // namespace

ordered_json span_to_json(const SourceSpan& span) {
  return {{"file", span.file}, {"line_start", span.line_start}, {"line_end", span.line_end}};
}

SourceSpan span_from_json(const nlohmann::json& value) {
  return SourceSpan{value.at("file").get<std::string>(), value.at("line_start").get<int>(),
                    value.at("line_end").get<int>()};
}

ordered_json story_to_json(const UserStory& story) {
  ordered_json attributes = ordered_json::array();
  for (const AttributeTag& tag : story.attributes) {
    attributes.push_back({{"dimension", tag.dimension},
                          {"value", optional_string(tag.value)},
                          {"origin", to_string(tag.origin)}});
  }
  return {{"raw_text", story.raw_text},
          {"role_phrase", story.role_phrase},
          {"context_clause", optional_string(story.context_clause)},
          {"subject_phrase", story.subject_phrase},
          {"subject_kind", to_string(story.subject_kind)},
          {"predicate", story.predicate},
          {"rationale", optional_string(story.rationale)},
          {"attributes", std::move(attributes)},
          {"themes", story.themes},
          {"span", span_to_json(story.span)}};
}

UserStory story_from_json(const nlohmann::json& value) {
  UserStory story;
  story.raw_text = value.at("raw_text").get<std::string>();
  story.role_phrase = value.at("role_phrase").get<std::string>();
  story.context_clause = optional_from(value.at("context_clause"));
  story.subject_phrase = value.at("subject_phrase").get<std::string>();
  story.subject_kind =
      subject_kind_from_string(value.at("subject_kind").get<std::string>()).value();
  story.predicate = value.at("predicate").get<std::string>();
  story.rationale = optional_from(value.at("rationale"));
  for (const auto& tag : value.at("attributes")) {
    story.attributes.push_back(
        AttributeTag{tag.at("dimension").get<std::string>(), optional_from(tag.at("value")),
                     origin_from_string(tag.at("origin").get<std::string>()).value()});
  }
  story.themes = value.at("themes").get<std::vector<int>>();
  story.span = span_from_json(value.at("span"));
  return story;
}

ordered_json diagnostic_to_json(const Diagnostic& diagnostic) {
  return {{"rule", to_string(diagnostic.rule)},
          {"severity", to_string(diagnostic.severity)},
          {"span", span_to_json(diagnostic.span)},
          {"message", diagnostic.message}};
}

Diagnostic diagnostic_from_json(const nlohmann::json& value) {
  return Diagnostic{rule_from_string(value.at("rule").get<std::string>()).value(),
                    severity_from_string(value.at("severity").get<std::string>()).value(),
                    span_from_json(value.at("span")),
                    value.at("message").get<std::string>()};
}

namespace {

ordered_json coverage_to_json(const CoverageReport& coverage) {
  ordered_json pillars = ordered_json::object();
  for (const auto& [pillar, counts] : coverage.pillar_coverage) {
    pillars[std::string(to_string(pillar))] = {{"covered", counts.covered},
                                               {"total", counts.total}};
  }
  return {{"story_count", coverage.story_count},
          {"covered_themes", std::vector<int>(coverage.covered_themes.begin(),
                                              coverage.covered_themes.end())},
          {"gaps", std::vector<int>(coverage.gaps.begin(), coverage.gaps.end())},
          {"pillars", std::move(pillars)}};
}

ordered_json conflicts_to_json(const std::vector<ConflictFinding>& findings) {
  ordered_json out = ordered_json::array();
  for (const ConflictFinding& finding : findings) {
    ordered_json refs_a = ordered_json::array();
    for (const SourceSpan& span : finding.story_refs_a) refs_a.push_back(span_to_json(span));
    ordered_json refs_b = ordered_json::array();
    for (const SourceSpan& span : finding.story_refs_b) refs_b.push_back(span_to_json(span));
    out.push_back({{"themes", {finding.pair.low, finding.pair.high}},
                   {"rationale", finding.pair.rationale},
                   {"stories_a", std::move(refs_a)},
                   {"stories_b", std::move(refs_b)}});
  }
  return out;
}

ordered_json summary_to_json(const std::vector<Diagnostic>& diagnostics) {
  int errors = 0;
  int warnings = 0;
  int infos = 0;
  for (const Diagnostic& d : diagnostics) {
    switch (d.severity) {
      case Severity::Error: ++errors; break;
      case Severity::Warning: ++warnings; break;
      case Severity::Info: ++infos; break;
    }
  }
  return {{"error", errors}, {"warning", warnings}, {"info", infos}};
}

}  // namespace

ordered_json report_to_json(const std::vector<Diagnostic>& diagnostics,
                            const std::vector<UserStory>& stories,
                            const CoverageReport& coverage,
                            const std::vector<ConflictFinding>& conflicts,
                            const AttributeDistribution& attributes) {
  ordered_json diags = ordered_json::array();
  for (const Diagnostic& d : diagnostics) diags.push_back(diagnostic_to_json(d));
  ordered_json story_list = ordered_json::array();
  for (const UserStory& s : stories) story_list.push_back(story_to_json(s));
  ordered_json attr = ordered_json::object();
  for (const auto& [dimension, count] : attributes.counts) attr[dimension] = count;
  return {{"diagnostics", std::move(diags)},
          {"stories", std::move(story_list)},
          {"coverage", coverage_to_json(coverage)},
          {"conflicts", conflicts_to_json(conflicts)},
          {"attributes", std::move(attr)},
          {"diagnostics_summary", summary_to_json(diagnostics)}};
}

std::string render_diagnostic(const Diagnostic& diagnostic) {
  std::ostringstream out;
  out << (diagnostic.span.file.empty() ? "<input>" : diagnostic.span.file) << ":"
      << diagnostic.span.line_start;
  if (diagnostic.span.line_end > diagnostic.span.line_start) {
    out << "-" << diagnostic.span.line_end;
  }
  out << ": " << to_string(diagnostic.severity) << ": [" << to_string(diagnostic.rule) << "] "
      << diagnostic.message;
  return out.str();
}

std::string render_text_report(const CoverageReport& coverage,
                               const std::vector<ConflictFinding>& conflicts,
                               const AttributeDistribution& attributes,
                               const std::vector<Diagnostic>& diagnostics) {
  std::ostringstream out;
  out << "Coverage: " << coverage.covered_themes.size() << "/23 themes across "
      << coverage.story_count << (coverage.story_count == 1 ? " story" : " stories") << "\n";
  for (const auto& [pillar, counts] : coverage.pillar_coverage) {
    out << "  " << to_string(pillar);
    for (std::size_t i = to_string(pillar).size(); i < 11; ++i) out << ' ';
    out << counts.covered << "/" << counts.total << "\n";
  }
  if (!coverage.gaps.empty()) {
    out << "  gaps: " << join_ints(coverage.gaps) << "\n";
  }

  if (!conflicts.empty()) {
    out << "\nConflicts needing trade-off review:\n";
    for (const ConflictFinding& finding : conflicts) {
      out << "  themes " << finding.pair.low << " & " << finding.pair.high << ": "
          << finding.pair.rationale << " (" << finding.story_refs_a.size() << " vs "
          << finding.story_refs_b.size() << " stories)\n";
    }
  }

  if (!attributes.counts.empty()) {
    out << "\nAttribute spread (stories per dimension):\n";
    for (const auto& [dimension, count] : attributes.counts) {
      out << "  " << dimension;
      for (std::size_t i = dimension.size(); i < 21; ++i) out << ' ';
      out << count << "\n";
    }
  }

  const auto summary = summary_to_json(diagnostics);
  out << "\nDiagnostics: " << summary.at("error").get<int>() << " errors, "
      << summary.at("warning").get<int>() << " warnings, " << summary.at("info").get<int>()
      << " infos\n";
  return out.str();
}

}  // namespace dilint
