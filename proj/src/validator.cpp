#include "dilint/validator.hpp"

#include <algorithm>
#include <cctype>

namespace dilint {

namespace {

// Articles, pronouns and auxiliary verbs; a slot made only of these carries
// no content ("do it").
const std::set<std::string>& filler_words() {
  static const std::set<std::string> words = {
      "a",     "an",    "the",  "i",     "me",    "my",    "mine",  "we",    "us",
      "our",   "ours",  "you",  "your",  "yours", "he",    "him",   "his",   "she",
      "her",   "hers",  "it",   "its",   "they",  "them",  "their", "theirs", "this",
      "that",  "these", "those", "do",   "does",  "did",   "be",    "is",    "are",
      "was",   "were",  "been", "being", "have",  "has",   "had",   "will",  "would",
      "can",   "could", "shall", "should", "may", "might", "must",  "to",    "so"};
  return words;
}

bool is_vacuous(std::string_view slot) {
  std::string token;
  bool any_token = false;
  auto check = [&]() -> bool {
    if (token.empty()) return true;
    any_token = true;
    const bool filler = filler_words().count(token) > 0;
    token.clear();
    return filler;
  };
  for (char c : slot) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      token.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!check()) {
      return false;
    }
  }
  if (!check()) return false;
  return any_token;
}

Diagnostic make(Rule rule, Severity severity, const UserStory& story, std::string message) {
  return Diagnostic{rule, severity, story.span, std::move(message)};
}

}  // namespace

RuleConfig RuleConfig::defaults() {
  RuleConfig config;
  config.severities = {
      {Rule::P0_ParseError, Severity::Error},  {Rule::R1_TemplateCompleteness, Severity::Warning},
      {Rule::R2_DIQualification, Severity::Error}, {Rule::R3_Actionability, Severity::Error},
      {Rule::R4_ThemeTag, Severity::Error},
  };
  return config;
}

Severity RuleConfig::severity_of(Rule rule) const {
  if (const auto it = severities.find(rule); it != severities.end()) return it->second;
  return RuleConfig::defaults().severities.at(rule);
}

std::set<std::string> effective_protected(const ProjectScope& scope,
                                          const AttributeLexicon& lexicon) {
  std::set<std::string> out;
  if (scope.protected_dimensions.empty()) {
    for (std::string& dimension : lexicon.protected_dimensions()) out.insert(std::move(dimension));
    return out;
  }
  for (const std::string& name : scope.protected_dimensions) {
    if (auto canonical = lexicon.canonical_dimension(name)) {
      out.insert(std::move(*canonical));
    } else {
      out.insert(normalize(name));
    }
  }
  return out;
}

std::vector<Diagnostic> check_template_completeness(const UserStory& story,
                                                    const RuleConfig& rules) {
  const Severity severity = rules.severity_of(Rule::R1_TemplateCompleteness);
  std::vector<Diagnostic> out;
  if (!story.rationale) {
    out.push_back(make(Rule::R1_TemplateCompleteness, severity, story,
                       "missing rationale: no \"so that\" clause in \"" +
                           normalize(story.raw_text).substr(0, 60) + "\""));
  }
  const std::pair<const char*, const std::string*> slots[] = {
      {"role", &story.role_phrase},
      {"subject", &story.subject_phrase},
      {"predicate", &story.predicate},
  };
  for (const auto& [name, value] : slots) {
    if (is_vacuous(*value)) {
      out.push_back(make(Rule::R1_TemplateCompleteness, severity, story,
                         std::string(name) + " slot carries no content: \"" + *value + "\""));
    }
  }
  if (story.rationale && is_vacuous(*story.rationale)) {
    out.push_back(make(Rule::R1_TemplateCompleteness, severity, story,
                       "rationale slot carries no content: \"" + *story.rationale + "\""));
  }
  return out;
}

DIQualification evaluate_di_qualification(const UserStory& story,
                                          const AttributeLexicon& lexicon,
                                          const ProjectScope& scope) {
  const std::set<std::string> protected_dims = effective_protected(scope, lexicon);
  DIQualification result;
  for (const AttributeTag& tag : story.attributes) {
    if (tag.origin == AttributeOrigin::ExplicitAnnotation && protected_dims.count(tag.dimension)) {
      result.role_path = true;
      break;
    }
  }
  if (!result.role_path) {
    for (const AttributeTag& tag : infer_attributes(story.role_phrase, lexicon)) {
      if (protected_dims.count(tag.dimension)) {
        result.role_path = true;
        break;
      }
    }
  }
  std::string behaviour = story.predicate;
  if (story.rationale) behaviour += " " + *story.rationale;
  for (const AttributeTag& tag : infer_attributes(behaviour, lexicon)) {
    if (protected_dims.count(tag.dimension)) {
      result.behaviour_path = true;
      break;
    }
  }
  return result;
}

std::vector<Diagnostic> check_di_qualification(const UserStory& story,
                                               const AttributeLexicon& lexicon,
                                               const ProjectScope& scope,
                                               const RuleConfig& rules) {
  if (evaluate_di_qualification(story, lexicon, scope).passes()) return {};
  return {make(Rule::R2_DIQualification, rules.severity_of(Rule::R2_DIQualification), story,
               "no protected attribute qualifies the role \"" + story.role_phrase +
                   "\" and none is referenced by the behaviour")};
}

std::optional<SubjectMatch> match_subject(std::string_view subject_phrase,
                                          const ProjectScope& scope) {
  const std::string subject = to_lower(normalize(subject_phrase));
  std::optional<SubjectMatch> best;
  auto consider = [&](const std::vector<std::string>& entries, SubjectKind kind) {
    for (const std::string& entry : entries) {
      const std::string needle = to_lower(normalize(entry));
      if (needle.empty() || subject.find(needle) == std::string::npos) continue;
      if (!best || needle.size() > to_lower(normalize(best->entry)).size()) {
        best = SubjectMatch{kind, entry};
      }
    }
  };
  consider(scope.roles, SubjectKind::Role);
  consider(scope.processes, SubjectKind::Process);
  consider(scope.artifacts, SubjectKind::Artifact);
  return best;
}

std::vector<Diagnostic> check_actionability(UserStory& story, const ProjectScope& scope,
                                            const RuleConfig& rules) {
  if (scope.scope_unchecked()) {
    story.subject_kind = SubjectKind::Unknown;
    return {make(Rule::R3_Actionability, Severity::Info, story,
                 "actionability of subject \"" + story.subject_phrase +
                     "\" not checked: project scope is empty")};
  }
  if (const auto matched = match_subject(story.subject_phrase, scope)) {
    story.subject_kind = matched->kind;
    return {};
  }
  story.subject_kind = SubjectKind::Unknown;
  return {make(Rule::R3_Actionability, rules.severity_of(Rule::R3_Actionability), story,
               "subject \"" + story.subject_phrase +
                   "\" is not actionable within project scope (no declared role, process or "
                   "artifact matches)")};
}

std::vector<Diagnostic> check_theme_tags(const UserStory& story, const RuleConfig& rules) {
  std::vector<Diagnostic> out;
  if (story.themes.empty()) {
    out.push_back(make(Rule::R4_ThemeTag, Severity::Info, story,
                       "story carries no Theme tag; coverage analysis will skip it"));
    return out;
  }
  std::set<int> seen;
  for (const int id : story.themes) {
    if (!seen.insert(id).second) {
      out.push_back(make(Rule::R4_ThemeTag, rules.severity_of(Rule::R4_ThemeTag), story,
                         "duplicate theme tag " + std::to_string(id)));
    }
  }
  return out;
}

std::vector<Diagnostic> lint(ParseOutcome& outcome, const AttributeLexicon& lexicon,
                             const ProjectScope& scope, const RuleConfig& rules) {
  std::vector<Diagnostic> diagnostics;
  for (const Diagnostic& d : outcome.diagnostics) {
    Diagnostic mapped = d;
    if (mapped.rule == Rule::P0_ParseError && mapped.severity == Severity::Error) {
      mapped.severity = rules.severity_of(Rule::P0_ParseError);
    }
    diagnostics.push_back(std::move(mapped));
  }
  for (UserStory& story : outcome.stories) {
    for (auto&& d : check_template_completeness(story, rules)) diagnostics.push_back(d);
    for (auto&& d : check_di_qualification(story, lexicon, scope, rules)) diagnostics.push_back(d);
    for (auto&& d : check_actionability(story, scope, rules)) diagnostics.push_back(d);
    for (auto&& d : check_theme_tags(story, rules)) diagnostics.push_back(d);
  }
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     if (a.span.file != b.span.file) return a.span.file < b.span.file;
                     if (a.span.line_start != b.span.line_start)
                       return a.span.line_start < b.span.line_start;
                     return a.span.line_end < b.span.line_end;
                   });
  return diagnostics;
}

}  // namespace dilint
