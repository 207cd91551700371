#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dilint/model.hpp"
#include "dilint/parser.hpp"
#include "dilint/taxonomy.hpp"

namespace dilint {

// Configured severity per rule. Two cases are hardwired and ignore the
// configuration: an absent theme tag (R4) always reports Info, and R3 in
// scope-unchecked mode (all scope lists empty) always reports Info.
struct RuleConfig {
  std::map<Rule, Severity> severities;

  static RuleConfig defaults();  // R1=Warning, R2/R3/R4/P0=Error

  Severity severity_of(Rule rule) const;

  friend bool operator==(const RuleConfig&, const RuleConfig&) = default;
};

// Dimensions that qualify a story under R2: the scope's explicit
// protected_dimensions (canonicalized) when non-empty, otherwise every
// dimension the lexicon flags as protected.
std::set<std::string> effective_protected(const ProjectScope& scope,
                                          const AttributeLexicon& lexicon);

// R1: rationale present and no slot is vacuous (made only of articles,
// pronouns and auxiliary verbs).
std::vector<Diagnostic> check_template_completeness(
    const UserStory& story, const RuleConfig& rules = RuleConfig::defaults());

// How a story satisfies (or fails) the D&I qualification constraint.
struct DIQualification {
  bool role_path = false;       // protected tag on the role (annotation or inferred)
  bool behaviour_path = false;  // protected tag inferred from predicate + rationale

  bool passes() const { return role_path || behaviour_path; }
};

DIQualification evaluate_di_qualification(const UserStory& story,
                                          const AttributeLexicon& lexicon,
                                          const ProjectScope& scope);

// R2: story must reference a protected attribute via the role or the
// behaviour path.
std::vector<Diagnostic> check_di_qualification(
    const UserStory& story, const AttributeLexicon& lexicon, const ProjectScope& scope,
    const RuleConfig& rules = RuleConfig::defaults());

struct SubjectMatch {
  SubjectKind kind = SubjectKind::Unknown;
  std::string entry;  // the scope entry that matched
};

// Longest scope entry occurring case-insensitively inside the subject
// phrase; roles win ties over processes, processes over artifacts.
std::optional<SubjectMatch> match_subject(std::string_view subject_phrase,
                                          const ProjectScope& scope);

// R3: subject must match a scope entry; sets story.subject_kind. With an
// empty scope the check cannot decide and reports Info per story.
std::vector<Diagnostic> check_actionability(UserStory& story, const ProjectScope& scope,
                                            const RuleConfig& rules = RuleConfig::defaults());

// R4: reports absent theme tags (Info) and duplicate ids (configured
// severity).
std::vector<Diagnostic> check_theme_tags(const UserStory& story,
                                         const RuleConfig& rules = RuleConfig::defaults());

// Runs R1-R4 over every story (setting subject kinds), re-maps parse-error
// severities per `rules`, and returns all diagnostics ordered by span.
std::vector<Diagnostic> lint(ParseOutcome& outcome, const AttributeLexicon& lexicon,
                             const ProjectScope& scope, const RuleConfig& rules);

}  // namespace dilint
