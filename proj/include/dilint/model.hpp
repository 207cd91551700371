#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dilint {

/// The five structuring pillars of the built-in theme taxonomy.
enum class Pillar { Humans, Data, Process, System, Governance };

enum class SubjectKind { Role, Process, Artifact, Unknown };

enum class AttributeOrigin { ExplicitAnnotation, LexiconInferred };

enum class Rule {
  R1_TemplateCompleteness,
  R2_DIQualification,
  R3_Actionability,
  R4_ThemeTag,
  P0_ParseError,
};

enum class Severity { Error, Warning, Info };

/// File plus 1-based inclusive line range.
struct SourceSpan {
  std::string file;
  int line_start = 0;
  int line_end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/// One diversity dimension attached to a story, either written out in the
/// story's bracket annotation or inferred from the lexicon. `value` holds the
/// concrete phrase ("visual impairment") when one is known.
struct AttributeTag {
  std::string dimension;
  std::optional<std::string> value;
  AttributeOrigin origin = AttributeOrigin::ExplicitAnnotation;

  friend bool operator==(const AttributeTag&, const AttributeTag&) = default;
};

struct Theme {
  int id = 0;
  Pillar pillar = Pillar::Humans;
  std::string title;

  friend bool operator==(const Theme&, const Theme&) = default;
};

struct Diagnostic {
  Rule rule = Rule::P0_ParseError;
  Severity severity = Severity::Error;
  SourceSpan span;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Roles, processes and artifacts under the project owner's control, plus the
/// dimensions this project treats as protected.
///
/// When all three name lists are empty, linting runs in scope-unchecked mode:
/// R3 cannot decide actionability and reports at Info severity instead.
/// An empty `protected_dimensions` list means "defer to the lexicon's
/// protected flags".
struct ProjectScope {
  std::vector<std::string> roles;
  std::vector<std::string> processes;
  std::vector<std::string> artifacts;
  std::vector<std::string> protected_dimensions;

  bool scope_unchecked() const {
    return roles.empty() && processes.empty() && artifacts.empty();
  }

  friend bool operator==(const ProjectScope&, const ProjectScope&) = default;
};

/// One parsed story. Value type, immutable by convention once built; safe to
/// copy across threads.
struct UserStory {
  std::string raw_text;
  std::string role_phrase;  // without the leading "As a/an/the"
  std::optional<std::string> context_clause;
  std::string subject_phrase;
  SubjectKind subject_kind = SubjectKind::Unknown;
  std::string predicate;
  std::optional<std::string> rationale;
  std::vector<AttributeTag> attributes;
  std::vector<int> themes;
  SourceSpan span;

  friend bool operator==(const UserStory&, const UserStory&) = default;
};

/// Collapses whitespace runs to single spaces and trims both ends. Case is
/// preserved; idempotent.
std::string normalize(std::string_view text);

/// ASCII lowercase copy; non-ASCII bytes pass through.
std::string to_lower(std::string_view text);

std::string_view to_string(Pillar pillar);
std::string_view to_string(SubjectKind kind);
std::string_view to_string(AttributeOrigin origin);
std::string_view to_string(Rule rule);      // short form: "P0", "R1".."R4"
std::string_view to_string(Severity severity);  // "error" | "warning" | "info"

std::optional<Pillar> pillar_from_string(std::string_view name);
std::optional<SubjectKind> subject_kind_from_string(std::string_view name);
std::optional<AttributeOrigin> origin_from_string(std::string_view name);
std::optional<Rule> rule_from_string(std::string_view name);
std::optional<Severity> severity_from_string(std::string_view name);

}  // namespace dilint
