#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dilint/model.hpp"
#include "dilint/taxonomy.hpp"

namespace dilint {

struct ParseError {
  std::string message;

  friend bool operator==(const ParseError&, const ParseError&) = default;
};

struct AnnotationParse {
  std::vector<AttributeTag> attributes;  // ExplicitAnnotation, canonical dimensions
  std::vector<int> themes;               // as written, validated 1..23
  std::vector<std::string> warnings;     // e.g. unknown dimension labels (dropped)
};

// Parses a trailing "[...]" annotation. Labels before the "Theme" keyword
// are attribute dimensions (separators "," "&" "/"), canonicalized against
// the lexicon; unknown labels are dropped with a warning. Integers after
// "Theme" are theme ids.
std::variant<AnnotationParse, ParseError> parse_annotation(std::string_view text,
                                                           const AttributeLexicon& lexicon);

struct StoryParse {
  UserStory story;
  std::vector<std::string> warnings;
};

// Parses one story block:
//   As <a|an|the> <role>[, <context>] I want <subject> to <predicate>
//   [so that <rationale>][.] [<annotation>]
// The comma before "I want" is optional; the first comma ends the role and
// anything between it and "I want" is the context clause, kept verbatim.
// Slots are stored whitespace-normalized; raw_text keeps the input.
// story.attributes holds the annotation tags followed by lexicon inference
// over role and predicate; subject_kind is left Unknown for the validator.
std::variant<StoryParse, ParseError> parse_story(std::string_view text,
                                                 const AttributeLexicon& lexicon);

struct ParseOutcome {
  std::vector<UserStory> stories;
  std::vector<Diagnostic> diagnostics;  // P0: Error per failed block, Warning per note

  friend bool operator==(const ParseOutcome&, const ParseOutcome&) = default;
};

// Parses a `.distories` stream: "#" lines are comments, blank lines separate
// blocks, one story per block. Failed blocks become P0 Error diagnostics and
// parsing continues; every block yields a story or an Error, never both.
ParseOutcome parse_corpus(std::istream& input, const std::string& file_name,
                          const AttributeLexicon& lexicon);

ParseOutcome parse_corpus_text(std::string_view text, const std::string& file_name,
                               const AttributeLexicon& lexicon);

// Canonical single-line rendering:
//   "As a <role>, [<context> ]I want <subject> to <predicate>[ so that
//   <rationale>]. [<dims>, Theme <ids>]"
// Only ExplicitAnnotation attributes are rendered (inference is recomputed
// on parse). render -> parse -> render is a fixed point.
std::string render_story(const UserStory& story);

}  // namespace dilint
