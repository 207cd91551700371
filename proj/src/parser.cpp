#include "dilint/parser.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace dilint {

namespace {

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// First occurrence of `word` in `text` at or after `from` with
// non-alphanumeric characters (or the text ends) on both sides.
std::size_t find_word(std::string_view text, std::string_view word, std::size_t from = 0) {
  while (true) {
    const std::size_t pos = text.find(word, from);
    if (pos == std::string_view::npos) return std::string_view::npos;
    const bool left_ok = pos == 0 || !is_word_char(text[pos - 1]);
    const std::size_t end = pos + word.size();
    const bool right_ok = end == text.size() || !is_word_char(text[end]);
    if (left_ok && right_ok) return pos;
    from = pos + 1;
  }
}

std::string trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

std::string strip_one_trailing(std::string text, char c) {
  if (!text.empty() && text.back() == c) text.pop_back();
  return trim(text);
}

std::string fragment(std::string_view text) {
  const std::string flat = normalize(text);
  if (flat.size() <= 60) return flat;
  return flat.substr(0, 57) + "...";
}

std::vector<std::string> split_annotation_tokens(std::string_view content) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : content) {
    if (c == ',' || c == '&' || c == '/') {
      tokens.push_back(trim(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  tokens.push_back(trim(current));
  return tokens;
}

// "Theme 12" / "theme" -> keyword recognized; trailing id returned if inline.
bool is_theme_token(const std::string& token, std::optional<int>& inline_id) {
  const std::string lowered = to_lower(token);
  if (lowered == "theme") {
    inline_id = std::nullopt;
    return true;
  }
  if (lowered.rfind("theme ", 0) != 0) return false;
  const std::string rest = trim(lowered.substr(6));
  if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) return false;
  inline_id = std::stoi(rest);
  return true;
}

}  // namespace

std::variant<AnnotationParse, ParseError> parse_annotation(std::string_view text,
                                                           const AttributeLexicon& lexicon) {
  const std::string flat = normalize(text);
  if (flat.size() < 2 || flat.front() != '[' || flat.back() != ']') {
    return ParseError{"annotation must be enclosed in \"[\" and \"]\""};
  }
  const std::string content = trim(flat.substr(1, flat.size() - 2));
  if (content.empty()) return ParseError{"annotation brackets are empty"};

  AnnotationParse out;
  bool in_themes = false;
  for (const std::string& token : split_annotation_tokens(content)) {
    if (token.empty()) return ParseError{"empty token in annotation \"" + flat + "\""};
    if (!in_themes) {
      std::optional<int> inline_id;
      if (is_theme_token(token, inline_id)) {
        in_themes = true;
        if (inline_id) {
          if (*inline_id < 1 || *inline_id > 23) {
            return ParseError{"theme id " + std::to_string(*inline_id) + " outside 1..23"};
          }
          out.themes.push_back(*inline_id);
        }
        continue;
      }
      if (auto canonical = lexicon.canonical_dimension(token)) {
        out.attributes.push_back(
            AttributeTag{*canonical, std::nullopt, AttributeOrigin::ExplicitAnnotation});
      } else {
        out.warnings.push_back("unknown attribute dimension \"" + token + "\" dropped");
      }
    } else {
      if (token.find_first_not_of("0123456789") != std::string::npos) {
        return ParseError{"expected theme id, found \"" + token + "\""};
      }
      const int id = std::stoi(token);
      if (id < 1 || id > 23) {
        return ParseError{"theme id " + std::to_string(id) + " outside 1..23"};
      }
      out.themes.push_back(id);
    }
  }
  return out;
}

std::variant<StoryParse, ParseError> parse_story(std::string_view text,
                                                 const AttributeLexicon& lexicon) {
  const std::string flat = normalize(text);
  if (flat.empty()) return ParseError{"empty story block"};

  std::string body = flat;
  AnnotationParse annotation;
  if (body.back() == ']') {
    const std::size_t open = body.rfind('[');
    if (open == std::string::npos) {
      return ParseError{"\"]\" without matching \"[\" in \"" + fragment(flat) + "\""};
    }
    auto parsed = parse_annotation(std::string_view(body).substr(open), lexicon);
    if (auto* err = std::get_if<ParseError>(&parsed)) return *err;
    annotation = std::move(std::get<AnnotationParse>(parsed));
    body = trim(body.substr(0, open));
  }

  if (body.rfind("As ", 0) != 0) {
    return ParseError{"missing \"As a/an/the\" opener in \"" + fragment(flat) + "\""};
  }
  std::size_t role_start = 3;
  bool article_found = false;
  for (std::string_view article : {"a ", "an ", "the "}) {
    if (body.compare(role_start, article.size(), article) == 0) {
      role_start += article.size();
      article_found = true;
      break;
    }
  }
  if (!article_found) {
    return ParseError{"expected article \"a\", \"an\" or \"the\" after \"As\" in \"" +
                      fragment(flat) + "\""};
  }

  const std::size_t want_pos = find_word(body, "I want", role_start);
  if (want_pos == std::string::npos) {
    return ParseError{"missing \"I want\" keyword in \"" + fragment(flat) + "\""};
  }

  const std::string role_region = trim(body.substr(role_start, want_pos - role_start));
  std::string role_phrase;
  std::optional<std::string> context_clause;
  if (const std::size_t comma = role_region.find(','); comma != std::string::npos) {
    role_phrase = trim(role_region.substr(0, comma));
    std::string context = strip_one_trailing(trim(role_region.substr(comma + 1)), ',');
    if (!context.empty()) context_clause = std::move(context);
  } else {
    role_phrase = role_region;
  }
  if (role_phrase.empty()) {
    return ParseError{"empty role slot in \"" + fragment(flat) + "\""};
  }

  const std::string rest = trim(body.substr(want_pos + 6));
  const std::size_t to_pos = find_word(rest, "to");
  if (to_pos == std::string::npos) {
    return ParseError{"missing \"to\" after the subject in \"" + fragment(flat) + "\""};
  }
  const std::string subject_phrase = trim(rest.substr(0, to_pos));
  if (subject_phrase.empty()) {
    return ParseError{"empty subject slot in \"" + fragment(flat) + "\""};
  }

  std::string tail = trim(rest.substr(to_pos + 2));
  std::string predicate;
  std::optional<std::string> rationale;
  if (const std::size_t so_pos = find_word(tail, "so that"); so_pos != std::string::npos) {
    predicate = strip_one_trailing(trim(tail.substr(0, so_pos)), ',');
    std::string r = strip_one_trailing(trim(tail.substr(so_pos + 7)), '.');
    if (!r.empty()) rationale = std::move(r);
  } else {
    predicate = strip_one_trailing(tail, '.');
  }
  if (predicate.empty()) {
    return ParseError{"empty predicate slot in \"" + fragment(flat) + "\""};
  }

  StoryParse out;
  out.story.raw_text = std::string(text);
  out.story.role_phrase = role_phrase;
  out.story.context_clause = context_clause;
  out.story.subject_phrase = subject_phrase;
  out.story.subject_kind = SubjectKind::Unknown;
  out.story.predicate = predicate;
  out.story.rationale = rationale;
  out.story.attributes = annotation.attributes;
  for (AttributeTag& tag : infer_attributes(role_phrase + " " + predicate, lexicon)) {
    out.story.attributes.push_back(std::move(tag));
  }
  out.story.themes = annotation.themes;
  out.warnings = annotation.warnings;
  return out;
}

ParseOutcome parse_corpus(std::istream& input, const std::string& file_name,
                          const AttributeLexicon& lexicon) {
  ParseOutcome outcome;
  std::string line;
  std::string block;
  int line_no = 0;
  int block_start = 0;
  int block_end = 0;

  auto flush_block = [&] {
    if (block.empty()) return;
    const SourceSpan span{file_name, block_start, block_end};
    auto parsed = parse_story(block, lexicon);
    if (auto* err = std::get_if<ParseError>(&parsed)) {
      outcome.diagnostics.push_back(
          Diagnostic{Rule::P0_ParseError, Severity::Error, span, err->message});
    } else {
      auto& story_parse = std::get<StoryParse>(parsed);
      story_parse.story.span = span;
      outcome.stories.push_back(std::move(story_parse.story));
      for (const std::string& warning : story_parse.warnings) {
        outcome.diagnostics.push_back(
            Diagnostic{Rule::P0_ParseError, Severity::Warning, span, warning});
      }
    }
    block.clear();
  };

  while (std::getline(input, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (!stripped.empty() && stripped.front() == '#') continue;
    if (stripped.empty()) {
      flush_block();
      continue;
    }
    if (block.empty()) {
      block_start = line_no;
    } else {
      block.push_back('\n');
    }
    block += line;
    block_end = line_no;
  }
  flush_block();
  return outcome;
}

ParseOutcome parse_corpus_text(std::string_view text, const std::string& file_name,
                               const AttributeLexicon& lexicon) {
  std::istringstream stream{std::string(text)};
  return parse_corpus(stream, file_name, lexicon);
}

std::string render_story(const UserStory& story) {
  std::string out = "As a " + story.role_phrase + ", ";
  if (story.context_clause) out += *story.context_clause + " ";
  out += "I want " + story.subject_phrase + " to " + story.predicate;
  if (story.rationale) out += " so that " + *story.rationale;
  out += ".";

  std::vector<std::string> dims;
  for (const AttributeTag& tag : story.attributes) {
    if (tag.origin == AttributeOrigin::ExplicitAnnotation) dims.push_back(tag.dimension);
  }
  if (!dims.empty() || !story.themes.empty()) {
    out += " [";
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (i > 0) out += ", ";
      out += dims[i];
    }
    if (!story.themes.empty()) {
      if (!dims.empty()) out += ", ";
      out += "Theme ";
      for (std::size_t i = 0; i < story.themes.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(story.themes[i]);
      }
    }
    out += "]";
  }
  return out;
}

}  // namespace dilint
