#include "dilint/taxonomy.hpp"

#include <cctype>
#include <stdexcept>

namespace dilint {

namespace {

std::array<Theme, 23> build_registry() {
  using enum Pillar;
  std::array<Theme, 23> themes = {{
      {1, Humans, "AI Lifecycle: Representation, Diversity, and Inclusion"},
      {2, Humans, "AI Stakeholder: Engagement and Collaboration"},
      {3, Humans, "AI Context: Awareness and Conflict Management"},
      {4, Humans, "AI Foundations: Socio-technical Approach"},
      {5, Humans, "AI Education: Inclusive Infrastructure and Training"},
      {6, Humans, "AI Opportunities: Equitable Practices and Challenges"},
      {7, Humans, "AI Challenges: Inclusion Aspects"},
      {8, Data, "AI Data: Transparency and Explainability"},
      {9, Data, "AI Data Security: Privacy, Sovereignty, and Infrastructure"},
      {10, Data, "AI Data Modelling: Selection and Development"},
      {11, Data, "AI Data Management: Documentation and Examination"},
      {12, Data, "AI Data Analysis: Bias and Inequity"},
      {13, Data, "AI Data Traits: Demographic Considerations"},
      {14, Process, "AI Analysis: Bias and Marginalization"},
      {15, Process, "AI Performance: Evaluation, Monitoring, and Refinement"},
      {16, Process, "AI Design: Trade-offs Considerations"},
      {17, System, "AI System Design: Inclusive Design and Development"},
      {18, System, "AI Awareness: Bias Recognition and Understanding"},
      {19, System, "AI Tools Evaluation: Bias and Representation"},
      {20, Governance, "AI System Usability: Accessibility Assessment"},
      {21, Governance, "AI Strategy: Policy and Governance"},
      {22, Governance, "AI Safety Protocols: Risk Management and Standards"},
      {23, Governance, "AI Ethical Directives: Equity, Diversity, and Inclusion Principles"},
  }};

  // Pillar totals are fixed by the taxonomy; refuse to start with a
  // corrupted table.
  int totals[5] = {0, 0, 0, 0, 0};
  for (std::size_t i = 0; i < themes.size(); ++i) {
    if (themes[i].id != static_cast<int>(i) + 1)
      throw std::logic_error("theme registry ids out of order");
    ++totals[static_cast<int>(themes[i].pillar)];
  }
  const int expected[5] = {7, 6, 3, 3, 4};
  for (int p = 0; p < 5; ++p) {
    if (totals[p] != expected[p]) throw std::logic_error("theme registry pillar totals wrong");
  }
  return themes;
}

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

struct TermMatch {
  std::size_t pos = 0;
  std::size_t len = 0;
};

// Case-insensitive whole-word occurrence of `term` in `text`, tolerating a
// trailing plural "s" on the text side. Word boundaries are non-alphanumeric.
std::optional<TermMatch> find_term(const std::string& text_lower, const std::string& term_lower) {
  if (term_lower.empty()) return std::nullopt;
  std::size_t from = 0;
  while (true) {
    const std::size_t pos = text_lower.find(term_lower, from);
    if (pos == std::string::npos) return std::nullopt;
    const bool left_ok = pos == 0 || !is_word_char(text_lower[pos - 1]);
    std::size_t end = pos + term_lower.size();
    if (left_ok) {
      if (end < text_lower.size() && text_lower[end] == 's' &&
          (end + 1 == text_lower.size() || !is_word_char(text_lower[end + 1]))) {
        return TermMatch{pos, term_lower.size() + 1};
      }
      if (end == text_lower.size() || !is_word_char(text_lower[end])) {
        return TermMatch{pos, term_lower.size()};
      }
    }
    from = pos + 1;
  }
}

}  // namespace

const std::array<Theme, 23>& theme_registry() {
  static const std::array<Theme, 23> registry = build_registry();
  return registry;
}

const Theme& theme_by_id(int id) {
  if (id < 1 || id > 23)
    throw std::out_of_range("theme id " + std::to_string(id) + " outside 1..23");
  return theme_registry()[static_cast<std::size_t>(id - 1)];
}

Pillar pillar_of(int theme_id) { return theme_by_id(theme_id).pillar; }

int pillar_theme_total(Pillar pillar) {
  int total = 0;
  for (const Theme& t : theme_registry()) {
    if (t.pillar == pillar) ++total;
  }
  return total;
}

bool AttributeLexicon::has_dimension(std::string_view name) const {
  return canonical_dimension(name).has_value();
}

std::optional<std::string> AttributeLexicon::canonical_dimension(std::string_view name) const {
  const std::string key = to_lower(normalize(name));
  if (auto alias = aliases_.find(key); alias != aliases_.end()) return alias->second;
  for (const auto& [dimension, entry] : entries_) {
    if (to_lower(dimension) == key) return dimension;
  }
  return std::nullopt;
}

bool AttributeLexicon::is_protected(std::string_view dimension) const {
  const auto canonical = canonical_dimension(dimension);
  if (!canonical) return false;
  return entries_.at(*canonical).is_protected;
}

std::vector<std::string> AttributeLexicon::protected_dimensions() const {
  std::vector<std::string> out;
  for (const auto& [dimension, entry] : entries_) {
    if (entry.is_protected) out.push_back(dimension);
  }
  return out;
}

void AttributeLexicon::upsert(std::string dimension, LexiconEntry entry) {
  for (std::string& term : entry.terms) term = normalize(term);
  entries_[std::move(dimension)] = std::move(entry);
}

void AttributeLexicon::add_alias(std::string alias, std::string_view dimension) {
  aliases_[to_lower(normalize(alias))] = std::string(dimension);
}

const AttributeLexicon& AttributeLexicon::defaults() {
  static const AttributeLexicon lexicon = [] {
    AttributeLexicon lex;
    auto add = [&lex](std::string dimension, std::vector<std::string> terms) {
      lex.upsert(std::move(dimension), LexiconEntry{true, std::move(terms)});
    };
    add("Race", {"race", "black", "white", "african descent"});
    add("Color", {"color", "colour", "skin tone"});
    add("Sex", {"sex", "intersex"});
    add("Language", {"language", "dialect", "non-native", "multilingual"});
    add("Religion", {"religion", "religious", "faith", "muslim", "hijab", "niqab"});
    add("National Origin", {"national origin", "nationality", "immigrant", "foreign"});
    add("Social Origin", {"social origin", "social background", "working class"});
    add("Property", {"property", "income", "wealth", "homeless"});
    add("Birth", {"birth", "birthplace"});
    add("Gender", {"gender", "woman", "women", "female", "male", "man", "men", "lady"});
    add("Gender Identity", {"gender identity", "non-binary", "transgender"});
    add("Age", {"age", "young", "old", "elderly", "senior", "teenager"});
    add("Disability",
        {"disability", "disabilities", "impairment", "visual impairment", "visually impaired",
         "speech disability", "hearing impairment", "blind", "deaf", "wheelchair"});
    add("Ethnicity", {"ethnicity", "ethnic", "asian", "persian", "sri lankan"});
    add("Accent", {"accent"});
    add("Occupation",
        {"occupation", "developer", "manager", "ceo", "delivery person", "fire brigade",
         "doctor", "nurse", "health professional", "healthcare professional",
         "health care professional", "health worker", "healthcare worker",
         "health care manager", "security team"});
    add("Lifestyle", {"lifestyle", "smoking", "smoke", "smoker", "vegan", "vegetarian"});
    add("Physical Appearance", {"physical appearance", "appearance", "glasses", "burnt face",
                                "facial surgery", "tattoo", "beard", "height"});
    add("Health Condition", {"health condition", "covid", "stammer", "broken voice",
                             "chronic illness", "asthma", "diabetes"});
    add("Culture", {"culture", "cultural", "culturally", "traditional"});
    add("Parenthood", {"parenthood", "parent", "mom", "mother", "father", "dad", "pregnant"});
    add("Personality Trait",
        {"personality", "soft spoken", "soft-spoken", "slow speech", "introvert", "extrovert"});
    add("Environment", {"environment", "noise", "noisy", "background noise", "quiet", "crowded"});
    lex.add_alias("Profession", "Occupation");
    return lex;
  }();
  return lexicon;
}

std::vector<AttributeTag> infer_attributes(std::string_view phrase,
                                           const AttributeLexicon& lexicon) {
  std::vector<AttributeTag> tags;
  const std::string text(phrase);
  const std::string text_lower = to_lower(text);
  for (const auto& [dimension, entry] : lexicon.entries()) {
    std::optional<TermMatch> best;
    for (const std::string& term : entry.terms) {
      const auto m = find_term(text_lower, to_lower(term));
      if (!m) continue;
      if (!best || m->pos < best->pos || (m->pos == best->pos && m->len > best->len)) best = m;
    }
    if (best) {
      tags.push_back(AttributeTag{dimension, text.substr(best->pos, best->len),
                                  AttributeOrigin::LexiconInferred});
    }
  }
  return tags;
}

bool ConflictRegistry::contains(int a, int b) const { return find(a, b).has_value(); }

std::optional<ConflictPair> ConflictRegistry::find(int a, int b) const {
  const int low = std::min(a, b);
  const int high = std::max(a, b);
  for (const ConflictPair& pair : pairs_) {
    if (pair.low == low && pair.high == high) return pair;
  }
  return std::nullopt;
}

void ConflictRegistry::insert(int a, int b, std::string rationale) {
  theme_by_id(a);
  theme_by_id(b);
  if (a == b) throw std::invalid_argument("conflict pair cannot pair a theme with itself");
  ConflictPair pair{std::min(a, b), std::max(a, b), std::move(rationale)};
  for (ConflictPair& existing : pairs_) {
    if (existing.low == pair.low && existing.high == pair.high) {
      existing.rationale = std::move(pair.rationale);
      return;
    }
  }
  auto where = pairs_.begin();
  while (where != pairs_.end() &&
         (where->low < pair.low || (where->low == pair.low && where->high < pair.high))) {
    ++where;
  }
  pairs_.insert(where, std::move(pair));
}

const ConflictRegistry& ConflictRegistry::defaults() {
  static const ConflictRegistry registry = [] {
    ConflictRegistry reg;
    reg.insert(2, 3, "broad stakeholder engagement can surface conflicting viewpoints");
    reg.insert(8, 9, "transparency and explainability pull against data privacy and security");
    reg.insert(17, 20, "inclusive design can add complexity that impedes usability");
    return reg;
  }();
  return registry;
}

}  // namespace dilint
