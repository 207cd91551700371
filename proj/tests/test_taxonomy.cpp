#include <random>
#include <stdexcept>

#include "doctest.h"

#include "dilint/taxonomy.hpp"
#include "generators.hpp"

using namespace dilint;

namespace {

// Frozen copy of the 23 titles; guards the registry against edits.
const char* const kTitles[23] = {
    "AI Lifecycle: Representation, Diversity, and Inclusion",
    "AI Stakeholder: Engagement and Collaboration",
    "AI Context: Awareness and Conflict Management",
    "AI Foundations: Socio-technical Approach",
    "AI Education: Inclusive Infrastructure and Training",
    "AI Opportunities: Equitable Practices and Challenges",
    "AI Challenges: Inclusion Aspects",
    "AI Data: Transparency and Explainability",
    "AI Data Security: Privacy, Sovereignty, and Infrastructure",
    "AI Data Modelling: Selection and Development",
    "AI Data Management: Documentation and Examination",
    "AI Data Analysis: Bias and Inequity",
    "AI Data Traits: Demographic Considerations",
    "AI Analysis: Bias and Marginalization",
    "AI Performance: Evaluation, Monitoring, and Refinement",
    "AI Design: Trade-offs Considerations",
    "AI System Design: Inclusive Design and Development",
    "AI Awareness: Bias Recognition and Understanding",
    "AI Tools Evaluation: Bias and Representation",
    "AI System Usability: Accessibility Assessment",
    "AI Strategy: Policy and Governance",
    "AI Safety Protocols: Risk Management and Standards",
    "AI Ethical Directives: Equity, Diversity, and Inclusion Principles",
};

bool has_dimension(const std::vector<AttributeTag>& tags, const std::string& dimension) {
  for (const AttributeTag& tag : tags) {
    if (tag.dimension == dimension) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("theme registry holds the 23 titles verbatim") {
  const auto& registry = theme_registry();
  REQUIRE(registry.size() == 23);
  for (int i = 0; i < 23; ++i) {
    CHECK(registry[static_cast<std::size_t>(i)].id == i + 1);
    CHECK(registry[static_cast<std::size_t>(i)].title == kTitles[i]);
  }
}

TEST_CASE("theme lookups are total on 1..23 and fail outside") {
  CHECK(theme_by_id(1) ==
        Theme{1, Pillar::Humans, "AI Lifecycle: Representation, Diversity, and Inclusion"});
  CHECK(theme_by_id(23) ==
        Theme{23, Pillar::Governance,
              "AI Ethical Directives: Equity, Diversity, and Inclusion Principles"});
  for (int id = 1; id <= 23; ++id) CHECK(theme_by_id(id).id == id);
  CHECK_THROWS_AS(theme_by_id(0), std::out_of_range);
  CHECK_THROWS_AS(theme_by_id(24), std::out_of_range);
  CHECK_THROWS_AS(theme_by_id(-3), std::out_of_range);
}

TEST_CASE("pillar partition follows the registry") {
  for (int id = 1; id <= 7; ++id) CHECK(pillar_of(id) == Pillar::Humans);
  for (int id = 8; id <= 13; ++id) CHECK(pillar_of(id) == Pillar::Data);
  for (int id = 14; id <= 16; ++id) CHECK(pillar_of(id) == Pillar::Process);
  for (int id = 17; id <= 19; ++id) CHECK(pillar_of(id) == Pillar::System);
  for (int id = 20; id <= 23; ++id) CHECK(pillar_of(id) == Pillar::Governance);
  CHECK(pillar_of(13) == Pillar::Data);
  CHECK(pillar_of(16) == Pillar::Process);
  CHECK(pillar_of(20) == Pillar::Governance);
  CHECK_THROWS_AS(pillar_of(24), std::out_of_range);

  CHECK(pillar_theme_total(Pillar::Humans) == 7);
  CHECK(pillar_theme_total(Pillar::Data) == 6);
  CHECK(pillar_theme_total(Pillar::Process) == 3);
  CHECK(pillar_theme_total(Pillar::System) == 3);
  CHECK(pillar_theme_total(Pillar::Governance) == 4);

  for (int id = 1; id <= 23; ++id) {
    CHECK(pillar_of(theme_by_id(id).id) == theme_by_id(id).pillar);
  }
}

TEST_CASE("default lexicon covers the required dimensions, all protected") {
  const AttributeLexicon& lexicon = AttributeLexicon::defaults();
  const char* const required[] = {
      "Race",      "Color",     "Sex",        "Language",  "Religion",
      "National Origin", "Social Origin", "Property", "Birth", "Gender",
      "Gender Identity", "Age",   "Disability", "Ethnicity", "Accent",
      "Occupation", "Lifestyle", "Physical Appearance", "Health Condition",
      "Culture",   "Parenthood", "Personality Trait", "Environment"};
  for (const char* dimension : required) {
    CHECK(lexicon.has_dimension(dimension));
    CHECK(lexicon.is_protected(dimension));
  }
  for (const auto& [dimension, entry] : lexicon.entries()) {
    CHECK_FALSE(entry.terms.empty());
    for (const std::string& term : entry.terms) CHECK_FALSE(term.empty());
  }
  CHECK(lexicon.protected_dimensions().size() == lexicon.entries().size());
}

TEST_CASE("dimension lookup is case-insensitive and alias-aware") {
  const AttributeLexicon& lexicon = AttributeLexicon::defaults();
  CHECK(lexicon.canonical_dimension("Health condition") == "Health Condition");
  CHECK(lexicon.canonical_dimension("personality trait") == "Personality Trait");
  CHECK(lexicon.canonical_dimension("RACE") == "Race");
  CHECK(lexicon.canonical_dimension("Profession") == "Occupation");
  CHECK(lexicon.canonical_dimension("profession") == "Occupation");
  CHECK(lexicon.canonical_dimension("Sex") == "Sex");
  CHECK_FALSE(lexicon.canonical_dimension("Favourite Colorway").has_value());
  CHECK_FALSE(lexicon.is_protected("NoSuchDimension"));
}

TEST_CASE("infer_attributes finds lexicon terms on word boundaries") {
  const AttributeLexicon& lexicon = AttributeLexicon::defaults();

  const auto disability = infer_attributes("person with a visual impairment", lexicon);
  REQUIRE(disability.size() == 1);
  CHECK(disability[0] ==
        AttributeTag{"Disability", "visual impairment", AttributeOrigin::LexiconInferred});

  const auto occupation = infer_attributes("developer of FRASS", lexicon);
  REQUIRE(occupation.size() == 1);
  CHECK(occupation[0] == AttributeTag{"Occupation", "developer", AttributeOrigin::LexiconInferred});

  CHECK(infer_attributes("the quick brown fox", lexicon).empty());
  CHECK(infer_attributes("", lexicon).empty());
}

TEST_CASE("infer_attributes tolerates case and a plural s") {
  const AttributeLexicon& lexicon = AttributeLexicon::defaults();
  const auto upper = infer_attributes("A DEVELOPER at work", lexicon);
  REQUIRE(upper.size() == 1);
  CHECK(upper[0].value == "DEVELOPER");

  const auto plural = infer_attributes("an employee who smokes daily", lexicon);
  REQUIRE(plural.size() == 1);
  CHECK(plural[0].dimension == "Lifestyle");
  CHECK(plural[0].value == "smokes");
}

TEST_CASE("infer_attributes does not match inside larger words") {
  const AttributeLexicon& lexicon = AttributeLexicon::defaults();
  // "gender" occurs inside "transgender"; only the Gender Identity term may fire.
  const auto tags = infer_attributes("a transgender person", lexicon);
  CHECK(has_dimension(tags, "Gender Identity"));
  CHECK_FALSE(has_dimension(tags, "Gender"));
  // "man" inside "management" is not a word.
  CHECK(infer_attributes("management review", lexicon).empty());
  // "sex" inside "sextant" is not a word.
  CHECK_FALSE(has_dimension(infer_attributes("sextant reading", lexicon), "Sex"));
}

TEST_CASE("infer_attributes picks the earliest match, longest on ties") {
  AttributeLexicon lexicon;
  lexicon.upsert("Demo", LexiconEntry{true, {"alpha beta", "alpha", "beta"}});
  const auto tags = infer_attributes("alpha beta gamma", lexicon);
  REQUIRE(tags.size() == 1);
  CHECK(tags[0].value == "alpha beta");

  const auto later = infer_attributes("gamma beta", lexicon);
  REQUIRE(later.size() == 1);
  CHECK(later[0].value == "beta");
}

TEST_CASE("infer_attributes returns one tag per dimension ordered by name") {
  const AttributeLexicon& lexicon = AttributeLexicon::defaults();
  const auto tags = infer_attributes("a Muslim woman with a visual impairment", lexicon);
  REQUIRE(tags.size() == 3);
  CHECK(tags[0].dimension == "Disability");
  CHECK(tags[1].dimension == "Gender");
  CHECK(tags[2].dimension == "Religion");
  for (const AttributeTag& tag : tags) CHECK(tag.origin == AttributeOrigin::LexiconInferred);
}

TEST_CASE("adding lexicon terms never removes previously returned tags") {
  std::mt19937_64 rng(6711);
  const AttributeLexicon& base = AttributeLexicon::defaults();
  std::uniform_int_distribution<std::size_t> pick(0, testing::word_pool().size() - 1);
  for (int i = 0; i < 100; ++i) {
    const std::string phrase =
        testing::random_words(rng, 1, 6) + " visual impairment " + testing::random_words(rng, 0, 3);
    const auto before = infer_attributes(phrase, base);

    AttributeLexicon extended = base;
    LexiconEntry extra{true, {testing::word_pool()[pick(rng)]}};
    extended.upsert("Neurodivergence", extra);
    const auto after = infer_attributes(phrase, extended);

    for (const AttributeTag& tag : before) {
      bool still_there = false;
      for (const AttributeTag& now : after) still_there = still_there || now == tag;
      CHECK(still_there);
    }
  }
}

TEST_CASE("conflict registry defaults to the three known pairs") {
  const ConflictRegistry& registry = ConflictRegistry::defaults();
  REQUIRE(registry.pairs().size() == 3);
  CHECK(registry.pairs()[0].low == 2);
  CHECK(registry.pairs()[0].high == 3);
  CHECK(registry.pairs()[1].low == 8);
  CHECK(registry.pairs()[1].high == 9);
  CHECK(registry.pairs()[2].low == 17);
  CHECK(registry.pairs()[2].high == 20);
  for (const ConflictPair& pair : registry.pairs()) CHECK_FALSE(pair.rationale.empty());
}

TEST_CASE("conflict registry is symmetric and order-normalizing") {
  const ConflictRegistry& registry = ConflictRegistry::defaults();
  CHECK(registry.contains(8, 9));
  CHECK(registry.contains(9, 8));
  CHECK(registry.contains(3, 2));
  CHECK_FALSE(registry.contains(8, 10));
  CHECK_FALSE(registry.contains(1, 1));

  ConflictRegistry custom;
  custom.insert(21, 5, "demo");
  REQUIRE(custom.pairs().size() == 1);
  CHECK(custom.pairs()[0].low == 5);
  CHECK(custom.pairs()[0].high == 21);
  CHECK(custom.contains(5, 21));
  CHECK(custom.contains(21, 5));

  custom.insert(5, 21, "replaced");
  REQUIRE(custom.pairs().size() == 1);
  CHECK(custom.pairs()[0].rationale == "replaced");

  custom.insert(1, 2, "early");
  REQUIRE(custom.pairs().size() == 2);
  CHECK(custom.pairs()[0].low == 1);  // kept sorted

  CHECK_THROWS_AS(custom.insert(7, 7, "self"), std::invalid_argument);
  CHECK_THROWS_AS(custom.insert(0, 5, "range"), std::out_of_range);
  CHECK_THROWS_AS(custom.insert(5, 24, "range"), std::out_of_range);
}
