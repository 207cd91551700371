#include "dilint/analyzer.hpp"

namespace dilint {

CoverageReport coverage_report(const std::vector<UserStory>& stories) {
  CoverageReport report;
  report.story_count = static_cast<int>(stories.size());
  for (const UserStory& story : stories) {
    for (const int id : story.themes) report.covered_themes.insert(id);
  }
  for (const Theme& theme : theme_registry()) {
    const bool covered = report.covered_themes.count(theme.id) > 0;
    if (!covered) report.gaps.insert(theme.id);
    PillarCoverage& pillar = report.pillar_coverage[theme.pillar];
    ++pillar.total;
    if (covered) ++pillar.covered;
  }
  return report;
}

std::vector<ConflictFinding> conflict_findings(const std::vector<UserStory>& stories,
                                               const ConflictRegistry& registry) {
  std::vector<ConflictFinding> findings;
  for (const ConflictPair& pair : registry.pairs()) {
    ConflictFinding finding{pair, {}, {}};
    for (const UserStory& story : stories) {
      bool has_low = false;
      bool has_high = false;
      for (const int id : story.themes) {
        has_low = has_low || id == pair.low;
        has_high = has_high || id == pair.high;
      }
      if (has_low) finding.story_refs_a.push_back(story.span);
      if (has_high) finding.story_refs_b.push_back(story.span);
    }
    if (!finding.story_refs_a.empty() && !finding.story_refs_b.empty()) {
      findings.push_back(std::move(finding));
    }
  }
  return findings;
}

AttributeDistribution attribute_distribution(const std::vector<UserStory>& stories) {
  AttributeDistribution distribution;
  for (const UserStory& story : stories) {
    std::set<std::string> dimensions;
    for (const AttributeTag& tag : story.attributes) dimensions.insert(tag.dimension);
    for (const std::string& dimension : dimensions) ++distribution.counts[dimension];
  }
  return distribution;
}

}  // namespace dilint
