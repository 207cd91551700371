#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dilint/model.hpp"
#include "dilint/taxonomy.hpp"

namespace dilint {

struct PillarCoverage {
  int covered = 0;
  int total = 0;

  friend bool operator==(const PillarCoverage&, const PillarCoverage&) = default;
};

struct CoverageReport {
  std::set<int> covered_themes;
  std::set<int> gaps;  // complement of covered_themes within 1..23
  std::map<Pillar, PillarCoverage> pillar_coverage;
  int story_count = 0;

  friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

// Union of explicit theme tags across stories; untagged stories contribute
// nothing (R4 already reports them).
CoverageReport coverage_report(const std::vector<UserStory>& stories);

struct ConflictFinding {
  ConflictPair pair;
  std::vector<SourceSpan> story_refs_a;  // stories tagged pair.low, corpus order
  std::vector<SourceSpan> story_refs_b;  // stories tagged pair.high, corpus order

  friend bool operator==(const ConflictFinding&, const ConflictFinding&) = default;
};

// One finding per registry pair with both themes present in the corpus,
// ordered by pair ascending. Findings are advisory, never diagnostics.
std::vector<ConflictFinding> conflict_findings(const std::vector<UserStory>& stories,
                                               const ConflictRegistry& registry);

struct AttributeDistribution {
  std::map<std::string, int> counts;  // dimension -> stories carrying it (>= 1)

  friend bool operator==(const AttributeDistribution&, const AttributeDistribution&) = default;
};

// Counts stories, not tags: a story tagged Religion and Gender increments
// both dimensions once each.
AttributeDistribution attribute_distribution(const std::vector<UserStory>& stories);

}  // namespace dilint
