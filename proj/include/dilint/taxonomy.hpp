#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dilint/model.hpp"

namespace dilint {

// Fixed registry of the 23 D&I themes grouped into five pillars.
// Theme ids are 1-based and stable; titles are part of the public contract.
const std::array<Theme, 23>& theme_registry();

// Throws std::out_of_range when id is outside [1, 23].
const Theme& theme_by_id(int id);

Pillar pillar_of(int theme_id);

// Number of themes belonging to a pillar (7/6/3/3/4).
int pillar_theme_total(Pillar pillar);

struct LexiconEntry {
  bool is_protected = false;
  std::vector<std::string> terms;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

// Dimension -> surface-term lexicon used to infer diversity attributes
// from free text. Dimension lookups are case-insensitive and alias-aware;
// stored names keep their canonical capitalisation.
class AttributeLexicon {
 public:
  AttributeLexicon() = default;

  // Built-in lexicon covering the standard diversity dimensions.
  static const AttributeLexicon& defaults();

  const std::map<std::string, LexiconEntry>& entries() const { return entries_; }

  bool has_dimension(std::string_view name) const;

  // Canonical dimension name for `name` (resolving case and aliases),
  // or nullopt if the dimension is unknown.
  std::optional<std::string> canonical_dimension(std::string_view name) const;

  bool is_protected(std::string_view dimension) const;

  // Canonical names of all dimensions flagged as protected, sorted.
  std::vector<std::string> protected_dimensions() const;

  // Inserts or replaces a dimension. `dimension` becomes the canonical name.
  void upsert(std::string dimension, LexiconEntry entry);

  // Registers `alias` as an alternate spelling of `dimension`.
  void add_alias(std::string alias, std::string_view dimension);

  friend bool operator==(const AttributeLexicon&, const AttributeLexicon&) = default;

 private:
  std::map<std::string, LexiconEntry> entries_;
  std::map<std::string, std::string> aliases_;  // lowercase alias -> canonical
};

// Scans `phrase` for lexicon terms and returns at most one tag per
// dimension. Matching is case-insensitive on whole words (a trailing
// plural "s" on the text is tolerated); for each dimension the earliest
// match wins, with longer matches preferred at the same position. The
// tag value records the exact matched substring as it appeared in the
// phrase. Results are ordered by dimension name.
std::vector<AttributeTag> infer_attributes(std::string_view phrase,
                                           const AttributeLexicon& lexicon);

struct ConflictPair {
  int low = 0;   // smaller theme id
  int high = 0;  // larger theme id
  std::string rationale;

  friend bool operator==(const ConflictPair&, const ConflictPair&) = default;
};

// Unordered pairs of theme ids whose goals are known to pull against
// each other. Pairs are stored with low < high.
class ConflictRegistry {
 public:
  ConflictRegistry() = default;

  static const ConflictRegistry& defaults();

  bool contains(int a, int b) const;

  std::optional<ConflictPair> find(int a, int b) const;

  // Inserts (a, b) regardless of argument order; replaces any existing
  // rationale for the pair. Throws std::out_of_range for invalid ids
  // and std::invalid_argument when a == b.
  void insert(int a, int b, std::string rationale);

  // All pairs sorted by (low, high).
  const std::vector<ConflictPair>& pairs() const { return pairs_; }

  bool empty() const { return pairs_.empty(); }

  friend bool operator==(const ConflictRegistry&, const ConflictRegistry&) = default;

 private:
  std::vector<ConflictPair> pairs_;
};

}  // namespace dilint
