#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "dilint/model.hpp"
#include "dilint/taxonomy.hpp"
#include "dilint/validator.hpp"

namespace dilint {

// Malformed or inconsistent configuration; the message names the file and
// the offending key.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  AttributeLexicon lexicon;
  ProjectScope scope;
  ConflictRegistry conflicts;
  RuleConfig rules;

  static Config defaults();

  friend bool operator==(const Config&, const Config&) = default;
};

// Interprets a parsed JSON document. Recognized top-level keys:
//   lexicon    dimension -> {"protected": bool, "terms": [string, ...]}
//              merged over the built-in defaults; same-named entries win.
//   aliases    label -> dimension, added to the built-in alias table.
//   scope      {"roles": [...], "processes": [...], "artifacts": [...],
//               "protected_dimensions": [...]}
//   conflicts  list of [low, high] theme-id pairs; replaces the default
//              registry (default rationales are kept for default pairs).
//   severities rule -> severity, e.g. {"R1": "error"}.
// `context` names the source (file path) in error messages.
Config parse_config(const nlohmann::json& document, const std::string& context);

// Reads and parses a JSON config file. Throws ConfigError on I/O or schema
// problems.
Config load_config(const std::filesystem::path& path);

// Lexicon part only, per the merge rules above.
AttributeLexicon load_lexicon(const nlohmann::json& document, const std::string& context);

// Full default configuration as a JSON document: the built-in lexicon
// spelled out, empty scope lists, default conflicts and severities.
// Loading it back yields Config::defaults() exactly.
nlohmann::ordered_json default_config_document();

}  // namespace dilint
