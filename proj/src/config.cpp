#include "dilint/config.hpp"

#include <fstream>

namespace dilint {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& context, const std::string& what) {
  throw ConfigError(context + ": " + what);
}

std::vector<std::string> string_list(const json& value, const std::string& context,
                                     const std::string& key) {
  if (!value.is_array()) fail(context, "\"" + key + "\" must be an array of strings");
  std::vector<std::string> out;
  for (const json& item : value) {
    if (!item.is_string()) fail(context, "\"" + key + "\" must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

ProjectScope parse_scope(const json& value, const std::string& context) {
  if (!value.is_object()) fail(context, "\"scope\" must be an object");
  ProjectScope scope;
  for (const auto& [key, entry] : value.items()) {
    if (key == "roles") {
      scope.roles = string_list(entry, context, key);
    } else if (key == "processes") {
      scope.processes = string_list(entry, context, key);
    } else if (key == "artifacts") {
      scope.artifacts = string_list(entry, context, key);
    } else if (key == "protected_dimensions") {
      scope.protected_dimensions = string_list(entry, context, key);
    } else {
      fail(context, "unknown scope key \"" + key + "\"");
    }
  }
  return scope;
}

ConflictRegistry parse_conflicts(const json& value, const std::string& context) {
  if (!value.is_array()) fail(context, "\"conflicts\" must be an array of [low, high] pairs");
  ConflictRegistry registry;
  for (const json& item : value) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      fail(context, "each conflict must be a two-element integer array");
    }
    const int a = item[0].get<int>();
    const int b = item[1].get<int>();
    std::string rationale = "declared in project configuration";
    if (const auto known = ConflictRegistry::defaults().find(a, b)) {
      rationale = known->rationale;
    }
    try {
      registry.insert(a, b, std::move(rationale));
    } catch (const std::exception& e) {
      fail(context, std::string("invalid conflict pair: ") + e.what());
    }
  }
  return registry;
}

RuleConfig parse_severities(const json& value, const std::string& context) {
  if (!value.is_object()) fail(context, "\"severities\" must be an object");
  RuleConfig rules = RuleConfig::defaults();
  for (const auto& [key, entry] : value.items()) {
    const auto rule = rule_from_string(key);
    if (!rule) fail(context, "unknown rule \"" + key + "\" in severities");
    if (!entry.is_string()) fail(context, "severity for " + key + " must be a string");
    const auto severity = severity_from_string(entry.get<std::string>());
    if (!severity) {
      fail(context, "unknown severity \"" + entry.get<std::string>() + "\" for " + key);
    }
    rules.severities[*rule] = *severity;
  }
  return rules;
}

}  // namespace

Config Config::defaults() {
  return Config{AttributeLexicon::defaults(), ProjectScope{}, ConflictRegistry::defaults(),
                RuleConfig::defaults()};
}

AttributeLexicon load_lexicon(const nlohmann::json& document, const std::string& context) {
  if (!document.is_object()) fail(context, "config root must be a JSON object");
  AttributeLexicon lexicon = AttributeLexicon::defaults();
  if (!document.contains("lexicon")) return lexicon;
  const json& section = document.at("lexicon");
  if (!section.is_object()) fail(context, "\"lexicon\" must be an object");
  for (const auto& [dimension, entry] : section.items()) {
    if (!entry.is_object()) {
      fail(context, "lexicon entry \"" + dimension + "\" must be an object");
    }
    LexiconEntry parsed;
    parsed.is_protected = true;
    for (const auto& [key, field] : entry.items()) {
      if (key == "protected") {
        if (!field.is_boolean()) {
          fail(context, "\"protected\" for \"" + dimension + "\" must be a boolean");
        }
        parsed.is_protected = field.get<bool>();
      } else if (key == "terms") {
        parsed.terms = string_list(field, context, "terms");
      } else {
        fail(context, "unknown lexicon key \"" + key + "\" for \"" + dimension + "\"");
      }
    }
    if (parsed.terms.empty()) {
      fail(context, "lexicon entry \"" + dimension + "\" declares no terms");
    }
    for (const std::string& term : parsed.terms) {
      if (normalize(term).empty()) {
        fail(context, "lexicon entry \"" + dimension + "\" contains an empty term");
      }
    }
    lexicon.upsert(dimension, std::move(parsed));
  }
  return lexicon;
}

Config parse_config(const nlohmann::json& document, const std::string& context) {
  if (!document.is_object()) fail(context, "config root must be a JSON object");
  for (const auto& [key, value] : document.items()) {
    if (key != "lexicon" && key != "aliases" && key != "scope" && key != "conflicts" &&
        key != "severities") {
      fail(context, "unknown config key \"" + key + "\"");
    }
  }
  Config config = Config::defaults();
  config.lexicon = load_lexicon(document, context);
  if (document.contains("aliases")) {
    const json& aliases = document.at("aliases");
    if (!aliases.is_object()) fail(context, "\"aliases\" must be an object");
    for (const auto& [alias, target] : aliases.items()) {
      if (!target.is_string()) fail(context, "alias \"" + alias + "\" must map to a string");
      const auto canonical = config.lexicon.canonical_dimension(target.get<std::string>());
      if (!canonical) {
        fail(context, "alias \"" + alias + "\" targets unknown dimension \"" +
                          target.get<std::string>() + "\"");
      }
      config.lexicon.add_alias(alias, *canonical);
    }
  }
  if (document.contains("scope")) {
    config.scope = parse_scope(document.at("scope"), context);
  }
  if (document.contains("conflicts")) {
    config.conflicts = parse_conflicts(document.at("conflicts"), context);
  }
  if (document.contains("severities")) {
    config.rules = parse_severities(document.at("severities"), context);
  }
  return config;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot read config file \"" + path.string() + "\"");
  json document;
  try {
    document = json::parse(file);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return parse_config(document, path.string());
}

nlohmann::ordered_json default_config_document() {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json lexicon = nlohmann::ordered_json::object();
  for (const auto& [dimension, entry] : AttributeLexicon::defaults().entries()) {
    lexicon[dimension] = {{"protected", entry.is_protected}, {"terms", entry.terms}};
  }
  doc["lexicon"] = std::move(lexicon);
  doc["scope"] = {{"roles", nlohmann::ordered_json::array()},
                  {"processes", nlohmann::ordered_json::array()},
                  {"artifacts", nlohmann::ordered_json::array()},
                  {"protected_dimensions", nlohmann::ordered_json::array()}};
  nlohmann::ordered_json conflicts = nlohmann::ordered_json::array();
  for (const ConflictPair& pair : ConflictRegistry::defaults().pairs()) {
    conflicts.push_back({pair.low, pair.high});
  }
  doc["conflicts"] = std::move(conflicts);
  doc["severities"] = {{"P0", "error"}, {"R1", "warning"}, {"R2", "error"},
                       {"R3", "error"}, {"R4", "error"}};
  return doc;
}

}  // namespace dilint
