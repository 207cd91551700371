#include "dilint/model.hpp"

#include <cctype>

namespace dilint {

std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(c));
  }
  return out;
}

std::string_view to_string(Pillar pillar) {
  switch (pillar) {
    case Pillar::Humans: return "Humans";
    case Pillar::Data: return "Data";
    case Pillar::Process: return "Process";
    case Pillar::System: return "System";
    case Pillar::Governance: return "Governance";
  }
  return "Humans";
}

std::string_view to_string(SubjectKind kind) {
  switch (kind) {
    case SubjectKind::Role: return "Role";
    case SubjectKind::Process: return "Process";
    case SubjectKind::Artifact: return "Artifact";
    case SubjectKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(AttributeOrigin origin) {
  switch (origin) {
    case AttributeOrigin::ExplicitAnnotation: return "ExplicitAnnotation";
    case AttributeOrigin::LexiconInferred: return "LexiconInferred";
  }
  return "ExplicitAnnotation";
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::R1_TemplateCompleteness: return "R1";
    case Rule::R2_DIQualification: return "R2";
    case Rule::R3_Actionability: return "R3";
    case Rule::R4_ThemeTag: return "R4";
    case Rule::P0_ParseError: return "P0";
  }
  return "P0";
}

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "error";
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::optional<Pillar> pillar_from_string(std::string_view name) {
  for (Pillar p : {Pillar::Humans, Pillar::Data, Pillar::Process, Pillar::System,
                   Pillar::Governance}) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

std::optional<SubjectKind> subject_kind_from_string(std::string_view name) {
  for (SubjectKind k : {SubjectKind::Role, SubjectKind::Process, SubjectKind::Artifact,
                        SubjectKind::Unknown}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

std::optional<AttributeOrigin> origin_from_string(std::string_view name) {
  for (AttributeOrigin o :
       {AttributeOrigin::ExplicitAnnotation, AttributeOrigin::LexiconInferred}) {
    if (name == to_string(o)) return o;
  }
  return std::nullopt;
}

std::optional<Rule> rule_from_string(std::string_view name) {
  for (Rule r : {Rule::P0_ParseError, Rule::R1_TemplateCompleteness,
                 Rule::R2_DIQualification, Rule::R3_Actionability, Rule::R4_ThemeTag}) {
    if (name == to_string(r)) return r;
  }
  return std::nullopt;
}

std::optional<Severity> severity_from_string(std::string_view name) {
  const std::string lowered = to_lower(name);
  for (Severity s : {Severity::Error, Severity::Warning, Severity::Info}) {
    if (lowered == to_string(s)) return s;
  }
  return std::nullopt;
}

}  // namespace dilint
