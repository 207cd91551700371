#include "dilint/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "dilint/analyzer.hpp"
#include "dilint/config.hpp"
#include "dilint/parser.hpp"
#include "dilint/report.hpp"
#include "dilint/validator.hpp"

namespace dilint {

namespace {

constexpr std::string_view kConfigFileName = "dilint.config.json";
constexpr std::string_view kExampleFileName = "example.distories";

// Two bundled-corpus stories, used to seed a fresh project.
constexpr std::string_view kExampleStories =
    "# Example D&I user stories; one story per block, \"#\" starts a comment.\n"
    "\n"
    "As a person with a visual impairment, I want FRASS to tell me the precise location "
    "where my face should be placed so that the Facial recognition system can scan my face "
    "properly for entry. [Disability, Theme 20]\n"
    "\n"
    "As a health professional with a stammer, I want VRIMA to recognize my instruction and "
    "follow them accurately, so that my stammer does not result in incorrect outcomes. "
    "[Health condition, Profession, Theme 20]\n";

}  // namespace

int cmd_lint(const LintOptions& options, std::ostream& out, std::ostream& err) {
  Config config = Config::defaults();
  if (options.config_path) {
    try {
      config = load_config(*options.config_path);
    } catch (const ConfigError& e) {
      err << "dilint: " << e.what() << "\n";
      return 2;
    }
  }

  std::vector<Diagnostic> diagnostics;
  std::vector<UserStory> stories;
  for (const std::filesystem::path& path : options.files) {
    std::ifstream file(path);
    if (!file) {
      err << "dilint: cannot read \"" << path.string() << "\"\n";
      return 2;
    }
    ParseOutcome outcome = parse_corpus(file, path.string(), config.lexicon);
    for (Diagnostic& d : lint(outcome, config.lexicon, config.scope, config.rules)) {
      diagnostics.push_back(std::move(d));
    }
    for (UserStory& story : outcome.stories) stories.push_back(std::move(story));
  }

  const CoverageReport coverage = coverage_report(stories);
  const std::vector<ConflictFinding> conflicts = conflict_findings(stories, config.conflicts);
  const AttributeDistribution attributes = attribute_distribution(stories);

  if (options.format == "json") {
    out << report_to_json(diagnostics, stories, coverage, conflicts, attributes).dump(2) << "\n";
  } else {
    for (const Diagnostic& d : diagnostics) out << render_diagnostic(d) << "\n";
    if (!diagnostics.empty()) out << "\n";
    out << render_text_report(coverage, conflicts, attributes, diagnostics);
  }

  for (const Diagnostic& d : diagnostics) {
    if (d.severity == Severity::Error) return 1;
  }
  return 0;
}

int cmd_themes(std::ostream& out) {
  for (const Theme& theme : theme_registry()) {
    out << std::setw(2) << theme.id << "  " << std::left << std::setw(10)
        << to_string(theme.pillar) << std::right << "  " << theme.title << "\n";
  }
  return 0;
}

int cmd_init(const InitOptions& options, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(options.target_dir, ec);
  if (ec) {
    err << "dilint: cannot create \"" << options.target_dir.string() << "\": " << ec.message()
        << "\n";
    return 2;
  }
  const fs::path config_path = options.target_dir / kConfigFileName;
  const fs::path example_path = options.target_dir / kExampleFileName;
  if (!options.force) {
    for (const fs::path& path : {config_path, example_path}) {
      if (fs::exists(path)) {
        err << "dilint: \"" << path.string() << "\" already exists (use --force to overwrite)\n";
        return 2;
      }
    }
  }
  {
    std::ofstream config_file(config_path);
    if (!config_file) {
      err << "dilint: cannot write \"" << config_path.string() << "\"\n";
      return 2;
    }
    config_file << default_config_document().dump(2) << "\n";
  }
  {
    std::ofstream example_file(example_path);
    if (!example_file) {
      err << "dilint: cannot write \"" << example_path.string() << "\"\n";
      return 2;
    }
    example_file << kExampleStories;
  }
  out << "created " << config_path.string() << "\n";
  out << "created " << example_path.string() << "\n";
  return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"dilint: parser, validator and corpus analyzer for D&I user stories"};
  app.require_subcommand(1);

  LintOptions lint_options;
  std::string config_arg;
  CLI::App* lint_cmd =
      app.add_subcommand("lint", "Parse and validate story files, then report corpus analytics");
  lint_cmd->add_option("files", lint_options.files, "Story files (.distories)")
      ->required()
      ->expected(-1);
  lint_cmd->add_option("--config", config_arg, "Project config file (JSON)")
      ->envname("DILINT_CONFIG");
  lint_cmd->add_option("--format", lint_options.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI::App* themes_cmd = app.add_subcommand("themes", "List the 23 built-in D&I themes");

  InitOptions init_options;
  CLI::App* init_cmd =
      app.add_subcommand("init", "Scaffold a starter config and example story file");
  init_cmd->add_option("dir", init_options.target_dir, "Target directory")->required();
  init_cmd->add_flag("--force", init_options.force, "Overwrite existing files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "dilint: " << e.what() << "\n";
    return 2;
  }

  if (lint_cmd->parsed()) {
    if (!config_arg.empty()) lint_options.config_path = config_arg;
    return cmd_lint(lint_options, out, err);
  }
  if (themes_cmd->parsed()) return cmd_themes(out);
  if (init_cmd->parsed()) return cmd_init(init_options, out, err);
  err << "dilint: no command given\n";
  return 2;
}

}  // namespace dilint
