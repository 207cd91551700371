#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dilint {

// Exit codes: 0 = no Error diagnostics, 1 = at least one Error diagnostic,
// 2 = usage, config or I/O failure.

struct LintOptions {
  std::vector<std::filesystem::path> files;
  std::optional<std::filesystem::path> config_path;
  std::string format = "text";  // "text" | "json"
};

int cmd_lint(const LintOptions& options, std::ostream& out, std::ostream& err);

// 23 lines in registry order: id, pillar, title.
int cmd_themes(std::ostream& out);

struct InitOptions {
  std::filesystem::path target_dir;
  bool force = false;
};

// Scaffolds dilint.config.json (full defaults) and example.distories.
int cmd_init(const InitOptions& options, std::ostream& out, std::ostream& err);

// Argument parsing plus dispatch. `DILINT_CONFIG` supplies --config when the
// flag is absent. Help requests exit 0; bad usage exits 2.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dilint
