#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "dilint/cli.hpp"
#include "dilint/config.hpp"

using namespace dilint;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"dilint"};
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  std::ostringstream out;
  std::ostringstream err;
  CliResult result;
  result.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::string corpus(const std::string& name) {
  return (fs::path(DILINT_CORPUS_DIR) / name).string();
}

fs::path temp_file(const std::string& name, const std::string& body) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << body;
  return path;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (const char c : text) lines += c == '\n' ? 1 : 0;
  return lines;
}

}  // namespace

TEST_CASE("cli: themes lists all 23 registry rows") {
  const CliResult result = run({"themes"});
  CHECK(result.code == 0);
  CHECK(result.err.empty());
  CHECK(count_lines(result.out) == 23);
  CHECK(result.out.rfind(" 1  Humans      AI Lifecycle: Representation, Diversity, and Inclusion\n",
                         0) == 0);
  CHECK(result.out.find("23  Governance  AI Ethical Directives: Equity, Diversity, and Inclusion "
                        "Principles\n") != std::string::npos);
  CHECK(run({"themes"}).out == result.out);
}

TEST_CASE("cli: lint on a clean corpus exits 0") {
  const CliResult result =
      run({"lint", corpus("frass_human.distories"), "--config", corpus("frass.config.json")});
  CHECK(result.code == 0);
  CHECK(result.err.empty());
  CHECK(result.out.find("Coverage: 8/23 themes across 12 stories") != std::string::npos);
  CHECK(result.out.find("warning: [R1]") != std::string::npos);
}

TEST_CASE("cli: lint merges several files in argument order") {
  const CliResult result =
      run({"lint", corpus("frass_human.distories"), corpus("vrima_human.distories"), "--config",
           corpus("golden.config.json")});
  CHECK(result.code == 0);
  CHECK(result.out.find("Coverage: 11/23 themes across 24 stories") != std::string::npos);
  // Diagnostics group by file, FRASS first.
  CHECK(result.out.find("frass_human.distories:6:") < result.out.find("vrima_human.distories:4:"));
}

TEST_CASE("cli: lint reports errors with exit code 1") {
  const fs::path broken = temp_file("dilint_cli_broken.distories",
                                    "this block is not a story\n");
  const CliResult result = run({"lint", broken.string()});
  CHECK(result.code == 1);
  CHECK(result.out.find("error: [P0]") != std::string::npos);
  fs::remove(broken);
}

TEST_CASE("cli: unreadable input is a usage failure") {
  const CliResult result = run({"lint", corpus("no_such_file.distories")});
  CHECK(result.code == 2);
  CHECK(result.err.find("cannot read") != std::string::npos);
}

TEST_CASE("cli: a bad config path is a usage failure") {
  const CliResult result =
      run({"lint", corpus("frass_human.distories"), "--config", corpus("no_such_config.json")});
  CHECK(result.code == 2);
  CHECK(result.err.find("no_such_config.json") != std::string::npos);
}

TEST_CASE("cli: json output is machine-readable and stable") {
  const std::vector<std::string> args = {"lint", corpus("frass_human.distories"), "--config",
                                         corpus("frass.config.json"), "--format", "json"};
  const CliResult result = run(args);
  CHECK(result.code == 0);
  const nlohmann::json report = nlohmann::json::parse(result.out);
  CHECK(report.at("stories").size() == 12);
  CHECK(report.at("diagnostics_summary").at("warning") == 4);
  CHECK(report.at("coverage").at("story_count") == 12);
  CHECK(run(args).out == result.out);
}

TEST_CASE("cli: unknown format is rejected") {
  const CliResult result =
      run({"lint", corpus("frass_human.distories"), "--format", "xml"});
  CHECK(result.code == 2);
  CHECK_FALSE(result.err.empty());
}

TEST_CASE("cli: missing or unknown subcommands are usage failures") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"lint"}).code == 2);  // no files given
}

TEST_CASE("cli: help exits 0 and names the subcommands") {
  const CliResult result = run({"--help"});
  CHECK(result.code == 0);
  CHECK(result.out.find("lint") != std::string::npos);
  CHECK(result.out.find("themes") != std::string::npos);
  CHECK(result.out.find("init") != std::string::npos);
}

TEST_CASE("cli: init scaffolds a working project") {
  const fs::path dir = fs::temp_directory_path() / "dilint_cli_init_test";
  fs::remove_all(dir);

  const CliResult created = run({"init", dir.string()});
  CHECK(created.code == 0);
  CHECK(created.out.find("created") != std::string::npos);
  const fs::path config_path = dir / "dilint.config.json";
  const fs::path example_path = dir / "example.distories";
  REQUIRE(fs::exists(config_path));
  REQUIRE(fs::exists(example_path));

  // The generated config is the spelled-out default configuration.
  CHECK(load_config(config_path) == Config::defaults());

  // The example corpus lints cleanly under the generated config.
  const CliResult linted =
      run({"lint", example_path.string(), "--config", config_path.string()});
  CHECK(linted.code == 0);
  CHECK(linted.out.find("across 2 stories") != std::string::npos);

  // Refuses to clobber without --force.
  const CliResult again = run({"init", dir.string()});
  CHECK(again.code == 2);
  CHECK(again.err.find("already exists") != std::string::npos);

  const CliResult forced = run({"init", dir.string(), "--force"});
  CHECK(forced.code == 0);

  fs::remove_all(dir);
}

TEST_CASE("cli: DILINT_CONFIG supplies the config when the flag is absent") {
  // This config escalates R1 to an error, so picking it up flips the exit code.
  const fs::path strict = temp_file("dilint_cli_strict.json",
                                    R"({"severities": {"R1": "error"}})");

  REQUIRE(setenv("DILINT_CONFIG", strict.string().c_str(), 1) == 0);
  const CliResult from_env = run({"lint", corpus("frass_human.distories")});
  CHECK(from_env.code == 1);
  CHECK(from_env.out.find("error: [R1]") != std::string::npos);

  // An explicit --config wins over the environment.
  const CliResult overridden = run({"lint", corpus("frass_human.distories"), "--config",
                                    corpus("frass.config.json")});
  CHECK(overridden.code == 0);
  REQUIRE(unsetenv("DILINT_CONFIG") == 0);

  // Without the variable the defaults apply again (no scope, so R3 is Info).
  const CliResult plain = run({"lint", corpus("frass_human.distories")});
  CHECK(plain.code == 0);

  fs::remove(strict);
}
