#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgame/json_io.hpp"
#include "qgame/scenario.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

struct Options {
  std::string scenario_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
};

void report_error(const std::string& kind, const std::string& message) {
  const nlohmann::json doc{{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << doc.dump() << "\n";
}

int run(qgame::cli::Mode mode, const Options& options) {
  using namespace qgame;

  cli::Scenario scenario;
  try {
    const std::string text = io::read_text_file(options.scenario_path);
    scenario = cli::parse_scenario(
        text, std::filesystem::path(options.scenario_path).parent_path());
  } catch (const ParseError& e) {
    report_error("parse", e.what());
    return kExitValidation;
  } catch (const ValidationError& e) {
    report_error("validation", e.what());
    return kExitValidation;
  }

  if (scenario.mode != mode) {
    report_error("validation", "scenario mode \"" +
                                   cli::mode_name(scenario.mode) +
                                   "\" does not match the \"" +
                                   cli::mode_name(mode) + "\" subcommand");
    return kExitValidation;
  }
  if (options.seed) scenario.seed = *options.seed;

  std::filesystem::path out_dir =
      scenario.out_dir.value_or(std::filesystem::path("."));
  if (options.out_dir) out_dir = *options.out_dir;

  try {
    const cli::RunResult result = cli::run_scenario(scenario, out_dir);
    for (const auto& file : result.files) {
      std::cout << "wrote " << file.string() << "\n";
    }
    return 0;
  } catch (const NoSolutionError& e) {
    report_error("no-solution", e.what());
    return kExitRuntime;
  } catch (const SearchFailureError& e) {
    report_error("search-failure", e.what());
    return kExitRuntime;
  } catch (const Error& e) {
    report_error("runtime", e.what());
    return kExitRuntime;
  } catch (const std::exception& e) {
    report_error("runtime", e.what());
    return kExitRuntime;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-game resource arbiter: two-player duels, the "
               "four-player access-controller game, strategy optimization, "
               "and Grover-search pipelines."};
  app.require_subcommand(1);

  static const std::pair<qgame::cli::Mode, const char*> kModes[] = {
      {qgame::cli::Mode::duel, "Play one two-player game"},
      {qgame::cli::Mode::surface, "Sweep a payoff surface to CSV"},
      {qgame::cli::Mode::arbiter, "Run seeded arbitration rounds"},
      {qgame::cli::Mode::optimize, "Search strategies for a priority vector"},
      {qgame::cli::Mode::verify, "Check a strategy set against expected odds"},
      {qgame::cli::Mode::grover, "Run a Grover search for f(x)=y"},
      {qgame::cli::Mode::pipeline, "Arbitrate, then invert f on the winner's data"},
  };

  Options options;
  qgame::cli::Mode selected{};
  for (const auto& [mode, description] : kModes) {
    CLI::App* sub = app.add_subcommand(qgame::cli::mode_name(mode), description);
    sub->add_option("--scenario", options.scenario_path, "Scenario JSON file")
        ->required();
    sub->add_option("--seed", options.seed, "Override the scenario seed");
    sub->add_option("--out", options.out_dir, "Output directory");
    sub->callback([&selected, mode]() { selected = mode; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }
  return run(selected, options);
}
