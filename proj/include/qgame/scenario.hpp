#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qgame/arbiter.hpp"
#include "qgame/duel.hpp"
#include "qgame/grover.hpp"
#include "qgame/strategy_ga.hpp"

namespace qgame::cli {

enum class Mode { duel, surface, arbiter, optimize, verify, grover, pipeline };

std::string mode_name(Mode mode);
Mode parse_mode(const std::string& name);  // ValidationError on unknown

struct DuelScenario {
  duel::GameModel model;
  duel::StrategyAngles angles_a;
  duel::StrategyAngles angles_b;
  duel::PayoffTable table;
};

struct SurfaceScenario {
  duel::GameModel model;
  duel::SweepSpec sweep;
  duel::StrategyAngles fixed_a;
  duel::StrategyAngles fixed_b;
  duel::PayoffTable table;
};

struct ArbiterScenario {
  arbiter::StrategySet strategies;
  arbiter::PlayerData data;
  int rounds = 1;
};

struct OptimizeScenario {
  ga::PriorityVector target;
  ga::GaConfig config;  // seed is overwritten by the scenario seed
};

struct VerifyScenario {
  arbiter::StrategySet raw;
  arbiter::WinnerDistribution expected;
  double tolerance = 2e-3;
};

struct GroverScenario {
  grover::OracleSpec spec;
  std::optional<int> iterations;  // nullopt = auto
};

struct PipelineScenario {
  arbiter::StrategySet strategies;
  arbiter::PlayerData data;
  grover::TruthTable f;
  int rounds = 1;
  int max_retries = 32;
};

struct Scenario {
  Mode mode = Mode::duel;
  RngSeed seed = 0;
  std::optional<std::filesystem::path> out_dir;  // overridable by --out
  std::variant<DuelScenario, SurfaceScenario, ArbiterScenario,
               OptimizeScenario, VerifyScenario, GroverScenario,
               PipelineScenario>
      payload;
};

/// Parses and fully validates a scenario document. Strict: unknown fields,
/// duplicate fields, and out-of-range values are rejected. Relative
/// truth-table paths resolve against `base_dir`.
Scenario parse_scenario(const std::string& json_text,
                        const std::filesystem::path& base_dir = ".");

struct RunResult {
  std::vector<std::filesystem::path> files;
};

/// Executes a parsed scenario and writes its artifact files under `out_dir`
/// (scenario-level "out" is already resolved by the caller). Outputs are
/// byte-deterministic for a fixed scenario.
RunResult run_scenario(const Scenario& scenario,
                       const std::filesystem::path& out_dir);

/// CSV with header axis1_name,axis1_value,axis2_name,axis2_value,
/// payoff_A,payoff_B; values fixed at 9 decimals, LF newlines.
/// Throws DataError on an empty grid.
std::string surface_csv(const duel::PayoffSurface& surface);

/// CSV with header round,winner,id_bus,data_bus (rounds numbered from 1).
/// Throws DataError on an empty log.
std::string round_log_csv(const std::vector<arbiter::GameRoundResult>& rounds);

}  // namespace qgame::cli
