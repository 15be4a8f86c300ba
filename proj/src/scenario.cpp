#include "qgame/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <set>

#include <json.hpp>

#include "qgame/json_io.hpp"

namespace qgame::cli {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string format_fixed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9f", value);
  return buffer;
}

[[noreturn]] void fail(const std::string& message) {
  throw ValidationError(message);
}

// ---- strict parsing helpers ------------------------------------------------

json parse_with_duplicate_check(const std::string& text) {
  std::vector<std::set<std::string>> object_keys;
  auto callback = [&](int /*depth*/, json::parse_event_t event,
                      json& parsed) -> bool {
    switch (event) {
      case json::parse_event_t::object_start:
        object_keys.emplace_back();
        break;
      case json::parse_event_t::object_end:
        object_keys.pop_back();
        break;
      case json::parse_event_t::key: {
        const std::string key = parsed.get<std::string>();
        if (!object_keys.back().insert(key).second) {
          fail("duplicate field \"" + key + "\"");
        }
        break;
      }
      default:
        break;
    }
    return true;
  };
  try {
    return json::parse(text, callback);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line/column.
    std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    if (offset > text.size()) offset = text.size();
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    // Keep only the explanation part of the library message; the location
    // is recomputed above.
    std::string detail = e.what();
    if (const auto bracket = detail.find("] "); bracket != std::string::npos) {
      detail.erase(0, bracket + 2);
    }
    if (detail.rfind("parse error", 0) == 0) {
      if (const auto colon = detail.find(": "); colon != std::string::npos) {
        detail.erase(0, colon + 2);
      }
    }
    throw ParseError("parse error at line " + std::to_string(line) +
                     ", column " + std::to_string(column) + ": " + detail);
  }
}

class Fields {
 public:
  Fields(const json& object, const std::string& where)
      : object_(object), where_(where) {
    if (!object.is_object()) fail(where_ + " must be a JSON object");
  }

  void finish(std::initializer_list<const char*> allowed) const {
    for (const auto& [key, value] : object_.items()) {
      bool known = false;
      for (const char* name : allowed) {
        if (key == name) {
          known = true;
          break;
        }
      }
      if (!known) fail("unknown field \"" + prefix() + key + "\"");
    }
  }

  bool has(const char* name) const { return object_.contains(name); }

  const json& get(const char* name) const {
    if (!object_.contains(name)) {
      fail("missing required field \"" + prefix() + name + "\"");
    }
    return object_[name];
  }

  std::string get_string(const char* name) const {
    const json& j = get(name);
    if (!j.is_string()) fail(field(name) + " must be a string");
    return j.get<std::string>();
  }

  double get_number(const char* name) const {
    const json& j = get(name);
    if (!j.is_number()) fail(field(name) + " must be a number");
    return j.get<double>();
  }

  int get_int(const char* name) const {
    const json& j = get(name);
    if (!j.is_number_integer()) fail(field(name) + " must be an integer");
    const long long v = j.get<long long>();
    if (v < std::numeric_limits<int>::min() ||
        v > std::numeric_limits<int>::max()) {
      fail(field(name) + " is out of range");
    }
    return static_cast<int>(v);
  }

  double number_or(const char* name, double fallback) const {
    return has(name) ? get_number(name) : fallback;
  }

  int int_or(const char* name, int fallback) const {
    return has(name) ? get_int(name) : fallback;
  }

  std::string field(const char* name) const { return prefix() + name; }

 private:
  std::string prefix() const { return where_.empty() ? "" : where_ + "."; }

  const json& object_;
  std::string where_;
};

// ---- field validators -------------------------------------------------------

double checked_gamma(const Fields& fields) {
  const double gamma = fields.number_or("gamma", kPi / 2.0);
  if (!(gamma > 0.0 && gamma < kPi)) {
    fail(fields.field("gamma") + " out of (0, pi)");
  }
  return gamma;
}

duel::GameVariant checked_variant(const Fields& fields) {
  const std::string name = fields.get_string("model");
  if (name == "original") return duel::GameVariant::original;
  if (name == "simplified") return duel::GameVariant::simplified;
  fail(fields.field("model") + " must be \"original\" or \"simplified\"");
}

duel::StrategyAngles checked_angles(const json& j, const std::string& where) {
  Fields fields(j, where);
  duel::StrategyAngles angles;
  angles.theta = fields.number_or("theta", 0.0);
  angles.phi = fields.number_or("phi", 0.0);
  angles.psi = fields.number_or("psi", 0.0);
  fields.finish({"theta", "phi", "psi"});
  if (!(angles.theta >= 0.0 && angles.theta <= kPi)) {
    fail(where + ".theta out of [0, pi]");
  }
  if (!(angles.phi >= 0.0 && angles.phi < kTwoPi)) {
    fail(where + ".phi out of [0, 2pi)");
  }
  if (!(angles.psi >= 0.0 && angles.psi < kTwoPi)) {
    fail(where + ".psi out of [0, 2pi)");
  }
  return angles;
}

duel::PayoffTable checked_payoff_table(const Fields& fields) {
  if (!fields.has("payoff_table")) {
    return duel::PayoffTable::prisoners_dilemma();
  }
  const json& j = fields.get("payoff_table");
  if (j.is_string()) {
    if (j.get<std::string>() == "prisoners-dilemma") {
      return duel::PayoffTable::prisoners_dilemma();
    }
    fail(fields.field("payoff_table") +
         " names an unknown preset (expected \"prisoners-dilemma\")");
  }
  Fields entries(j, fields.field("payoff_table"));
  duel::PayoffTable table;
  const char* keys[4] = {"cc", "cd", "dc", "dd"};
  for (int i = 0; i < 4; ++i) {
    const json& cell = entries.get(keys[i]);
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
        !cell[1].is_number()) {
      fail(entries.field(keys[i]) + " must be a [payoff_A, payoff_B] pair");
    }
    table.player_a[i] = cell[0].get<double>();
    table.player_b[i] = cell[1].get<double>();
    if (!std::isfinite(table.player_a[i]) || !std::isfinite(table.player_b[i])) {
      fail(entries.field(keys[i]) + " must be finite");
    }
  }
  entries.finish({"cc", "cd", "dc", "dd"});
  return table;
}

arbiter::PlayerData checked_player_data(const Fields& fields) {
  const json& j = fields.get("data");
  if (!j.is_array() || j.size() != arbiter::kPlayers) {
    fail(fields.field("data") + " must list exactly 4 bitstrings");
  }
  arbiter::PlayerData data;
  for (int k = 0; k < arbiter::kPlayers; ++k) {
    if (!j[k].is_string()) fail(fields.field("data") + " entries must be strings");
    data.bits[k] = j[k].get<std::string>();
  }
  try {
    data.validate();
  } catch (const Error& e) {
    fail(fields.field("data") + " invalid: " + e.what());
  }
  return data;
}

arbiter::StrategySet checked_strategies(const Fields& fields,
                                        const char* name) {
  const json& j = fields.get(name);
  if (j.is_string()) {
    const std::string preset = j.get<std::string>();
    if (preset == "identity") {
      return {SingleQubitGate::identity(), SingleQubitGate::identity(),
              SingleQubitGate::identity(), SingleQubitGate::identity()};
    }
    if (preset == "hadamard") {
      return {SingleQubitGate::hadamard(), SingleQubitGate::hadamard(),
              SingleQubitGate::hadamard(), SingleQubitGate::hadamard()};
    }
    fail(fields.field(name) +
         " names an unknown preset (expected \"identity\" or \"hadamard\")");
  }
  Fields spec(j, fields.field(name));
  if (spec.has("angles") && spec.has("players")) {
    fail(fields.field(name) + " must give either angles or players, not both");
  }
  if (spec.has("angles")) {
    spec.finish({"angles"});
    const json& list = spec.get("angles");
    if (!list.is_array() || list.size() != arbiter::kPlayers) {
      fail(spec.field("angles") + " must list exactly 4 angle triples");
    }
    arbiter::StrategySet set;
    for (int k = 0; k < arbiter::kPlayers; ++k) {
      const duel::StrategyAngles angles = checked_angles(
          list[k], spec.field("angles") + "[" + std::to_string(k) + "]");
      set[k] = duel::strategy_gate(angles);
    }
    return set;
  }
  if (spec.has("players")) {
    spec.finish({"players"});
    arbiter::StrategySet raw;
    try {
      raw = io::strategy_set_from_json(j);
    } catch (const ValidationError& e) {
      fail(fields.field(name) + " invalid: " + e.what());
    }
    // Rounded matrices are accepted and projected to the nearest unitary.
    arbiter::StrategySet set;
    for (int k = 0; k < arbiter::kPlayers; ++k) {
      try {
        set[k] = ga::nearest_unitary(raw[k]);
      } catch (const Error& e) {
        fail(fields.field(name) + ".players[" + std::to_string(k) +
             "] invalid: " + e.what());
      }
    }
    return set;
  }
  fail(fields.field(name) + " must be a preset name or give angles/players");
}

grover::TruthTable checked_truth_table(const Fields& fields,
                                       const std::filesystem::path& base_dir) {
  const json& j = fields.get("truth_table");
  json doc;
  if (j.is_string()) {
    std::filesystem::path path = j.get<std::string>();
    if (path.is_relative()) path = base_dir / path;
    doc = parse_with_duplicate_check(io::read_text_file(path));
  } else {
    doc = j;
  }
  try {
    return io::truth_table_from_json(doc);
  } catch (const ValidationError& e) {
    fail(fields.field("truth_table") + " invalid: " + e.what());
  }
}

RngSeed checked_seed(const Fields& fields) {
  if (!fields.has("seed")) return 0;
  const json& j = fields.get("seed");
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(fields.field("seed") + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

int checked_rounds(const Fields& fields, int fallback) {
  const int rounds = fields.int_or("rounds", fallback);
  if (rounds < 1) fail(fields.field("rounds") + " must be at least 1");
  return rounds;
}

// ---- per-mode parsers --------------------------------------------------------

DuelScenario parse_duel(const Fields& fields) {
  fields.finish({"mode", "seed", "out", "model", "gamma", "strategies",
                 "payoff_table"});
  DuelScenario s;
  s.model.variant = checked_variant(fields);
  s.model.gamma = checked_gamma(fields);
  Fields strategies(fields.get("strategies"), fields.field("strategies"));
  s.angles_a = checked_angles(strategies.get("a"), strategies.field("a"));
  s.angles_b = checked_angles(strategies.get("b"), strategies.field("b"));
  strategies.finish({"a", "b"});
  s.table = checked_payoff_table(fields);
  return s;
}

SurfaceScenario parse_surface(const Fields& fields) {
  fields.finish({"mode", "seed", "out", "model", "gamma", "axis1", "axis2",
                 "grid", "fixed", "payoff_table"});
  SurfaceScenario s;
  s.model.variant = checked_variant(fields);
  s.model.gamma = checked_gamma(fields);
  try {
    s.sweep.axis1 = duel::parse_axis(fields.get_string("axis1"));
    s.sweep.axis2 = duel::parse_axis(fields.get_string("axis2"));
  } catch (const ParameterError& e) {
    fail(std::string("sweep axis invalid: ") + e.what());
  }
  if (duel::axis_label(s.sweep.axis1) == duel::axis_label(s.sweep.axis2)) {
    fail("axis1 and axis2 must differ");
  }
  s.sweep.grid = fields.int_or("grid", 64);
  if (s.sweep.grid < 2) fail("grid must be at least 2");
  if (fields.has("fixed")) {
    Fields fixed(fields.get("fixed"), "fixed");
    if (fixed.has("a")) s.fixed_a = checked_angles(fixed.get("a"), "fixed.a");
    if (fixed.has("b")) s.fixed_b = checked_angles(fixed.get("b"), "fixed.b");
    fixed.finish({"a", "b"});
  }
  s.table = checked_payoff_table(fields);
  return s;
}

ArbiterScenario parse_arbiter(const Fields& fields) {
  fields.finish({"mode", "seed", "out", "strategies", "data", "rounds"});
  ArbiterScenario s;
  s.strategies = checked_strategies(fields, "strategies");
  s.data = checked_player_data(fields);
  s.rounds = checked_rounds(fields, 1);
  return s;
}

OptimizeScenario parse_optimize(const Fields& fields) {
  fields.finish({"mode", "seed", "out", "eps", "ga"});
  OptimizeScenario s;
  const json& eps = fields.get("eps");
  if (!eps.is_array() || eps.size() != arbiter::kPlayers) {
    fail("eps must list exactly 4 numbers");
  }
  for (int k = 0; k < arbiter::kPlayers; ++k) {
    if (!eps[k].is_number()) fail("eps entries must be numbers");
    s.target.eps[k] = eps[k].get<double>();
    if (!(s.target.eps[k] >= 0.0 && s.target.eps[k] <= 1.0)) {
      fail("eps[" + std::to_string(k) + "] out of [0,1]");
    }
  }
  if (fields.has("ga")) {
    Fields ga_fields(fields.get("ga"), "ga");
    s.config.population = ga_fields.int_or("population", s.config.population);
    s.config.generations =
        ga_fields.int_or("generations", s.config.generations);
    s.config.crossover_rate =
        ga_fields.number_or("crossover_rate", s.config.crossover_rate);
    s.config.mutation_rate =
        ga_fields.number_or("mutation_rate", s.config.mutation_rate);
    s.config.tournament_size =
        ga_fields.int_or("tournament_size", s.config.tournament_size);
    s.config.elitism = ga_fields.int_or("elitism", s.config.elitism);
    s.config.restart_stagnation =
        ga_fields.int_or("restart_stagnation", s.config.restart_stagnation);
    ga_fields.finish({"population", "generations", "crossover_rate",
                      "mutation_rate", "tournament_size", "elitism",
                      "restart_stagnation"});
  }
  try {
    s.config.validate();
  } catch (const ParameterError& e) {
    fail(std::string("ga config invalid: ") + e.what());
  }
  return s;
}

VerifyScenario parse_verify(const Fields& fields) {
  fields.finish({"mode", "seed", "out", "players", "expected", "tolerance"});
  VerifyScenario s;
  json wrapper{{"players", fields.get("players")}};
  try {
    s.raw = io::strategy_set_from_json(wrapper);
    for (const SingleQubitGate& gate : s.raw) {
      (void)ga::nearest_unitary(gate);  // reject un-projectable input now
    }
  } catch (const Error& e) {
    fail(std::string("players invalid: ") + e.what());
  }
  const json& expected = fields.get("expected");
  if (!expected.is_array() || expected.size() != arbiter::kPlayers) {
    fail("expected must list exactly 4 probabilities");
  }
  for (int k = 0; k < arbiter::kPlayers; ++k) {
    if (!expected[k].is_number()) fail("expected entries must be numbers");
    s.expected.p[k] = expected[k].get<double>();
    if (!(s.expected.p[k] >= 0.0 && s.expected.p[k] <= 1.0)) {
      fail("expected[" + std::to_string(k) + "] out of [0,1]");
    }
  }
  s.tolerance = fields.number_or("tolerance", 2e-3);
  if (!(s.tolerance > 0.0)) fail("tolerance must be positive");
  return s;
}

GroverScenario parse_grover(const Fields& fields,
                            const std::filesystem::path& base_dir) {
  fields.finish({"mode", "seed", "out", "truth_table", "y", "iterations"});
  GroverScenario s;
  s.spec.f = checked_truth_table(fields, base_dir);
  s.spec.y = fields.get_string("y");
  try {
    s.spec.validate();
  } catch (const Error& e) {
    fail(std::string("oracle spec invalid: ") + e.what());
  }
  if (fields.has("iterations")) {
    const json& iters = fields.get("iterations");
    if (iters.is_string()) {
      if (iters.get<std::string>() != "auto") {
        fail("iterations must be a non-negative integer or \"auto\"");
      }
    } else if (iters.is_number_integer() && iters.get<int>() >= 0) {
      s.iterations = iters.get<int>();
    } else {
      fail("iterations must be a non-negative integer or \"auto\"");
    }
  }
  return s;
}

PipelineScenario parse_pipeline(const Fields& fields,
                                const std::filesystem::path& base_dir) {
  fields.finish({"mode", "seed", "out", "strategies", "data", "truth_table",
                 "rounds", "max_retries"});
  PipelineScenario s;
  s.strategies = checked_strategies(fields, "strategies");
  s.data = checked_player_data(fields);
  s.f = checked_truth_table(fields, base_dir);
  if (s.f.n_out != arbiter::kDataWidth) {
    fail("truth_table.n_out must equal the data-bus width (4)");
  }
  s.rounds = checked_rounds(fields, 1);
  s.max_retries = fields.int_or("max_retries", 32);
  if (s.max_retries < 1) fail("max_retries must be at least 1");
  return s;
}

}  // namespace

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::duel: return "duel";
    case Mode::surface: return "surface";
    case Mode::arbiter: return "arbiter";
    case Mode::optimize: return "optimize";
    case Mode::verify: return "verify";
    case Mode::grover: return "grover";
    case Mode::pipeline: return "pipeline";
  }
  return "?";
}

Mode parse_mode(const std::string& name) {
  for (Mode mode : {Mode::duel, Mode::surface, Mode::arbiter, Mode::optimize,
                    Mode::verify, Mode::grover, Mode::pipeline}) {
    if (name == mode_name(mode)) return mode;
  }
  throw ValidationError("unknown mode \"" + name + "\"");
}

Scenario parse_scenario(const std::string& json_text,
                        const std::filesystem::path& base_dir) {
  const json doc = parse_with_duplicate_check(json_text);
  Fields fields(doc, "");
  Scenario scenario;
  scenario.mode = parse_mode(fields.get_string("mode"));
  scenario.seed = checked_seed(fields);
  if (fields.has("out")) {
    scenario.out_dir = std::filesystem::path(fields.get_string("out"));
  }
  switch (scenario.mode) {
    case Mode::duel: scenario.payload = parse_duel(fields); break;
    case Mode::surface: scenario.payload = parse_surface(fields); break;
    case Mode::arbiter: scenario.payload = parse_arbiter(fields); break;
    case Mode::optimize: scenario.payload = parse_optimize(fields); break;
    case Mode::verify: scenario.payload = parse_verify(fields); break;
    case Mode::grover: scenario.payload = parse_grover(fields, base_dir); break;
    case Mode::pipeline:
      scenario.payload = parse_pipeline(fields, base_dir);
      break;
  }
  return scenario;
}

std::string surface_csv(const duel::PayoffSurface& surface) {
  if (surface.cells.empty()) throw DataError("surface grid is empty");
  const std::string name1 = duel::axis_label(surface.sweep.axis1);
  const std::string name2 = duel::axis_label(surface.sweep.axis2);
  std::string out =
      "axis1_name,axis1_value,axis2_name,axis2_value,payoff_A,payoff_B\n";
  for (const duel::SurfaceCell& cell : surface.cells) {
    out += name1;
    out += ',';
    out += format_fixed(cell.axis1_value);
    out += ',';
    out += name2;
    out += ',';
    out += format_fixed(cell.axis2_value);
    out += ',';
    out += format_fixed(cell.payoff_a);
    out += ',';
    out += format_fixed(cell.payoff_b);
    out += '\n';
  }
  return out;
}

std::string round_log_csv(const std::vector<arbiter::GameRoundResult>& rounds) {
  if (rounds.empty()) throw DataError("round log is empty");
  std::string out = "round,winner,id_bus,data_bus\n";
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += std::to_string(rounds[i].winner);
    out += ',';
    out += rounds[i].id_bus;
    out += ',';
    out += rounds[i].data_bus;
    out += '\n';
  }
  return out;
}

namespace {

json distribution_json(const duel::OutcomeDistribution& dist) {
  return json{{"cc", dist.cc}, {"cd", dist.cd}, {"dc", dist.dc}, {"dd", dist.dd}};
}

std::filesystem::path write_report(const std::filesystem::path& out_dir,
                                   const std::string& name, const json& doc) {
  const std::filesystem::path path = out_dir / name;
  io::write_text_file_atomic(path, doc.dump(2) + "\n");
  return path;
}

std::filesystem::path write_csv(const std::filesystem::path& out_dir,
                                const std::string& name,
                                const std::string& content) {
  const std::filesystem::path path = out_dir / name;
  io::write_text_file_atomic(path, content);
  return path;
}

RunResult run_duel(const DuelScenario& s,
                   const std::filesystem::path& out_dir) {
  const duel::OutcomeDistribution dist = duel::play_game(
      s.model, duel::strategy_gate(s.angles_a), duel::strategy_gate(s.angles_b));
  const duel::Payoffs payoffs = duel::expected_payoffs(dist, s.table);
  json report{
      {"mode", "duel"},
      {"model", s.model.variant == duel::GameVariant::original ? "original"
                                                               : "simplified"},
      {"gamma", s.model.gamma},
      {"distribution", distribution_json(dist)},
      {"payoffs", {{"a", payoffs.a}, {"b", payoffs.b}}},
  };
  return {{write_report(out_dir, "duel_report.json", report)}};
}

RunResult run_surface(const SurfaceScenario& s,
                      const std::filesystem::path& out_dir) {
  const duel::PayoffSurface surface =
      duel::payoff_surface(s.model, s.sweep, s.fixed_a, s.fixed_b, s.table);
  return {{write_csv(out_dir, "surface.csv", surface_csv(surface))}};
}

RunResult run_arbiter(const ArbiterScenario& s, RngSeed seed,
                      const std::filesystem::path& out_dir) {
  std::vector<arbiter::GameRoundResult> rounds;
  rounds.reserve(s.rounds);
  std::array<std::int64_t, 4> counts{};
  for (int r = 0; r < s.rounds; ++r) {
    rounds.push_back(
        arbiter::play_round(s.strategies, s.data, derive_seed(seed, r)));
    ++counts[rounds.back().winner - 1];
  }
  const arbiter::WinnerDistribution dist =
      arbiter::winner_distribution(s.strategies);
  json empirical = json::array();
  for (int k = 0; k < 4; ++k) {
    empirical.push_back(static_cast<double>(counts[k]) /
                        static_cast<double>(s.rounds));
  }
  json report{
      {"mode", "arbiter"},
      {"rounds", s.rounds},
      {"distribution", dist.p},
      {"empirical", empirical},
      {"winner_counts", counts},
  };
  return {{write_csv(out_dir, "arbiter_rounds.csv", round_log_csv(rounds)),
           write_report(out_dir, "arbiter_report.json", report)}};
}

RunResult run_optimize(const OptimizeScenario& s, RngSeed seed,
                       const std::filesystem::path& out_dir) {
  ga::GaConfig config = s.config;
  config.seed = seed;
  const ga::EvolveResult result = ga::evolve(s.target, config);
  double max_dev = 0.0;
  for (int k = 0; k < 4; ++k) {
    max_dev =
        std::max(max_dev, std::abs(result.achieved.p[k] - s.target.eps[k]));
  }
  json report{
      {"mode", "optimize"},
      {"target", s.target.eps},
      {"achieved", result.achieved.p},
      {"fitness", result.best_fitness},
      {"max_deviation", max_dev},
      {"strategies", io::strategy_set_to_json(result.best)},
      {"fitness_trace", result.fitness_trace},
  };
  return {{write_report(out_dir, "optimize_report.json", report)}};
}

RunResult run_verify(const VerifyScenario& s,
                     const std::filesystem::path& out_dir) {
  const ga::VerifyReport result =
      ga::verify_strategy_set(s.raw, s.expected, s.tolerance);
  json report{
      {"mode", "verify"},       {"pass", result.pass},
      {"expected", result.expected}, {"achieved", result.achieved},
      {"deviation", result.deviation}, {"max_deviation", result.max_deviation},
      {"tolerance", result.tolerance},
  };
  return {{write_report(out_dir, "verify_report.json", report)}};
}

RunResult run_grover(const GroverScenario& s, RngSeed seed,
                     const std::filesystem::path& out_dir) {
  const grover::GroverResult result =
      grover::grover_search(s.spec, s.iterations, seed);
  json report{
      {"mode", "grover"},
      {"y", s.spec.y},
      {"x", result.x},
      {"success_probability", result.success_probability},
      {"iterations", result.iterations},
      {"marked_count", result.marked_count},
  };
  return {{write_report(out_dir, "grover_report.json", report)}};
}

RunResult run_pipeline(const PipelineScenario& s, RngSeed seed,
                       const std::filesystem::path& out_dir) {
  json rounds = json::array();
  std::array<std::int64_t, 4> counts{};
  for (int r = 0; r < s.rounds; ++r) {
    const grover::PipelineRoundResult result = grover::pipeline_round(
        s.strategies, s.data, s.f, derive_seed(seed, r), s.max_retries);
    ++counts[result.winner - 1];
    rounds.push_back(json{{"round", r + 1},
                          {"winner", result.winner},
                          {"y", result.y},
                          {"x", result.x},
                          {"attempts", result.attempts}});
  }
  json report{
      {"mode", "pipeline"},
      {"rounds", rounds},
      {"winner_counts", counts},
  };
  return {{write_report(out_dir, "pipeline_report.json", report)}};
}

}  // namespace

RunResult run_scenario(const Scenario& scenario,
                       const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  switch (scenario.mode) {
    case Mode::duel:
      return run_duel(std::get<DuelScenario>(scenario.payload), out_dir);
    case Mode::surface:
      return run_surface(std::get<SurfaceScenario>(scenario.payload), out_dir);
    case Mode::arbiter:
      return run_arbiter(std::get<ArbiterScenario>(scenario.payload),
                         scenario.seed, out_dir);
    case Mode::optimize:
      return run_optimize(std::get<OptimizeScenario>(scenario.payload),
                          scenario.seed, out_dir);
    case Mode::verify:
      return run_verify(std::get<VerifyScenario>(scenario.payload), out_dir);
    case Mode::grover:
      return run_grover(std::get<GroverScenario>(scenario.payload),
                        scenario.seed, out_dir);
    case Mode::pipeline:
      return run_pipeline(std::get<PipelineScenario>(scenario.payload),
                          scenario.seed, out_dir);
  }
  throw Error("unhandled scenario mode");
}

}  // namespace qgame::cli
