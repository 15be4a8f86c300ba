#include "qgame/json_io.hpp"

#include <fstream>
#include <sstream>

namespace qgame::io {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError(where + " must be a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json strategy_set_to_json(const arbiter::StrategySet& set) {
  json players = json::array();
  for (const SingleQubitGate& gate : set) {
    json rows = json::array();
    for (int i = 0; i < 2; ++i) {
      rows.push_back(json::array(
          {complex_to_json(gate.m[i][0]), complex_to_json(gate.m[i][1])}));
    }
    players.push_back(json{{"matrix", rows}});
  }
  return json{{"players", players}};
}

arbiter::StrategySet strategy_set_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("players")) {
    throw ValidationError("strategy set document needs a \"players\" array");
  }
  const json& players = doc["players"];
  if (!players.is_array() || players.size() != arbiter::kPlayers) {
    throw ValidationError("\"players\" must list exactly 4 entries");
  }
  arbiter::StrategySet set;
  for (int k = 0; k < arbiter::kPlayers; ++k) {
    const std::string where = "players[" + std::to_string(k) + "]";
    const json& entry = players[k];
    if (!entry.is_object() || !entry.contains("matrix")) {
      throw ValidationError(where + " needs a \"matrix\" field");
    }
    const json& rows = entry["matrix"];
    if (!rows.is_array() || rows.size() != 2 || !rows[0].is_array() ||
        !rows[1].is_array() || rows[0].size() != 2 || rows[1].size() != 2) {
      throw ValidationError(where + ".matrix must be 2x2");
    }
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        set[k].m[i][j] = complex_from_json(
            rows[i][j], where + ".matrix[" + std::to_string(i) + "][" +
                            std::to_string(j) + "]");
      }
    }
  }
  return set;
}

json truth_table_to_json(const grover::TruthTable& table) {
  return json{{"n_in", table.n_in},
              {"n_out", table.n_out},
              {"table", table.table}};
}

grover::TruthTable truth_table_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n_in") || !doc.contains("n_out") ||
      !doc.contains("table")) {
    throw ValidationError(
        "truth table document needs n_in, n_out, and table fields");
  }
  if (!doc["n_in"].is_number_integer() || !doc["n_out"].is_number_integer() ||
      !doc["table"].is_array()) {
    throw ValidationError("truth table fields have the wrong types");
  }
  grover::TruthTable table;
  table.n_in = doc["n_in"].get<int>();
  table.n_out = doc["n_out"].get<int>();
  for (const json& row : doc["table"]) {
    if (!row.is_string()) {
      throw ValidationError("truth table entries must be strings");
    }
    table.table.push_back(row.get<std::string>());
  }
  try {
    table.validate();
  } catch (const Error& e) {
    throw ValidationError(std::string("truth table invalid: ") + e.what());
  }
  return table;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file_atomic(const std::filesystem::path& path,
                            const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error("cannot open file for writing: " + tmp.string());
    }
    out << content;
    out.flush();
    if (!out) {
      throw Error("write failed: " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace qgame::io
