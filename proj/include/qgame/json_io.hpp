#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qgame/arbiter.hpp"
#include "qgame/grover.hpp"

namespace qgame::io {

/// Strategy-set document: {"players":[{"matrix":[[[re,im],[re,im]],
/// [[re,im],[re,im]]]}, ...]} with four players.
nlohmann::json strategy_set_to_json(const arbiter::StrategySet& set);
arbiter::StrategySet strategy_set_from_json(const nlohmann::json& doc);

/// Truth-table document: {"n_in":..,"n_out":..,"table":[bitstrings by x]}.
nlohmann::json truth_table_to_json(const grover::TruthTable& table);
grover::TruthTable truth_table_from_json(const nlohmann::json& doc);

std::string read_text_file(const std::filesystem::path& path);

/// Writes via a temp file in the same directory, then renames into place.
void write_text_file_atomic(const std::filesystem::path& path,
                            const std::string& content);

}  // namespace qgame::io
