#pragma once

#include <array>
#include <string>

#include "qgame/statevector.hpp"

namespace qgame::arbiter {

inline constexpr int kPlayers = 4;
inline constexpr int kDataWidth = 4;

/// One strategy gate per player, players ordered 1..4.
using StrategySet = std::array<SingleQubitGate, kPlayers>;

/// The 4-bit string each player wants to place on the data bus.
struct PlayerData {
  std::array<std::string, kPlayers> bits;

  /// Throws DataError unless every entry is exactly 4 characters of 0/1.
  void validate() const;
};

struct WinnerDistribution {
  std::array<double, kPlayers> p{};

  double sum() const { return p[0] + p[1] + p[2] + p[3]; }
};

/// Partition of the 16 strategy-register patterns into four groups of four,
/// pattern -> winning player. The default grouping maps
///   winner 1 <- {0000, 0111, 1010, 1101}
///   winner 2 <- {0001, 0100, 1011, 1110}
///   winner 3 <- {0010, 0101, 1000, 1111}
///   winner 4 <- {0011, 0110, 1001, 1100}
/// with the pattern string read player 1 leftmost.
class WinnerMap {
 public:
  /// Throws DataError unless each winner owns exactly four patterns.
  explicit WinnerMap(const std::array<int, 16>& winner_by_pattern);

  static const WinnerMap& standard();

  int winner(unsigned pattern) const { return table_[pattern & 0xF]; }
  const std::array<int, 16>& table() const { return table_; }

 private:
  std::array<int, 16> table_;
};

struct GameRoundResult {
  int winner = 0;            // 1..4
  std::string id_bus;        // one-hot, winner k <-> bit k-1 set
  std::string data_bus;      // the winner's PlayerData entry
};

/// Turns four |0> qubits into the equal superposition of the four weight-1
/// strings, amplitude 1/2 each. Throws PreconditionError if the target
/// qubits carry any |1> mass.
void prepare_w_state(StateVector& state, const std::array<int, 4>& qubits);

/// Basis map |s>|0000> -> |s>|one-hot(winner(s))> extended linearly (the id
/// register is XOR-updated, so the map is an involution on the full basis).
/// Throws PreconditionError if the id qubits carry any |1> mass.
void apply_winner_decoder(StateVector& state,
                          const std::array<int, 4>& strategy_qubits,
                          const std::array<int, 4>& id_qubits,
                          const WinnerMap& map = WinnerMap::standard());

/// Player k's CNOT grid: for every bit j where data[k][j] = 1, a CNOT from
/// id qubit k to data qubit j. Throws PreconditionError if the data qubits
/// carry any |1> mass.
void apply_data_grid(StateVector& state, const std::array<int, 4>& id_qubits,
                     const std::array<int, 4>& data_qubits,
                     const PlayerData& data);

/// Closed-form win probabilities from the strategies' first columns:
/// p_k sums |prod_j (s_j ? b_j : a_j)|^2 over the four patterns s owned by
/// winner k. Throws GateError on a non-unitary strategy.
WinnerDistribution winner_distribution(
    const StrategySet& strategies, const WinnerMap& map = WinnerMap::standard());

/// One full seeded round: strategy layer, winner decoder, data grids, then a
/// measurement of all twelve qubits. The strategy register sample is
/// discarded; the result carries the id and data buses.
GameRoundResult play_round(const StrategySet& strategies,
                           const PlayerData& data, RngSeed seed,
                           const WinnerMap& map = WinnerMap::standard());

}  // namespace qgame::arbiter
