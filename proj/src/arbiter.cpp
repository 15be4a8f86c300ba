#include "qgame/arbiter.hpp"

#include <cmath>

namespace qgame::arbiter {

namespace {

constexpr double kClearedMassTol = 1e-10;

// Register layout used by play_round: strategies 0-3, id bus 4-7,
// data bus 8-11.
constexpr std::array<int, 4> kStrategyQubits{0, 1, 2, 3};
constexpr std::array<int, 4> kIdQubits{4, 5, 6, 7};
constexpr std::array<int, 4> kDataQubits{8, 9, 10, 11};

unsigned one_hot_pattern(int winner) { return 0x8u >> (winner - 1); }

unsigned extract_field(const StateVector& state, std::size_t index,
                       const std::array<int, 4>& qubits) {
  unsigned field = 0;
  for (int q : qubits) {
    field = (field << 1) | static_cast<unsigned>(state.bit(index, q));
  }
  return field;
}

std::size_t field_mask_bits(const StateVector& state, unsigned field,
                            const std::array<int, 4>& qubits) {
  std::size_t mask = 0;
  for (int j = 0; j < 4; ++j) {
    if (field & (0x8u >> j)) mask |= state.qubit_mask(qubits[j]);
  }
  return mask;
}

}  // namespace

void PlayerData::validate() const {
  for (int k = 0; k < kPlayers; ++k) {
    if (bits[k].size() != kDataWidth) {
      throw DataError("player " + std::to_string(k + 1) + " data must be " +
                      std::to_string(kDataWidth) + " bits");
    }
    for (char c : bits[k]) {
      if (c != '0' && c != '1') {
        throw DataError("player " + std::to_string(k + 1) +
                        " data contains a character other than 0/1");
      }
    }
  }
}

WinnerMap::WinnerMap(const std::array<int, 16>& winner_by_pattern)
    : table_(winner_by_pattern) {
  std::array<int, kPlayers> counts{};
  for (int w : table_) {
    if (w < 1 || w > kPlayers) {
      throw DataError("winner map entries must name players 1..4");
    }
    ++counts[w - 1];
  }
  for (int k = 0; k < kPlayers; ++k) {
    if (counts[k] != 4) {
      throw DataError("winner map must assign exactly 4 patterns per player");
    }
  }
}

const WinnerMap& WinnerMap::standard() {
  static const WinnerMap map(std::array<int, 16>{
      1, 2, 3, 4,   // 0000 0001 0010 0011
      2, 3, 4, 1,   // 0100 0101 0110 0111
      3, 4, 1, 2,   // 1000 1001 1010 1011
      4, 1, 2, 3,   // 1100 1101 1110 1111
  });
  return map;
}

void prepare_w_state(StateVector& state, const std::array<int, 4>& qubits) {
  if (state.mass_with_any_bit_set(qubits) > kClearedMassTol) {
    throw PreconditionError("w-state target qubits are not in |0000>");
  }
  std::array<std::size_t, 4> one_hot_masks{};
  std::size_t zero_mask = 0;
  for (int j = 0; j < 4; ++j) {
    one_hot_masks[j] = state.qubit_mask(qubits[j]);
    zero_mask |= one_hot_masks[j];
  }
  // Every populated basis state has the four target qubits at 0; spread its
  // amplitude equally over the four weight-1 patterns.
  auto amps = state.amplitudes();
  std::vector<Complex> next(amps.size(), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & zero_mask) != 0 || amps[i] == Complex{0.0, 0.0}) continue;
    const Complex share = amps[i] * 0.5;
    for (int j = 0; j < 4; ++j) next[i | one_hot_masks[j]] += share;
  }
  state.overwrite_amplitudes(std::move(next));
}

void apply_winner_decoder(StateVector& state,
                          const std::array<int, 4>& strategy_qubits,
                          const std::array<int, 4>& id_qubits,
                          const WinnerMap& map) {
  if (state.mass_with_any_bit_set(id_qubits) > kClearedMassTol) {
    throw PreconditionError("identification bus is not in |0000>");
  }
  std::array<std::size_t, 16> xor_by_pattern{};
  for (unsigned pattern = 0; pattern < 16; ++pattern) {
    const unsigned hot = one_hot_pattern(map.winner(pattern));
    xor_by_pattern[pattern] = field_mask_bits(state, hot, id_qubits);
  }
  state.apply_basis_permutation([&](std::size_t i) {
    return i ^ xor_by_pattern[extract_field(state, i, strategy_qubits)];
  });
}

void apply_data_grid(StateVector& state, const std::array<int, 4>& id_qubits,
                     const std::array<int, 4>& data_qubits,
                     const PlayerData& data) {
  data.validate();
  if (state.mass_with_any_bit_set(data_qubits) > kClearedMassTol) {
    throw PreconditionError("data bus is not in |0000>");
  }
  for (int k = 0; k < kPlayers; ++k) {
    for (int j = 0; j < kDataWidth; ++j) {
      if (data.bits[k][j] == '1') {
        state.apply_cnot(id_qubits[k], data_qubits[j]);
      }
    }
  }
}

WinnerDistribution winner_distribution(const StrategySet& strategies,
                                       const WinnerMap& map) {
  std::array<double, kPlayers> a2{};
  std::array<double, kPlayers> b2{};
  for (int k = 0; k < kPlayers; ++k) {
    if (!strategies[k].is_unitary()) {
      throw GateError("strategy gate for player " + std::to_string(k + 1) +
                      " is not unitary within 1e-10");
    }
    a2[k] = std::norm(strategies[k].m[0][0]);
    b2[k] = std::norm(strategies[k].m[1][0]);
  }
  WinnerDistribution dist;
  for (unsigned pattern = 0; pattern < 16; ++pattern) {
    double term = 1.0;
    for (int k = 0; k < kPlayers; ++k) {
      term *= (pattern & (0x8u >> k)) ? b2[k] : a2[k];
    }
    dist.p[map.winner(pattern) - 1] += term;
  }
  return dist;
}

GameRoundResult play_round(const StrategySet& strategies,
                           const PlayerData& data, RngSeed seed,
                           const WinnerMap& map) {
  data.validate();
  StateVector state(12);
  for (int k = 0; k < kPlayers; ++k) {
    state.apply_single(strategies[k], kStrategyQubits[k]);
  }
  apply_winner_decoder(state, kStrategyQubits, kIdQubits, map);
  apply_data_grid(state, kIdQubits, kDataQubits, data);

  std::array<int, 12> all{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  const std::string outcome = state.sample(all, seed);
  const std::string id_bus = outcome.substr(4, 4);
  const std::string data_bus = outcome.substr(8, 4);
  int winner = 0;
  for (int k = 0; k < kPlayers; ++k) {
    if (id_bus[k] == '1') {
      winner = k + 1;
      break;
    }
  }
  return {winner, id_bus, data_bus};
}

}  // namespace qgame::arbiter
