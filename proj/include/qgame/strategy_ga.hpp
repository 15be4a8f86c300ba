#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qgame/arbiter.hpp"
#include "qgame/duel.hpp"

namespace qgame::ga {

inline constexpr int kBitsPerAngle = 12;
inline constexpr int kAnglesPerPlayer = 3;  // theta, phi, psi
inline constexpr int kChromosomeBits =
    kBitsPerAngle * kAnglesPerPlayer * arbiter::kPlayers;  // 144

/// Per-player target win probabilities. Not forcibly normalized; the GA
/// minimizes deviation from whatever vector is given.
struct PriorityVector {
  std::array<double, arbiter::kPlayers> eps{};

  /// Throws ParameterError unless every entry lies in [0,1].
  void validate() const;
};

/// Fixed-length genotype: 12 bits per angle, MSB first, three angles per
/// player in theta/phi/psi order, players 1..4 consecutively.
struct Chromosome {
  std::vector<std::uint8_t> bits;  // values 0/1, length kChromosomeBits
};

/// Maps a 12-bit field value v to theta = pi*v/4096 or phi/psi = 2pi*v/4096
/// and builds the four strategy gates. Total on every 144-bit string.
arbiter::StrategySet decode(const Chromosome& chromosome);

/// Quantizes angle triples back into a chromosome (round to nearest step,
/// clamped to the top code).
Chromosome encode(const std::array<duel::StrategyAngles, 4>& angles);

/// Sum over players of |p_k - eps_k| for the candidate's winner
/// distribution. Zero exactly at a Pareto optimum.
double fitness(const arbiter::StrategySet& candidate,
               const PriorityVector& target);

struct GaConfig {
  int population = 100;
  int generations = 1000;
  double crossover_rate = 0.9;
  double mutation_rate = 1.0 / kChromosomeBits;
  int tournament_size = 2;
  int elitism = 1;
  /// Reseed the population after this many generations without improvement
  /// of the best-so-far fitness (0 disables restarts).
  int restart_stagnation = 150;
  RngSeed seed = 0;

  /// Throws ParameterError on out-of-range fields.
  void validate() const;
};

struct EvolveResult {
  arbiter::StrategySet best;
  Chromosome best_chromosome;
  arbiter::WinnerDistribution achieved;
  double best_fitness = 0.0;
  /// Best-so-far fitness after each generation; non-increasing.
  std::vector<double> fitness_trace;
};

/// Seeded generational GA: tournament selection, single-point crossover,
/// per-bit mutation, elitism, stagnation restarts. Deterministic per
/// (target, config).
EvolveResult evolve(const PriorityVector& target, const GaConfig& config);

/// Projects a matrix to the nearest unitary (polar factor). Throws DataError
/// when the input is further than 0.01 from any unitary (entrywise max).
SingleQubitGate nearest_unitary(const SingleQubitGate& gate);

struct VerifyReport {
  bool pass = false;
  std::array<double, 4> expected{};
  std::array<double, 4> achieved{};
  std::array<double, 4> deviation{};
  double max_deviation = 0.0;
  double tolerance = 0.0;
};

/// Re-unitarizes the (possibly rounded) strategy matrices, evaluates the
/// winner distribution, and compares against `expected` componentwise.
VerifyReport verify_strategy_set(const arbiter::StrategySet& raw,
                                 const arbiter::WinnerDistribution& expected,
                                 double tol);

}  // namespace qgame::ga
