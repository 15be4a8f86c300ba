#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qgame/statevector.hpp"

namespace qgame::duel {

/// Parameter triple of a strategy gate: theta in [0,pi], phi and psi
/// in [0,2pi).
struct StrategyAngles {
  double theta = 0.0;
  double phi = 0.0;
  double psi = 0.0;
};

/// Builds the strategy unitary
///   [ e^{i phi} cos(t/2)   -e^{i psi} sin(t/2) ]
///   [ e^{-i psi} sin(t/2)   e^{-i phi} cos(t/2) ]
/// Throws ParameterError for out-of-range angles.
SingleQubitGate strategy_gate(const StrategyAngles& angles);

/// First column of a strategy gate: the state U|0> = a|0> + b|1>.
struct StrategyAmplitudes {
  Complex a;
  Complex b;
};
StrategyAmplitudes strategy_amplitudes(const SingleQubitGate& gate);

enum class GameVariant { original, simplified };

/// Two-player game circuit selector. `original` runs entangler, strategies,
/// disentangler; `simplified` runs strategies, then the entangler, with no
/// disentangling layer before measurement.
struct GameModel {
  GameVariant variant = GameVariant::original;
  double gamma = 1.5707963267948966;  // pi/2
};

/// Probabilities of the four measurement results 00/01/10/11 read as
/// cooperate/defect choices of players A and B.
struct OutcomeDistribution {
  double cc = 0.0;
  double cd = 0.0;
  double dc = 0.0;
  double dd = 0.0;

  double sum() const { return cc + cd + dc + dd; }
};

OutcomeDistribution play_game(const GameModel& model, const SingleQubitGate& ua,
                              const SingleQubitGate& ub);

/// Closed-form outcome probabilities of the simplified game at gamma = pi/2
/// with theta = pi/2 strategy gates. Angles are reduced mod 2pi.
OutcomeDistribution closed_form_distribution(double phi_a, double psi_a,
                                             double phi_b, double psi_b);

/// Payoffs (player A, player B) per outcome, indexed cc, cd, dc, dd.
struct PayoffTable {
  std::array<double, 4> player_a{};
  std::array<double, 4> player_b{};

  static PayoffTable prisoners_dilemma();
};

struct Payoffs {
  double a = 0.0;
  double b = 0.0;
};

Payoffs expected_payoffs(const OutcomeDistribution& dist,
                         const PayoffTable& table);

enum class PlayerId { a, b };
enum class AngleName { theta, phi, psi };

struct SweepAxis {
  PlayerId player = PlayerId::a;
  AngleName angle = AngleName::theta;
};

/// "theta_a", "phi_b", ... Throws ParameterError for unknown labels.
SweepAxis parse_axis(std::string_view label);
std::string axis_label(const SweepAxis& axis);

struct SweepSpec {
  SweepAxis axis1;
  SweepAxis axis2;
  int grid = 64;  // points per axis
};

struct SurfaceCell {
  double axis1_value = 0.0;
  double axis2_value = 0.0;
  double payoff_a = 0.0;
  double payoff_b = 0.0;
};

struct PayoffSurface {
  SweepSpec sweep;
  std::vector<SurfaceCell> cells;  // axis1-major order
};

/// Evaluates both players' expected payoffs over a 2-axis angle sweep. The
/// non-swept angles keep the values given in `fixed_a`/`fixed_b`. Theta axes
/// take `grid` points over [0,pi] inclusive; phi/psi axes take `grid`
/// periodic points i*2pi/grid.
PayoffSurface payoff_surface(const GameModel& model, const SweepSpec& sweep,
                             const StrategyAngles& fixed_a,
                             const StrategyAngles& fixed_b,
                             const PayoffTable& table);

}  // namespace qgame::duel
