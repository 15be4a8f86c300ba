#include "qgame/duel.hpp"

#include <cmath>
#include <numbers>

namespace qgame::duel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_mod_2pi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

}  // namespace

SingleQubitGate strategy_gate(const StrategyAngles& angles) {
  if (!(angles.theta >= 0.0 && angles.theta <= kPi)) {
    throw ParameterError("theta must lie in [0, pi]");
  }
  if (!(angles.phi >= 0.0 && angles.phi < kTwoPi)) {
    throw ParameterError("phi must lie in [0, 2pi)");
  }
  if (!(angles.psi >= 0.0 && angles.psi < kTwoPi)) {
    throw ParameterError("psi must lie in [0, 2pi)");
  }
  const double c = std::cos(angles.theta / 2.0);
  const double s = std::sin(angles.theta / 2.0);
  const Complex eip = std::polar(1.0, angles.phi);
  const Complex eis = std::polar(1.0, angles.psi);
  return {{{eip * c, -eis * s}, {std::conj(eis) * s, std::conj(eip) * c}}};
}

StrategyAmplitudes strategy_amplitudes(const SingleQubitGate& gate) {
  if (!gate.is_unitary()) {
    throw GateError("strategy gate is not unitary within 1e-10");
  }
  return {gate.m[0][0], gate.m[1][0]};
}

OutcomeDistribution play_game(const GameModel& model, const SingleQubitGate& ua,
                              const SingleQubitGate& ub) {
  StateVector state(2);
  if (model.variant == GameVariant::original) {
    state.apply_entangler(0, 1, model.gamma);
    state.apply_single(ua, 0);
    state.apply_single(ub, 1);
    state.apply_entangler_adjoint(0, 1, model.gamma);
  } else {
    state.apply_single(ua, 0);
    state.apply_single(ub, 1);
    state.apply_entangler(0, 1, model.gamma);
  }
  const std::array<int, 2> qubits{0, 1};
  const std::vector<double> p = state.probabilities(qubits);
  return {p[0], p[1], p[2], p[3]};
}

OutcomeDistribution closed_form_distribution(double phi_a, double psi_a,
                                             double phi_b, double psi_b) {
  phi_a = reduce_mod_2pi(phi_a);
  psi_a = reduce_mod_2pi(psi_a);
  phi_b = reduce_mod_2pi(phi_b);
  psi_b = reduce_mod_2pi(psi_b);
  const double s_sum = std::sin((phi_b + phi_a) + (psi_b + psi_a));
  const double s_diff = std::sin((phi_b - phi_a) + (psi_b - psi_a));
  return {0.25 * (1.0 + s_sum), 0.25 * (1.0 - s_diff), 0.25 * (1.0 + s_diff),
          0.25 * (1.0 - s_sum)};
}

PayoffTable PayoffTable::prisoners_dilemma() {
  PayoffTable t;
  t.player_a = {3.0, 0.0, 5.0, 1.0};
  t.player_b = {3.0, 5.0, 0.0, 1.0};
  return t;
}

Payoffs expected_payoffs(const OutcomeDistribution& dist,
                         const PayoffTable& table) {
  const std::array<double, 4> p{dist.cc, dist.cd, dist.dc, dist.dd};
  Payoffs out;
  for (int i = 0; i < 4; ++i) {
    out.a += table.player_a[i] * p[i];
    out.b += table.player_b[i] * p[i];
  }
  return out;
}

SweepAxis parse_axis(std::string_view label) {
  static constexpr std::pair<std::string_view, SweepAxis> kAxes[] = {
      {"theta_a", {PlayerId::a, AngleName::theta}},
      {"phi_a", {PlayerId::a, AngleName::phi}},
      {"psi_a", {PlayerId::a, AngleName::psi}},
      {"theta_b", {PlayerId::b, AngleName::theta}},
      {"phi_b", {PlayerId::b, AngleName::phi}},
      {"psi_b", {PlayerId::b, AngleName::psi}},
  };
  for (const auto& [name, axis] : kAxes) {
    if (label == name) return axis;
  }
  throw ParameterError("unknown sweep axis \"" + std::string(label) +
                       "\" (expected theta/phi/psi _a/_b)");
}

std::string axis_label(const SweepAxis& axis) {
  std::string name;
  switch (axis.angle) {
    case AngleName::theta: name = "theta"; break;
    case AngleName::phi: name = "phi"; break;
    case AngleName::psi: name = "psi"; break;
  }
  return name + (axis.player == PlayerId::a ? "_a" : "_b");
}

namespace {

double axis_point(AngleName angle, int step, int grid) {
  // Theta spans [0,pi] inclusive; the periodic phases exclude the aliased
  // 2pi endpoint.
  if (angle == AngleName::theta) {
    return kPi * static_cast<double>(step) / static_cast<double>(grid - 1);
  }
  return kTwoPi * static_cast<double>(step) / static_cast<double>(grid);
}

void set_angle(StrategyAngles& angles, AngleName which, double value) {
  switch (which) {
    case AngleName::theta: angles.theta = value; break;
    case AngleName::phi: angles.phi = value; break;
    case AngleName::psi: angles.psi = value; break;
  }
}

}  // namespace

PayoffSurface payoff_surface(const GameModel& model, const SweepSpec& sweep,
                             const StrategyAngles& fixed_a,
                             const StrategyAngles& fixed_b,
                             const PayoffTable& table) {
  if (sweep.grid < 2) {
    throw ParameterError("sweep grid needs at least 2 points per axis");
  }
  PayoffSurface surface;
  surface.sweep = sweep;
  surface.cells.reserve(static_cast<std::size_t>(sweep.grid) *
                        static_cast<std::size_t>(sweep.grid));
  for (int i = 0; i < sweep.grid; ++i) {
    const double v1 = axis_point(sweep.axis1.angle, i, sweep.grid);
    for (int j = 0; j < sweep.grid; ++j) {
      const double v2 = axis_point(sweep.axis2.angle, j, sweep.grid);
      StrategyAngles a = fixed_a;
      StrategyAngles b = fixed_b;
      auto& target1 = sweep.axis1.player == PlayerId::a ? a : b;
      auto& target2 = sweep.axis2.player == PlayerId::a ? a : b;
      set_angle(target1, sweep.axis1.angle, v1);
      set_angle(target2, sweep.axis2.angle, v2);
      const OutcomeDistribution dist =
          play_game(model, strategy_gate(a), strategy_gate(b));
      const Payoffs payoffs = expected_payoffs(dist, table);
      surface.cells.push_back({v1, v2, payoffs.a, payoffs.b});
    }
  }
  return surface;
}

}  // namespace qgame::duel
