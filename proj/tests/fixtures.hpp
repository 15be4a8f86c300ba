#pragma once

#include <array>

#include "qgame/arbiter.hpp"

// Reference strategy sets (4-decimal matrices) with the winner
// distributions they are documented to achieve, plus the standard
// four-player data assignment used across the integration tests.
namespace fixtures {

using qgame::Complex;
using qgame::SingleQubitGate;
using qgame::arbiter::PlayerData;
using qgame::arbiter::StrategySet;

inline SingleQubitGate gate(double r00, double i00, double r01, double i01,
                            double r10, double i10, double r11, double i11) {
  return {{{Complex{r00, i00}, Complex{r01, i01}},
           {Complex{r10, i10}, Complex{r11, i11}}}};
}

// Priority target (0.4, 0.3, 0.2, 0.1), first published solution.
inline const StrategySet kParetoSet1 = {
    gate(-0.0038, -0.4920, 0.8361, 0.2427, -0.8361, 0.2427, -0.0038, 0.4920),
    gate(-0.2486, -0.7967, 0.5318, -0.1438, -0.5318, -0.1438, -0.2486, 0.7967),
    gate(-0.1978, 0.0281, -0.3488, 0.9157, 0.3488, 0.9157, -0.1978, -0.0281),
    gate(-0.7550, 0.4130, 0.1562, -0.4847, -0.1562, -0.4847, -0.7550, -0.4130),
};
inline constexpr std::array<double, 4> kParetoSet1Distribution = {
    0.4010, 0.2990, 0.1935, 0.1065};

// Priority target (0.4, 0.3, 0.2, 0.1), second published solution.
inline const StrategySet kParetoSet2 = {
    gate(0.1769, 0.3634, 0.8405, -0.3607, -0.8405, -0.3607, 0.1769, -0.3634),
    gate(-0.7518, 0.4023, 0.3505, 0.3874, -0.3505, 0.3874, -0.7518, -0.4023),
    gate(-0.2903, 0.2477, 0.8993, -0.2138, -0.8993, -0.2138, -0.2903, -0.2477),
    gate(0.7454, -0.3901, -0.2846, -0.4597, 0.2846, -0.4597, 0.7454, 0.3901),
};
inline constexpr std::array<double, 4> kParetoSet2Distribution = {
    0.4009, 0.2996, 0.1934, 0.1061};

// Priority target (0.15, 0.35, 0.35, 0.14).
inline const StrategySet kParetoSet3 = {
    gate(-0.2432, 0.8720, -0.4180, 0.0762, 0.4180, 0.0762, -0.2432, -0.8720),
    gate(-0.1250, -0.1227, -0.9785, 0.1093, 0.9785, 0.1093, -0.1250, 0.1227),
    gate(0.3280, -0.8451, 0.3140, 0.2821, -0.3140, 0.2821, 0.3280, 0.8451),
    gate(0.6939, 0.1171, 0.6621, -0.2578, -0.6621, -0.2578, 0.6939, -0.1171),
};
inline constexpr std::array<double, 4> kParetoSet3Distribution = {
    0.1548, 0.3496, 0.3497, 0.1459};

inline const PlayerData kStandardData{{"1001", "0001", "1000", "1111"}};

inline StrategySet all_identity() {
  return {SingleQubitGate::identity(), SingleQubitGate::identity(),
          SingleQubitGate::identity(), SingleQubitGate::identity()};
}

inline StrategySet all_hadamard() {
  return {SingleQubitGate::hadamard(), SingleQubitGate::hadamard(),
          SingleQubitGate::hadamard(), SingleQubitGate::hadamard()};
}

}  // namespace fixtures
