#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qgame/duel.hpp"

using namespace qgame;
using namespace qgame::duel;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtHalf = 0.7071067811865476;

double max_entry_distance(const SingleQubitGate& a, const SingleQubitGate& b) {
  double d = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      d = std::max(d, std::abs(a.m[i][j] - b.m[i][j]));
    }
  }
  return d;
}

double max_dist_diff(const OutcomeDistribution& x,
                     const OutcomeDistribution& y) {
  return std::max({std::abs(x.cc - y.cc), std::abs(x.cd - y.cd),
                   std::abs(x.dc - y.dc), std::abs(x.dd - y.dd)});
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_from_bits(rng());
}

}  // namespace

TEST_CASE("strategy gate hits its anchor matrices") {
  SUBCASE("zero angles give the identity") {
    CHECK(max_entry_distance(strategy_gate({0.0, 0.0, 0.0}),
                             SingleQubitGate::identity()) < 1e-15);
  }
  SUBCASE("theta = pi kills the cosines") {
    const SingleQubitGate g = strategy_gate({kPi, 0.0, 0.0});
    const SingleQubitGate expected{{{0.0, -1.0}, {1.0, 0.0}}};
    CHECK(max_entry_distance(g, expected) < 1e-12);
  }
  SUBCASE("theta = pi/2 reduces to the phase-only form") {
    for (const auto& [phi, psi] :
         {std::pair{0.3, 1.2}, {5.9, 0.0}, {kPi, kPi / 3.0}}) {
      const SingleQubitGate g = strategy_gate({kPi / 2.0, phi, psi});
      const SingleQubitGate expected{
          {{std::polar(kSqrtHalf, phi), -std::polar(kSqrtHalf, psi)},
           {std::polar(kSqrtHalf, -psi), std::polar(kSqrtHalf, -phi)}}};
      CHECK(max_entry_distance(g, expected) < 1e-15);
    }
  }
  SUBCASE("theta = pi/2 with zero phases balances |0>") {
    StateVector s(1);
    s.apply_single(strategy_gate({kPi / 2.0, 0.0, 0.0}), 0);
    CHECK(std::abs(s.amplitude(0) - Complex{kSqrtHalf, 0.0}) < 1e-12);
    CHECK(std::abs(s.amplitude(1) - Complex{kSqrtHalf, 0.0}) < 1e-12);
  }
  SUBCASE("unitary across the whole parameter range") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
      const StrategyAngles angles{uniform(rng, 0.0, kPi),
                                  uniform(rng, 0.0, 2.0 * kPi),
                                  uniform(rng, 0.0, 2.0 * kPi)};
      CHECK(strategy_gate(angles).is_unitary(1e-12));
    }
  }
  SUBCASE("rejects out-of-range angles") {
    CHECK_THROWS_AS(strategy_gate({-0.1, 0.0, 0.0}), ParameterError);
    CHECK_THROWS_AS(strategy_gate({kPi + 0.1, 0.0, 0.0}), ParameterError);
    CHECK_THROWS_AS(strategy_gate({0.0, 2.0 * kPi, 0.0}), ParameterError);
    CHECK_THROWS_AS(strategy_gate({0.0, 0.0, -1.0}), ParameterError);
  }
}

TEST_CASE("strategy amplitudes are the gate's first column") {
  const StrategyAmplitudes id = strategy_amplitudes(SingleQubitGate::identity());
  CHECK(std::abs(id.a - Complex{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(id.b) < 1e-15);

  const StrategyAmplitudes had = strategy_amplitudes(SingleQubitGate::hadamard());
  CHECK(std::abs(had.a - Complex{kSqrtHalf, 0.0}) < 1e-15);
  CHECK(std::abs(had.b - Complex{kSqrtHalf, 0.0}) < 1e-15);

  const StrategyAmplitudes rot =
      strategy_amplitudes(strategy_gate({kPi / 2.0, kPi / 4.0, 0.0}));
  CHECK(std::abs(rot.a - std::polar(kSqrtHalf, kPi / 4.0)) < 1e-15);
  CHECK(std::abs(rot.b - Complex{kSqrtHalf, 0.0}) < 1e-15);
  CHECK(std::norm(rot.a) + std::norm(rot.b) == doctest::Approx(1.0).epsilon(1e-10));

  SingleQubitGate bad{{{0.5, 0.5}, {0.5, 0.5}}};
  CHECK_THROWS_AS(strategy_amplitudes(bad), GateError);
}

TEST_CASE("game anchors") {
  const GameModel original{GameVariant::original, kPi / 2.0};
  const GameModel simplified{GameVariant::simplified, kPi / 2.0};
  const SingleQubitGate id = SingleQubitGate::identity();

  SUBCASE("original with identity strategies stays |00>") {
    const OutcomeDistribution d = play_game(original, id, id);
    CHECK(d.cc == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.cd + d.dc + d.dd < 1e-12);
  }
  SUBCASE("simplified with identity strategies splits cc/dd") {
    const OutcomeDistribution d = play_game(simplified, id, id);
    CHECK(d.cc == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d.dd == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d.cd + d.dc < 1e-12);
  }
  SUBCASE("all-pi/8 phase strategies erase the dd outcome") {
    const SingleQubitGate g = strategy_gate({kPi / 2.0, kPi / 8.0, kPi / 8.0});
    const OutcomeDistribution d = play_game(simplified, g, g);
    CHECK(d.dd <= 1e-12);
  }
  SUBCASE("non-unitary strategies are refused") {
    SingleQubitGate bad{{{1.0, 1.0}, {1.0, 1.0}}};
    CHECK_THROWS_AS(play_game(original, bad, id), GateError);
    CHECK_THROWS_AS(play_game(simplified, id, bad), GateError);
  }
}

TEST_CASE("closed form matches its anchors and the circuit") {
  SUBCASE("all-zero angles give the uniform distribution") {
    const OutcomeDistribution d = closed_form_distribution(0.0, 0.0, 0.0, 0.0);
    CHECK(d.cc == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(d.cd == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(d.dc == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(d.dd == doctest::Approx(0.25).epsilon(1e-15));
  }
  SUBCASE("all-pi/8 angles") {
    const double a = kPi / 8.0;
    const OutcomeDistribution d = closed_form_distribution(a, a, a, a);
    CHECK(d.cc == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d.cd == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(d.dc == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(d.dd <= 1e-12);
  }
  SUBCASE("statevector simulation agrees over random angles") {
    std::mt19937_64 rng(31);
    const GameModel simplified{GameVariant::simplified, kPi / 2.0};
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double phi_a = uniform(rng, 0.0, 2.0 * kPi);
      const double psi_a = uniform(rng, 0.0, 2.0 * kPi);
      const double phi_b = uniform(rng, 0.0, 2.0 * kPi);
      const double psi_b = uniform(rng, 0.0, 2.0 * kPi);
      const OutcomeDistribution closed =
          closed_form_distribution(phi_a, psi_a, phi_b, psi_b);
      const OutcomeDistribution simulated =
          play_game(simplified, strategy_gate({kPi / 2.0, phi_a, psi_a}),
                    strategy_gate({kPi / 2.0, phi_b, psi_b}));
      worst = std::max(worst, max_dist_diff(closed, simulated));
    }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("closed-form identities and ranges") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 1000; ++i) {
    const double phi_a = uniform(rng, 0.0, 2.0 * kPi);
    const double psi_a = uniform(rng, 0.0, 2.0 * kPi);
    const double phi_b = uniform(rng, 0.0, 2.0 * kPi);
    const double psi_b = uniform(rng, 0.0, 2.0 * kPi);
    const OutcomeDistribution d =
        closed_form_distribution(phi_a, psi_a, phi_b, psi_b);
    REQUIRE(std::abs(d.dd - (0.5 - d.cc)) <= 1e-12);
    REQUIRE(std::abs(d.cd - (0.5 - d.dc)) <= 1e-12);
    for (double p : {d.cc, d.cd, d.dc, d.dd}) {
      REQUIRE(p >= 0.0);
      REQUIRE(p <= 0.5 + 1e-12);
    }
    REQUIRE(std::abs(d.sum() - 1.0) <= 1e-12);
  }
}

TEST_CASE("destructive interference at the quarter-turn phase sum") {
  std::mt19937_64 rng(53);
  const GameModel simplified{GameVariant::simplified, kPi / 2.0};
  for (int i = 0; i < 200; ++i) {
    const double phi_a = uniform(rng, 0.0, 2.0 * kPi);
    const double phi_b = uniform(rng, 0.0, 2.0 * kPi);
    const double psi_a = uniform(rng, 0.0, 2.0 * kPi);
    double psi_b = std::fmod(kPi / 2.0 - phi_a - phi_b - psi_a, 2.0 * kPi);
    if (psi_b < 0.0) psi_b += 2.0 * kPi;
    if (psi_b >= 2.0 * kPi) psi_b = 0.0;
    const OutcomeDistribution closed =
        closed_form_distribution(phi_a, psi_a, phi_b, psi_b);
    REQUIRE(closed.dd <= 1e-12);
    const OutcomeDistribution simulated =
        play_game(simplified, strategy_gate({kPi / 2.0, phi_a, psi_a}),
                  strategy_gate({kPi / 2.0, phi_b, psi_b}));
    REQUIRE(simulated.dd <= 1e-12);
  }
}

TEST_CASE("balanced phase differences equalize the payoffs") {
  std::mt19937_64 rng(61);
  const PayoffTable table = PayoffTable::prisoners_dilemma();
  for (int i = 0; i < 200; ++i) {
    // Choose psi_b so that (phi_b - phi_a) + (psi_b - psi_a) = 0.
    const double phi_a = uniform(rng, 0.0, 2.0 * kPi);
    const double phi_b = uniform(rng, 0.0, 2.0 * kPi);
    const double psi_a = uniform(rng, 0.0, 2.0 * kPi);
    double psi_b = std::fmod(psi_a + phi_a - phi_b + 2.0 * kPi, 2.0 * kPi);
    const OutcomeDistribution d =
        closed_form_distribution(phi_a, psi_a, phi_b, psi_b);
    REQUIRE(std::abs(d.cd - d.dc) <= 1e-12);
    const Payoffs payoffs = expected_payoffs(d, table);
    REQUIRE(std::abs(payoffs.a - payoffs.b) <= 1e-11);
  }
}

TEST_CASE("expected payoffs weigh the table by the distribution") {
  const PayoffTable table = PayoffTable::prisoners_dilemma();
  const Payoffs cc = expected_payoffs({1.0, 0.0, 0.0, 0.0}, table);
  CHECK(cc.a == 3.0);
  CHECK(cc.b == 3.0);
  const Payoffs dd = expected_payoffs({0.0, 0.0, 0.0, 1.0}, table);
  CHECK(dd.a == 1.0);
  CHECK(dd.b == 1.0);
  const Payoffs mixed = expected_payoffs({0.25, 0.25, 0.25, 0.25}, table);
  CHECK(mixed.a == doctest::Approx(2.25).epsilon(1e-15));
  CHECK(mixed.b == doctest::Approx(2.25).epsilon(1e-15));
}

TEST_CASE("payoff surfaces") {
  const PayoffTable table = PayoffTable::prisoners_dilemma();
  const SweepSpec theta_theta{parse_axis("theta_a"), parse_axis("theta_b"), 33};

  SUBCASE("original-model corner keeps the cooperative payoff") {
    const PayoffSurface surface = payoff_surface(
        {GameVariant::original, kPi / 2.0}, theta_theta, {}, {}, table);
    CHECK(surface.cells.size() == 1089);
    CHECK(surface.cells[0].axis1_value == 0.0);
    CHECK(surface.cells[0].axis2_value == 0.0);
    CHECK(surface.cells[0].payoff_a == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(surface.cells[0].payoff_b == doctest::Approx(3.0).epsilon(1e-12));
  }
  SUBCASE("simplified-model corner averages cc and dd") {
    const PayoffSurface surface = payoff_surface(
        {GameVariant::simplified, kPi / 2.0}, theta_theta, {}, {}, table);
    CHECK(surface.cells[0].payoff_a == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(surface.cells[0].payoff_b == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("axis parsing") {
    CHECK(axis_label(parse_axis("psi_b")) == "psi_b");
    CHECK_THROWS_AS(parse_axis("theta_c"), ParameterError);
    CHECK_THROWS_AS(parse_axis(""), ParameterError);
  }
  SUBCASE("grid must have at least two points") {
    CHECK_THROWS_AS(payoff_surface({GameVariant::original, kPi / 2.0},
                                   {parse_axis("theta_a"),
                                    parse_axis("theta_b"), 1},
                                   {}, {}, table),
                    ParameterError);
  }
  SUBCASE("periodic axes stay inside [0, 2pi)") {
    const SweepSpec phi_phi{parse_axis("phi_a"), parse_axis("phi_b"), 8};
    const PayoffSurface surface = payoff_surface(
        {GameVariant::original, kPi / 2.0}, phi_phi, {}, {}, table);
    for (const SurfaceCell& cell : surface.cells) {
      CHECK(cell.axis1_value < 2.0 * kPi);
      CHECK(cell.axis2_value < 2.0 * kPi);
    }
  }
}

TEST_CASE("simplified-model payoff curves coincide on the swept slices") {
  const PayoffTable table = PayoffTable::prisoners_dilemma();
  const GameModel simplified{GameVariant::simplified, kPi / 2.0};
  const SweepSpec slices[] = {
      {parse_axis("theta_a"), parse_axis("theta_b"), 9},
      {parse_axis("theta_a"), parse_axis("phi_b"), 9},
      {parse_axis("phi_a"), parse_axis("phi_b"), 9},
  };
  for (const SweepSpec& sweep : slices) {
    const PayoffSurface surface =
        payoff_surface(simplified, sweep, {}, {}, table);
    for (const SurfaceCell& cell : surface.cells) {
      REQUIRE(std::abs(cell.payoff_a - cell.payoff_b) <= 1e-12);
    }
  }
}
