#include "qgame/strategy_ga.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace qgame::ga {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kFieldCodes = 1 << kBitsPerAngle;  // 4096

unsigned field_value(const Chromosome& c, int field) {
  unsigned v = 0;
  const int base = field * kBitsPerAngle;
  for (int b = 0; b < kBitsPerAngle; ++b) {
    v = (v << 1) | c.bits[base + b];
  }
  return v;
}

void store_field(Chromosome& c, int field, unsigned v) {
  const int base = field * kBitsPerAngle;
  for (int b = 0; b < kBitsPerAngle; ++b) {
    c.bits[base + b] = (v >> (kBitsPerAngle - 1 - b)) & 1u;
  }
}

unsigned quantize(double angle, double span) {
  const long code = std::lround(angle / span * kFieldCodes);
  return static_cast<unsigned>(std::clamp(code, 0L, long{kFieldCodes - 1}));
}

}  // namespace

void PriorityVector::validate() const {
  for (int k = 0; k < arbiter::kPlayers; ++k) {
    if (!(eps[k] >= 0.0 && eps[k] <= 1.0)) {
      throw ParameterError("eps[" + std::to_string(k) + "] out of [0,1]");
    }
  }
}

arbiter::StrategySet decode(const Chromosome& chromosome) {
  if (chromosome.bits.size() != kChromosomeBits) {
    throw SizeError("chromosome must have exactly " +
                    std::to_string(kChromosomeBits) + " bits");
  }
  arbiter::StrategySet set;
  for (int k = 0; k < arbiter::kPlayers; ++k) {
    duel::StrategyAngles angles;
    angles.theta = kPi * field_value(chromosome, 3 * k) / kFieldCodes;
    angles.phi = 2.0 * kPi * field_value(chromosome, 3 * k + 1) / kFieldCodes;
    angles.psi = 2.0 * kPi * field_value(chromosome, 3 * k + 2) / kFieldCodes;
    set[k] = duel::strategy_gate(angles);
  }
  return set;
}

Chromosome encode(const std::array<duel::StrategyAngles, 4>& angles) {
  Chromosome c;
  c.bits.assign(kChromosomeBits, 0);
  for (int k = 0; k < arbiter::kPlayers; ++k) {
    store_field(c, 3 * k, quantize(angles[k].theta, kPi));
    store_field(c, 3 * k + 1, quantize(angles[k].phi, 2.0 * kPi));
    store_field(c, 3 * k + 2, quantize(angles[k].psi, 2.0 * kPi));
  }
  return c;
}

double fitness(const arbiter::StrategySet& candidate,
               const PriorityVector& target) {
  target.validate();
  const arbiter::WinnerDistribution dist =
      arbiter::winner_distribution(candidate);
  double total = 0.0;
  for (int k = 0; k < arbiter::kPlayers; ++k) {
    total += std::abs(dist.p[k] - target.eps[k]);
  }
  return total;
}

void GaConfig::validate() const {
  if (population < 2) throw ParameterError("population must be at least 2");
  if (generations < 1) throw ParameterError("generations must be at least 1");
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
    throw ParameterError("crossover_rate out of [0,1]");
  }
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
    throw ParameterError("mutation_rate out of [0,1]");
  }
  if (tournament_size < 1) {
    throw ParameterError("tournament_size must be at least 1");
  }
  if (elitism < 0 || elitism >= population) {
    throw ParameterError("elitism must lie in [0, population)");
  }
  if (restart_stagnation < 0) {
    throw ParameterError("restart_stagnation must be non-negative");
  }
}

namespace {

class EvolutionRng {
 public:
  explicit EvolutionRng(RngSeed seed) : rng_(seed) {}

  double uniform() { return uniform_from_bits(rng_()); }

  int below(int n) {
    const int v = static_cast<int>(uniform() * n);
    return v < n ? v : n - 1;
  }

  std::uint8_t bit() { return static_cast<std::uint8_t>(rng_() >> 63); }

 private:
  std::mt19937_64 rng_;
};

Chromosome random_chromosome(EvolutionRng& rng) {
  Chromosome c;
  c.bits.resize(kChromosomeBits);
  for (auto& b : c.bits) b = rng.bit();
  return c;
}

double chromosome_fitness(const Chromosome& c, const PriorityVector& target) {
  return fitness(decode(c), target);
}

}  // namespace

EvolveResult evolve(const PriorityVector& target, const GaConfig& config) {
  target.validate();
  config.validate();

  EvolutionRng rng(config.seed);
  const int pop = config.population;

  std::vector<Chromosome> population;
  std::vector<double> scores(pop);
  population.reserve(pop);
  for (int i = 0; i < pop; ++i) {
    population.push_back(random_chromosome(rng));
    scores[i] = chromosome_fitness(population[i], target);
  }

  Chromosome best_chromosome = population[0];
  double best_fitness = scores[0];
  for (int i = 1; i < pop; ++i) {
    if (scores[i] < best_fitness) {
      best_fitness = scores[i];
      best_chromosome = population[i];
    }
  }

  std::vector<double> trace;
  trace.reserve(config.generations);
  int stale_generations = 0;

  std::vector<int> order(pop);
  for (int gen = 0; gen < config.generations; ++gen) {
    if (config.restart_stagnation > 0 &&
        stale_generations >= config.restart_stagnation) {
      for (int i = 0; i < pop; ++i) {
        population[i] = random_chromosome(rng);
        scores[i] = chromosome_fitness(population[i], target);
      }
      stale_generations = 0;
    }

    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
      return scores[lhs] < scores[rhs];
    });

    std::vector<Chromosome> next;
    next.reserve(pop);
    for (int e = 0; e < config.elitism; ++e) {
      next.push_back(population[order[e]]);
    }
    auto tournament = [&]() -> int {
      int winner = rng.below(pop);
      for (int t = 1; t < config.tournament_size; ++t) {
        const int challenger = rng.below(pop);
        if (scores[challenger] < scores[winner]) winner = challenger;
      }
      return winner;
    };
    while (static_cast<int>(next.size()) < pop) {
      const int p1 = tournament();
      const int p2 = tournament();
      Chromosome child = population[p1];
      if (rng.uniform() < config.crossover_rate) {
        const int cut = 1 + rng.below(kChromosomeBits - 1);
        std::copy(population[p2].bits.begin() + cut, population[p2].bits.end(),
                  child.bits.begin() + cut);
      }
      for (auto& b : child.bits) {
        if (rng.uniform() < config.mutation_rate) b ^= 1u;
      }
      next.push_back(std::move(child));
    }

    population = std::move(next);
    bool improved = false;
    for (int i = 0; i < pop; ++i) {
      scores[i] = chromosome_fitness(population[i], target);
      if (scores[i] < best_fitness) {
        best_fitness = scores[i];
        best_chromosome = population[i];
        improved = true;
      }
    }
    stale_generations = improved ? 0 : stale_generations + 1;
    trace.push_back(best_fitness);
  }

  EvolveResult result;
  result.best = decode(best_chromosome);
  result.best_chromosome = std::move(best_chromosome);
  result.achieved = arbiter::winner_distribution(result.best);
  result.best_fitness = best_fitness;
  result.fitness_trace = std::move(trace);
  return result;
}

namespace {

struct Mat2 {
  Complex m[2][2];
};

Mat2 to_mat(const SingleQubitGate& g) {
  return {{{g.m[0][0], g.m[0][1]}, {g.m[1][0], g.m[1][1]}}};
}

Mat2 adjoint(const Mat2& a) {
  return {{{std::conj(a.m[0][0]), std::conj(a.m[1][0])},
           {std::conj(a.m[0][1]), std::conj(a.m[1][1])}}};
}

Mat2 inverse(const Mat2& a) {
  const Complex det = a.m[0][0] * a.m[1][1] - a.m[0][1] * a.m[1][0];
  if (std::abs(det) < 1e-6) {
    throw DataError("matrix is singular; no nearby unitary");
  }
  return {{{a.m[1][1] / det, -a.m[0][1] / det},
           {-a.m[1][0] / det, a.m[0][0] / det}}};
}

double max_entry_distance(const Mat2& a, const Mat2& b) {
  double d = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      d = std::max(d, std::abs(a.m[i][j] - b.m[i][j]));
    }
  }
  return d;
}

}  // namespace

SingleQubitGate nearest_unitary(const SingleQubitGate& gate) {
  // Newton iteration for the polar factor: X <- (X + X^{-dagger}) / 2.
  const Mat2 input = to_mat(gate);
  Mat2 x = input;
  for (int iter = 0; iter < 64; ++iter) {
    const Mat2 correction = adjoint(inverse(x));
    Mat2 next;
    double step = 0.0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        next.m[i][j] = 0.5 * (x.m[i][j] + correction.m[i][j]);
        step = std::max(step, std::abs(next.m[i][j] - x.m[i][j]));
      }
    }
    x = next;
    if (step < 1e-15) break;
  }
  if (max_entry_distance(input, x) > 0.01) {
    throw DataError("matrix is not within 0.01 of any unitary");
  }
  SingleQubitGate out{{{x.m[0][0], x.m[0][1]}, {x.m[1][0], x.m[1][1]}}};
  if (!out.is_unitary(1e-10)) {
    throw DataError("unitary projection failed to converge");
  }
  return out;
}

VerifyReport verify_strategy_set(const arbiter::StrategySet& raw,
                                 const arbiter::WinnerDistribution& expected,
                                 double tol) {
  if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
  arbiter::StrategySet projected;
  for (int k = 0; k < arbiter::kPlayers; ++k) {
    projected[k] = nearest_unitary(raw[k]);
  }
  const arbiter::WinnerDistribution achieved =
      arbiter::winner_distribution(projected);

  VerifyReport report;
  report.expected = expected.p;
  report.achieved = achieved.p;
  report.tolerance = tol;
  for (int k = 0; k < arbiter::kPlayers; ++k) {
    report.deviation[k] = achieved.p[k] - expected.p[k];
    report.max_deviation =
        std::max(report.max_deviation, std::abs(report.deviation[k]));
  }
  report.pass = report.max_deviation <= tol;
  return report;
}

}  // namespace qgame::ga
