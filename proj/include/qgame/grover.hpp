#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgame/arbiter.hpp"
#include "qgame/statevector.hpp"

namespace qgame::grover {

/// Total function f: {0,1}^n_in -> {0,1}^n_out as an explicit table indexed
/// by the input value (leftmost bit most significant).
struct TruthTable {
  int n_in = 0;
  int n_out = 0;
  std::vector<std::string> table;

  /// Throws SizeError/DataError on shape or alphabet problems.
  void validate() const;

  const std::string& operator()(std::size_t x) const { return table[x]; }

  static TruthTable identity(int n);
};

struct ComparatorResult {
  int o1 = 0;
  int o2 = 0;
};

/// Unsigned comparison of two equal-length bitstrings:
/// a>b -> (1,0), a<b -> (0,1), a=b -> (0,0). (1,1) never occurs.
ComparatorResult qbsc_compare(std::string_view a, std::string_view b);

struct QbscCheckReport {
  bool pass = false;
  std::size_t states_checked = 0;
};

/// Verifies that the comparator's reversible form (inputs |a>|b>|o1 o2>,
/// outputs with the o bits XOR-updated) permutes the full computational
/// basis and matches qbsc_compare on cleared ancillas. n <= 6.
QbscCheckReport qbsc_unitary_check(int n);

struct OracleSpec {
  TruthTable f;
  std::string y;

  /// Throws on shape problems; y must have exactly n_out bits.
  void validate() const;
};

/// Phase oracle marking { x : f(x) = y }.
class Oracle {
 public:
  explicit Oracle(OracleSpec spec);

  int n_in() const { return spec_.f.n_in; }
  std::size_t marked_count() const { return marked_count_; }
  bool is_marked(std::size_t x) const { return marked_[x]; }
  const OracleSpec& spec() const { return spec_; }

  /// |x> -> -|x> if f(x)=y, identity otherwise. The state must have exactly
  /// n_in qubits.
  void apply(StateVector& state) const;

  /// Register width of the comparator construction:
  /// n_in + n_out (function output) + n_out (target) + 2 (comparator bits).
  int circuit_qubits() const;

  /// The same phase flip realized the long way: X-load |y>, compute f into
  /// the work register, compare, flip the phase of the equality code,
  /// uncompute everything. The state must have circuit_qubits() qubits laid
  /// out [x | work | y | o1 o2] with everything after x cleared; the
  /// ancillas come back to |0...0> exactly.
  void apply_via_comparator_circuit(StateVector& state) const;

 private:
  OracleSpec spec_;
  std::vector<bool> marked_;
  std::size_t marked_count_ = 0;
};

Oracle build_oracle(OracleSpec spec);

struct GroverResult {
  std::string x;
  double success_probability = 0.0;
  int iterations = 0;
  std::size_t marked_count = 0;
};

/// Uniform superposition plus `iterations` rounds of oracle + diffusion.
/// Without an explicit count, uses floor(pi/4 * sqrt(N/M)) and throws
/// NoSolutionError when M = 0. Reports the exact statevector success
/// probability and one sampled input.
GroverResult grover_search(const OracleSpec& spec,
                           std::optional<int> iterations, RngSeed seed);

struct InversionResult {
  std::string x;
  int attempts = 0;
  double success_probability = 0.0;
};

/// Repeats seeded Grover runs until the sampled x classically satisfies
/// f(x)=y. Throws NoSolutionError when y has no preimage and
/// SearchFailureError when the retry budget runs out.
InversionResult invert_function(const TruthTable& f, const std::string& y,
                                RngSeed seed, int max_retries = 32);

struct PipelineRoundResult {
  int winner = 0;
  std::string y;
  std::string x;
  int attempts = 0;
};

/// One arbitration round feeding the oracle: plays the four-player game,
/// takes the sampled data bus as the target y, and Grover-inverts f on it.
PipelineRoundResult pipeline_round(const arbiter::StrategySet& strategies,
                                   const arbiter::PlayerData& data,
                                   const TruthTable& f, RngSeed seed,
                                   int max_retries = 32);

}  // namespace qgame::grover
