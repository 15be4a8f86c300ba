#include "qgame/grover.hpp"

#include <cmath>
#include <numbers>

namespace qgame::grover {

namespace {

constexpr int kMaxSearchQubits = 12;
constexpr int kMaxComparatorBits = 6;

bool is_bitstring(std::string_view s) {
  for (char c : s) {
    if (c != '0' && c != '1') return false;
  }
  return true;
}

}  // namespace

void TruthTable::validate() const {
  if (n_in < 1 || n_in > kMaxSearchQubits) {
    throw SizeError("truth table input width must lie in [1, 12]");
  }
  if (n_out < 1 || n_out > StateVector::kMaxQubits) {
    throw SizeError("truth table output width must lie in [1, 16]");
  }
  if (table.size() != (std::size_t{1} << n_in)) {
    throw SizeError("truth table must have exactly 2^n_in entries");
  }
  for (const std::string& row : table) {
    if (row.size() != static_cast<std::size_t>(n_out) || !is_bitstring(row)) {
      throw DataError("truth table entries must be n_out bits of 0/1");
    }
  }
}

TruthTable TruthTable::identity(int n) {
  TruthTable t;
  t.n_in = n;
  t.n_out = n;
  if (n >= 1 && n <= kMaxSearchQubits) {
    t.table.reserve(std::size_t{1} << n);
    for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
      t.table.push_back(index_to_bits(x, n));
    }
  }
  t.validate();
  return t;
}

ComparatorResult qbsc_compare(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) {
    throw SizeError("comparator inputs must have equal length");
  }
  if (!is_bitstring(a) || !is_bitstring(b)) {
    throw DataError("comparator inputs must be bitstrings");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      return a[i] == '1' ? ComparatorResult{1, 0} : ComparatorResult{0, 1};
    }
  }
  return {0, 0};
}

QbscCheckReport qbsc_unitary_check(int n) {
  if (n < 1 || n > kMaxComparatorBits) {
    throw ParameterError("comparator check supports widths 1..6");
  }
  const std::size_t strings = std::size_t{1} << n;
  const std::size_t total = strings * strings * 4;  // |a>|b>|o1 o2>
  std::vector<bool> hit(total, false);
  QbscCheckReport report;
  report.states_checked = total;
  for (std::size_t a = 0; a < strings; ++a) {
    const std::string a_bits = index_to_bits(a, n);
    for (std::size_t b = 0; b < strings; ++b) {
      const std::string b_bits = index_to_bits(b, n);
      const ComparatorResult cmp = qbsc_compare(a_bits, b_bits);
      const unsigned code =
          static_cast<unsigned>(cmp.o1) << 1 | static_cast<unsigned>(cmp.o2);
      if (cmp.o1 == 1 && cmp.o2 == 1) return report;  // pass stays false
      for (unsigned o = 0; o < 4; ++o) {
        const std::size_t out = ((a * strings + b) << 2) | (o ^ code);
        if (hit[out]) return report;
        hit[out] = true;
      }
      // Cleared ancillas must read back the comparison itself.
      const bool greater = a > b, less = a < b;
      if ((cmp.o1 == 1) != greater || (cmp.o2 == 1) != less) return report;
    }
  }
  report.pass = true;
  return report;
}

void OracleSpec::validate() const {
  f.validate();
  if (y.size() != static_cast<std::size_t>(f.n_out) || !is_bitstring(y)) {
    throw SizeError("oracle target y must have exactly n_out bits");
  }
}

Oracle::Oracle(OracleSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  marked_.resize(spec_.f.table.size());
  for (std::size_t x = 0; x < marked_.size(); ++x) {
    marked_[x] = spec_.f.table[x] == spec_.y;
    if (marked_[x]) ++marked_count_;
  }
}

Oracle build_oracle(OracleSpec spec) { return Oracle(std::move(spec)); }

void Oracle::apply(StateVector& state) const {
  if (state.num_qubits() != spec_.f.n_in) {
    throw SizeError("oracle expects a register of exactly n_in qubits");
  }
  state.apply_phase_flip_if([&](std::size_t i) { return bool{marked_[i]}; });
}

int Oracle::circuit_qubits() const {
  return spec_.f.n_in + 2 * spec_.f.n_out + 2;
}

void Oracle::apply_via_comparator_circuit(StateVector& state) const {
  const int n_in = spec_.f.n_in;
  const int n_out = spec_.f.n_out;
  const int total = circuit_qubits();
  if (total > StateVector::kMaxQubits) {
    throw SizeError("comparator-circuit oracle needs " + std::to_string(total) +
                    " qubits; cap is 16");
  }
  if (state.num_qubits() != total) {
    throw SizeError("comparator-circuit oracle expects " +
                    std::to_string(total) + " qubits");
  }
  std::vector<int> ancillas;
  for (int q = n_in; q < total; ++q) ancillas.push_back(q);
  if (state.mass_with_any_bit_set(ancillas) > 1e-10) {
    throw PreconditionError("oracle ancilla registers are not cleared");
  }

  // Field shifts inside the basis index: [x | work | y | o1 o2].
  const int o2_shift = 0;
  const int o1_shift = 1;
  const int y_shift = 2;
  const int work_shift = y_shift + n_out;
  const int x_shift = work_shift + n_out;
  const std::size_t out_mask = (std::size_t{1} << n_out) - 1;

  std::vector<std::size_t> f_int(spec_.f.table.size());
  for (std::size_t x = 0; x < f_int.size(); ++x) {
    f_int[x] = bits_to_index(spec_.f.table[x]);
  }

  // Load |y> with X gates.
  const SingleQubitGate x_gate = SingleQubitGate::pauli_x();
  auto load_y = [&]() {
    for (int j = 0; j < n_out; ++j) {
      if (spec_.y[j] == '1') state.apply_single(x_gate, n_in + n_out + j);
    }
  };
  // U_f: work ^= f(x). Self-inverse.
  auto apply_uf = [&]() {
    state.apply_basis_permutation([&](std::size_t i) {
      const std::size_t x = i >> x_shift;
      return i ^ (f_int[x] << work_shift);
    });
  };
  // Comparator: (o1,o2) ^= compare(work, y). Self-inverse.
  auto apply_qbsc = [&]() {
    state.apply_basis_permutation([&](std::size_t i) {
      const std::size_t work = (i >> work_shift) & out_mask;
      const std::size_t y_reg = (i >> y_shift) & out_mask;
      std::size_t flip = 0;
      if (work > y_reg) flip = std::size_t{1} << o1_shift;
      if (work < y_reg) flip = std::size_t{1} << o2_shift;
      return i ^ flip;
    });
  };

  load_y();
  apply_uf();
  apply_qbsc();
  // Equality code (0,0) marks f(x)=y; phase-flip exactly that subspace.
  state.apply_phase_flip_if([&](std::size_t i) {
    return ((i >> o2_shift) & 1) == 0 && ((i >> o1_shift) & 1) == 0;
  });
  apply_qbsc();
  apply_uf();
  load_y();
}

namespace {

void apply_hadamard_layer(StateVector& state) {
  const SingleQubitGate h = SingleQubitGate::hadamard();
  for (int q = 0; q < state.num_qubits(); ++q) state.apply_single(h, q);
}

}  // namespace

GroverResult grover_search(const OracleSpec& spec,
                           std::optional<int> iterations, RngSeed seed) {
  const Oracle oracle(spec);
  const std::size_t domain = std::size_t{1} << spec.f.n_in;
  const std::size_t marked = oracle.marked_count();

  int rounds = 0;
  if (iterations.has_value()) {
    if (*iterations < 0) throw ParameterError("iteration count is negative");
    rounds = *iterations;
  } else {
    if (marked == 0) {
      throw NoSolutionError("no input maps to the requested target");
    }
    rounds = static_cast<int>(std::floor(
        std::numbers::pi / 4.0 *
        std::sqrt(static_cast<double>(domain) / static_cast<double>(marked))));
  }

  StateVector state(spec.f.n_in);
  apply_hadamard_layer(state);
  for (int r = 0; r < rounds; ++r) {
    oracle.apply(state);
    state.invert_about_mean();
  }

  double success = 0.0;
  auto amps = state.amplitudes();
  for (std::size_t x = 0; x < domain; ++x) {
    if (oracle.is_marked(x)) success += std::norm(amps[x]);
  }

  std::vector<int> all(spec.f.n_in);
  for (int q = 0; q < spec.f.n_in; ++q) all[q] = q;
  GroverResult result;
  result.x = state.sample(all, seed);
  result.success_probability = success;
  result.iterations = rounds;
  result.marked_count = marked;
  return result;
}

InversionResult invert_function(const TruthTable& f, const std::string& y,
                                RngSeed seed, int max_retries) {
  if (max_retries < 1) throw ParameterError("max_retries must be at least 1");
  OracleSpec spec{f, y};
  spec.validate();
  bool has_preimage = false;
  for (const std::string& row : f.table) {
    if (row == y) {
      has_preimage = true;
      break;
    }
  }
  if (!has_preimage) {
    throw NoSolutionError("target \"" + y + "\" has no preimage");
  }
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    const GroverResult run =
        grover_search(spec, std::nullopt, derive_seed(seed, attempt));
    if (f(bits_to_index(run.x)) == y) {
      return {run.x, attempt + 1, run.success_probability};
    }
  }
  throw SearchFailureError("no verified preimage of \"" + y + "\" after " +
                           std::to_string(max_retries) + " searches");
}

PipelineRoundResult pipeline_round(const arbiter::StrategySet& strategies,
                                   const arbiter::PlayerData& data,
                                   const TruthTable& f, RngSeed seed,
                                   int max_retries) {
  f.validate();
  if (f.n_out != arbiter::kDataWidth) {
    throw SizeError("pipeline truth table must output data-bus width bits");
  }
  const arbiter::GameRoundResult round =
      arbiter::play_round(strategies, data, derive_seed(seed, 0));
  try {
    const InversionResult inv =
        invert_function(f, round.data_bus, derive_seed(seed, 1), max_retries);
    return {round.winner, round.data_bus, inv.x, inv.attempts};
  } catch (const NoSolutionError&) {
    throw NoSolutionError("winner " + std::to_string(round.winner) +
                          "'s data \"" + round.data_bus +
                          "\" has no preimage under f");
  }
}

}  // namespace qgame::grover
