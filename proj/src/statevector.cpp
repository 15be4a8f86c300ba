#include "qgame/statevector.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace qgame {

RngSeed derive_seed(RngSeed base, std::uint64_t stream) {
  // Splitmix64 finalizer over the stream-offset state.
  std::uint64_t z = base + (stream + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

bool SingleQubitGate::is_unitary(double tol) const {
  // U^dagger U == I, entrywise.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex e = std::conj(m[0][i]) * m[0][j] + std::conj(m[1][i]) * m[1][j];
      if (i == j) e -= 1.0;
      if (std::abs(e) > tol) return false;
    }
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!std::isfinite(m[i][j].real()) || !std::isfinite(m[i][j].imag())) {
        return false;
      }
    }
  }
  return true;
}

SingleQubitGate SingleQubitGate::adjoint() const {
  return {{{std::conj(m[0][0]), std::conj(m[1][0])},
           {std::conj(m[0][1]), std::conj(m[1][1])}}};
}

SingleQubitGate SingleQubitGate::identity() {
  return {{{1.0, 0.0}, {0.0, 1.0}}};
}

SingleQubitGate SingleQubitGate::hadamard() {
  const double h = 1.0 / std::numbers::sqrt2;
  return {{{h, h}, {h, -h}}};
}

SingleQubitGate SingleQubitGate::pauli_x() {
  return {{{0.0, 1.0}, {1.0, 0.0}}};
}

std::string index_to_bits(std::size_t index, int n_bits) {
  std::string out(static_cast<std::size_t>(n_bits), '0');
  for (int b = 0; b < n_bits; ++b) {
    if (index & (std::size_t{1} << (n_bits - 1 - b))) out[b] = '1';
  }
  return out;
}

std::size_t bits_to_index(std::string_view bits) {
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw DataError("bitstring contains a character other than 0/1");
    }
    index = (index << 1) | static_cast<std::size_t>(c == '1');
  }
  return index;
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw SizeError("qubit count must be in [1, 16], got " +
                    std::to_string(n_qubits));
  }
  amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Complex& a : amps_) total += std::norm(a);
  return total;
}

void StateVector::check_qubit(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw SizeError("qubit index " + std::to_string(qubit) +
                    " out of range for " + std::to_string(n_qubits_) +
                    " qubits");
  }
}

void StateVector::check_distinct(std::span<const int> qubits) const {
  if (qubits.empty()) throw IndexError("qubit subset is empty");
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    check_qubit(qubits[i]);
    for (std::size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) {
        throw IndexError("duplicate qubit index " +
                         std::to_string(qubits[i]));
      }
    }
  }
}

void StateVector::apply_single(const SingleQubitGate& gate, int qubit) {
  check_qubit(qubit);
  if (!gate.is_unitary()) {
    throw GateError("single-qubit gate is not unitary within 1e-10");
  }
  const std::size_t mask = qubit_mask(qubit);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) continue;
    const Complex a0 = amps_[i];
    const Complex a1 = amps_[i | mask];
    amps_[i] = gate.m[0][0] * a0 + gate.m[0][1] * a1;
    amps_[i | mask] = gate.m[1][0] * a0 + gate.m[1][1] * a1;
  }
}

void StateVector::apply_cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) {
    throw IndexError("cnot control and target must differ");
  }
  const std::size_t cmask = qubit_mask(control);
  const std::size_t tmask = qubit_mask(target);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) {
      std::swap(amps_[i], amps_[i | tmask]);
    }
  }
}

namespace {

void apply_xx_rotation(std::vector<Complex>& amps, std::size_t m1,
                       std::size_t m2, double c, Complex is) {
  // cos*I + i*sin*(X(x)X) on the qubit pair with masks m1, m2.
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & m1) || (i & m2)) continue;
    const std::size_t i00 = i;
    const std::size_t i01 = i | m2;
    const std::size_t i10 = i | m1;
    const std::size_t i11 = i | m1 | m2;
    const Complex a00 = amps[i00], a01 = amps[i01];
    const Complex a10 = amps[i10], a11 = amps[i11];
    amps[i00] = c * a00 + is * a11;
    amps[i11] = c * a11 + is * a00;
    amps[i01] = c * a01 + is * a10;
    amps[i10] = c * a10 + is * a01;
  }
}

}  // namespace

void StateVector::apply_entangler(int q1, int q2, double gamma) {
  check_qubit(q1);
  check_qubit(q2);
  if (q1 == q2) throw IndexError("entangler qubits must differ");
  if (!(gamma > 0.0 && gamma < std::numbers::pi)) {
    throw ParameterError("entangler angle must lie in (0, pi)");
  }
  apply_xx_rotation(amps_, qubit_mask(q1), qubit_mask(q2),
                    std::cos(gamma / 2.0), Complex{0.0, std::sin(gamma / 2.0)});
}

void StateVector::apply_entangler_adjoint(int q1, int q2, double gamma) {
  check_qubit(q1);
  check_qubit(q2);
  if (q1 == q2) throw IndexError("entangler qubits must differ");
  if (!(gamma > 0.0 && gamma < std::numbers::pi)) {
    throw ParameterError("entangler angle must lie in (0, pi)");
  }
  apply_xx_rotation(amps_, qubit_mask(q1), qubit_mask(q2),
                    std::cos(gamma / 2.0),
                    Complex{0.0, -std::sin(gamma / 2.0)});
}

std::vector<double> StateVector::probabilities(
    std::span<const int> qubits) const {
  check_distinct(qubits);
  std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    const double p = std::norm(amps_[i]);
    if (p == 0.0) continue;
    std::size_t out = 0;
    for (int q : qubits) out = (out << 1) | static_cast<std::size_t>(bit(i, q));
    probs[out] += p;
  }
  return probs;
}

std::string StateVector::sample(std::span<const int> qubits,
                                RngSeed seed) const {
  const std::vector<double> probs = probabilities(qubits);
  std::mt19937_64 rng(seed);
  const double u = uniform_from_bits(rng());
  double cumulative = 0.0;
  std::size_t chosen = 0;
  bool found = false;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    cumulative += probs[i];
    if (u < cumulative) {
      chosen = i;
      found = true;
      break;
    }
  }
  if (!found) {
    // u landed past the accumulated mass (rounding); take the last
    // outcome that carries probability.
    for (std::size_t i = probs.size(); i-- > 0;) {
      if (probs[i] > 0.0) {
        chosen = i;
        break;
      }
    }
  }
  return index_to_bits(chosen, static_cast<int>(qubits.size()));
}

double StateVector::mass_with_any_bit_set(std::span<const int> qubits) const {
  check_distinct(qubits);
  std::size_t mask = 0;
  for (int q : qubits) mask |= qubit_mask(q);
  double total = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) total += std::norm(amps_[i]);
  }
  return total;
}

void StateVector::invert_about_mean() {
  Complex sum{0.0, 0.0};
  for (const Complex& a : amps_) sum += a;
  const Complex mean = sum / static_cast<double>(amps_.size());
  for (Complex& a : amps_) a = 2.0 * mean - a;
}

void StateVector::overwrite_amplitudes(std::vector<Complex> amps) {
  if (amps.size() != amps_.size()) {
    throw SizeError("replacement amplitude vector has the wrong dimension");
  }
  double total = 0.0;
  for (const Complex& a : amps) total += std::norm(a);
  if (std::abs(total - 1.0) > 1e-10) {
    throw PreconditionError("replacement amplitudes are not normalized");
  }
  amps_ = std::move(amps);
}

}  // namespace qgame
