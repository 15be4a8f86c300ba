#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgame/errors.hpp"

namespace qgame {

using Complex = std::complex<double>;
using RngSeed = std::uint64_t;

/// Derives the seed of sub-stream `stream` from a base seed. Splitmix64
/// finalizer; distinct streams give statistically independent sequences.
RngSeed derive_seed(RngSeed base, std::uint64_t stream);

/// Deterministic uniform double in [0,1) from a raw 64-bit RNG output.
inline double uniform_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

struct SingleQubitGate {
  Complex m[2][2];

  bool is_unitary(double tol = 1e-10) const;
  SingleQubitGate adjoint() const;

  static SingleQubitGate identity();
  static SingleQubitGate hadamard();
  static SingleQubitGate pauli_x();
};

std::string index_to_bits(std::size_t index, int n_bits);
std::size_t bits_to_index(std::string_view bits);

/// Dense statevector over n qubits (n <= 16).
///
/// Qubit 0 is the leftmost symbol in ket notation and the most significant
/// bit of the amplitude index: |s0 s1 ... s_{n-1}> lives at index
/// sum_q s_q << (n-1-q).
class StateVector {
 public:
  static constexpr int kMaxQubits = 16;

  /// Initializes |0...0>.
  explicit StateVector(int n_qubits);

  int num_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex amplitude(std::size_t index) const { return amps_.at(index); }
  double norm_squared() const;

  std::size_t qubit_mask(int qubit) const {
    return std::size_t{1} << (n_qubits_ - 1 - qubit);
  }
  bool bit(std::size_t index, int qubit) const {
    return (index & qubit_mask(qubit)) != 0;
  }

  void apply_single(const SingleQubitGate& gate, int qubit);
  void apply_cnot(int control, int target);

  /// Two-qubit entangler cos(g/2)*I + i*sin(g/2)*(X(x)X), g in (0,pi).
  void apply_entangler(int q1, int q2, double gamma);
  void apply_entangler_adjoint(int q1, int q2, double gamma);

  /// Born-rule marginal over the listed qubits. The first listed qubit is
  /// the leftmost character of the outcome string (most significant bit of
  /// the result index). Entries sum to 1.
  std::vector<double> probabilities(std::span<const int> qubits) const;

  /// Draws one outcome bitstring from probabilities(qubits). Same seed,
  /// same state, same qubits => same string.
  std::string sample(std::span<const int> qubits, RngSeed seed) const;

  /// Probability mass on basis states where at least one listed qubit is 1.
  double mass_with_any_bit_set(std::span<const int> qubits) const;

  /// Remaps amplitudes along a bijection of basis indices:
  /// new[to_new_index(i)] = old[i]. Caller guarantees bijectivity.
  template <typename F>
  void apply_basis_permutation(F&& to_new_index) {
    std::vector<Complex> next(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      next[to_new_index(i)] = amps_[i];
    }
    amps_ = std::move(next);
  }

  /// Negates the amplitude of every basis state selected by the predicate.
  template <typename Pred>
  void apply_phase_flip_if(Pred&& flip) {
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if (flip(i)) amps_[i] = -amps_[i];
    }
  }

  /// Inversion about the mean amplitude (the diffusion operator 2|s><s|-I
  /// for s the uniform superposition).
  void invert_about_mean();

  /// Replaces the amplitude vector. The replacement must have the same
  /// dimension and unit norm within 1e-10.
  void overwrite_amplitudes(std::vector<Complex> amps);

 private:
  void check_qubit(int qubit) const;
  void check_distinct(std::span<const int> qubits) const;

  int n_qubits_;
  std::vector<Complex> amps_;
};

}  // namespace qgame
