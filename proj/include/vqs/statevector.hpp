#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vqs/subspace.hpp"

// Full 2^n statevector simulation of the two phase operators. This is the
// independent reference for the subspace kernel: it never touches the 2x2
// transfer matrix, only the operator definitions themselves.
//
// Index convention: a marked bitstring w = w_1 w_2 ... w_n is read
// big-endian, w_1 most significant, so "101" on three qubits is index 5.

namespace vqs {

struct StateVector {
  int n = 0;
  std::vector<Complex> amps;

  std::uint64_t dim() const { return amps.size(); }

  double norm_sq() const {
    double s = 0.0;
    for (const Complex& a : amps) s += std::norm(a);
    return s;
  }
};

/// A search problem instance: qubit count plus the marked bitstring.
struct SearchInstance {
  int n;
  std::string omega;  // exactly n characters, each '0' or '1'

  SearchInstance(int qubits, std::string marked) : n(qubits), omega(std::move(marked)) {
    if (n < 1 || n > 24)
      throw std::invalid_argument("SearchInstance: qubit count must be in [1, 24]");
    if (omega.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("SearchInstance: omega must have exactly n bits");
    for (char c : omega)
      if (c != '0' && c != '1')
        throw std::invalid_argument("SearchInstance: omega must be a 0/1 bitstring");
  }

  /// Big-endian value of the bitstring.
  std::uint64_t index() const {
    std::uint64_t x = 0;
    for (char c : omega) x = (x << 1) | static_cast<std::uint64_t>(c - '0');
    return x;
  }
};

inline StateVector uniform_state(int n) {
  if (n < 1 || n > 24) throw std::invalid_argument("uniform_state: n must be in [1, 24]");
  const std::uint64_t dim = std::uint64_t{1} << n;
  StateVector sv;
  sv.n = n;
  sv.amps.assign(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  return sv;
}

/// V(alpha) = 1 + (e^{i alpha} - 1)|w><w|: multiplies the single marked
/// amplitude by e^{i alpha}.
inline StateVector apply_oracle_phase(StateVector state, std::uint64_t omega_index,
                                      double alpha) {
  if (omega_index >= state.dim())
    throw std::invalid_argument("apply_oracle_phase: omega index out of range");
  state.amps[omega_index] *= std::polar(1.0, alpha);
  return state;
}

/// K(beta) = 1 + (e^{i beta} - 1)|s><s| as a rank-1 update in O(N).
inline StateVector apply_diffusion_phase(StateVector state, double beta) {
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(state.dim()));
  Complex overlap(0.0, 0.0);  // <s|state>
  for (const Complex& a : state.amps) overlap += a;
  overlap *= inv_sqrt_n;
  const Complex shift = (std::polar(1.0, beta) - 1.0) * overlap * inv_sqrt_n;
  for (Complex& a : state.amps) a += shift;
  return state;
}

/// |<w| K(b_p)V(a_p) ... K(b_1)V(a_1) |s>|^2.
inline double run_sequence(const SearchInstance& instance, const AngleSchedule& schedule) {
  StateVector sv = uniform_state(instance.n);
  const std::uint64_t w = instance.index();
  for (const StepAngles& step : schedule) {
    sv = apply_oracle_phase(std::move(sv), w, step.alpha);
    sv = apply_diffusion_phase(std::move(sv), step.beta);
  }
  if (std::abs(sv.norm_sq() - 1.0) > 1e-10)
    throw invariant_error("run_sequence: statevector norm drifted");
  return std::norm(sv.amps[w]);
}

}  // namespace vqs
