#pragma once

#include <Eigen/Dense>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "vqs/statevector.hpp"

// Compilation of the oracle and diffusion phase operators into the hardware
// gate set {RZ(theta), RX(+-pi/2), CZ}, and a dense-unitary backend to verify
// the compiled circuits against their ideal targets.
//
// Wire convention: circuit qubit q carries bit q of the basis-state index
// (little-endian), so for a big-endian marked string w_1...w_n the bit w_i
// lives on qubit n-i. SearchInstance::index() performs that mapping.
//
// The multi-controlled phase diag(1,...,1,e^{i theta}) is synthesized as a
// parity network: the phase monomial theta * x_1...x_m expands into 2^m - 1
// parity terms, each realized as a CNOT-chain-conjugated RZ, with the chains
// walked in Gray-code order so one CNOT separates consecutive rotations. This is
// ancilla-free and exact.

namespace vqs {

enum class GateKind { RZ, RX, CZ };

struct Gate {
  GateKind kind;
  int q0;            // RZ/RX target, or first CZ qubit
  int q1 = -1;       // second CZ qubit
  double theta = 0;  // RZ angle; RX angle restricted to +-pi/2

  static Gate rz(int q, double theta) { return {GateKind::RZ, q, -1, theta}; }
  static Gate rx(int q, double theta) {
    if (std::abs(std::abs(theta) - pi / 2) > 1e-12)
      throw std::invalid_argument("Gate::rx: angle restricted to +-pi/2");
    return {GateKind::RX, q, -1, theta};
  }
  static Gate cz(int a, int b) {
    if (a == b) throw std::invalid_argument("Gate::cz: qubits must be distinct");
    return {GateKind::CZ, std::min(a, b), std::max(a, b), 0.0};
  }
};

struct Circuit {
  int n = 0;
  std::vector<Gate> gates;

  explicit Circuit(int qubits) : n(qubits) {
    if (qubits < 1) throw std::invalid_argument("Circuit: need at least one qubit");
  }

  void add(Gate g) {
    const int hi = std::max(g.q0, g.q1);
    if (g.q0 < 0 || hi >= n) throw std::invalid_argument("Circuit::add: qubit out of range");
    gates.push_back(g);
  }

  void append(const Circuit& other) {
    if (other.n > n) throw std::invalid_argument("Circuit::append: width mismatch");
    for (const Gate& g : other.gates) gates.push_back(g);
  }

  std::size_t size() const { return gates.size(); }
};

namespace detail {

inline void emit_h(Circuit& c, int q) {  // H up to global phase -i
  c.add(Gate::rz(q, pi / 2));
  c.add(Gate::rx(q, pi / 2));
  c.add(Gate::rz(q, pi / 2));
}

inline void emit_x(Circuit& c, int q) {  // X up to global phase -i
  c.add(Gate::rx(q, pi / 2));
  c.add(Gate::rx(q, pi / 2));
}

inline void emit_cnot(Circuit& c, int control, int target) {
  emit_h(c, target);
  c.add(Gate::cz(control, target));
  emit_h(c, target);
}

/// Parity-network phase diag with e^{i theta} on the all-ones state of
/// `qubits`, up to a global phase.
inline void emit_mcphase(Circuit& c, std::vector<int> qubits, double theta) {
  const int m = static_cast<int>(qubits.size());
  auto lam = [&](int subset_size) {
    const double sign = (subset_size % 2 == 0) ? -1.0 : 1.0;
    return sign * theta / static_cast<double>(std::uint64_t{1} << (m - 1));
  };
  while (!qubits.empty()) {
    // all parity subsets containing qubits.back(), Gray walk over the rest
    const int t = qubits.back();
    const int k = static_cast<int>(qubits.size()) - 1;
    c.add(Gate::rz(t, lam(1)));
    std::uint64_t prev = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
      const std::uint64_t gray = i ^ (i >> 1);
      int j = 0;
      for (std::uint64_t diff = prev ^ gray; diff > 1; diff >>= 1) ++j;
      emit_cnot(c, qubits[static_cast<std::size_t>(j)], t);
      c.add(Gate::rz(t, lam(static_cast<int>(std::popcount(gray)) + 1)));
      prev = gray;
    }
    while (prev != 0) {  // unwind the parity accumulator
      int j = 0;
      for (std::uint64_t low = prev & (~prev + 1); low > 1; low >>= 1) ++j;
      emit_cnot(c, qubits[static_cast<std::size_t>(j)], t);
      prev &= prev - 1;
    }
    qubits.pop_back();
  }
}

}  // namespace detail

/// Phase gate diag(1,...,1,e^{i theta}) on k controls plus one target
/// (k+1 qubits), ancilla-free, over {RZ, RX(+-pi/2), CZ}. theta = 0 (mod
/// 2 pi) yields an empty fragment.
inline Circuit decompose_mcphase(int controls, double theta) {
  if (controls < 1 || controls > 4)
    throw std::invalid_argument("decompose_mcphase: control count must be in [1, 4]");
  const int m = controls + 1;
  Circuit c(m);
  const double reduced = reduce_angle(theta);
  if (reduced == 0.0) return c;
  std::vector<int> qubits(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) qubits[static_cast<std::size_t>(i)] = i;
  detail::emit_mcphase(c, std::move(qubits), reduced);
  return c;
}

/// V(alpha) = 1 + (e^{i alpha}-1)|w><w| as X-conjugation (on the zero bits
/// of w) around an (n-1)-controlled phase.
inline Circuit build_oracle_circuit(std::uint64_t omega_index, double alpha, int n) {
  if (n < 2 || n > 5) throw std::invalid_argument("build_oracle_circuit: n must be in [2, 5]");
  if (omega_index >= (std::uint64_t{1} << n))
    throw std::invalid_argument("build_oracle_circuit: omega index out of range");
  Circuit c(n);
  auto conjugation = [&] {
    for (int q = 0; q < n; ++q)
      if (((omega_index >> q) & 1) == 0) detail::emit_x(c, q);
  };
  conjugation();
  c.append(decompose_mcphase(n - 1, alpha));
  conjugation();
  return c;
}

/// K(beta) = 1 + (e^{i beta}-1)|s><s| via H,X conjugation around the
/// (n-1)-controlled phase.
inline Circuit build_diffusion_circuit(double beta, int n) {
  if (n < 2 || n > 5) throw std::invalid_argument("build_diffusion_circuit: n must be in [2, 5]");
  Circuit c(n);
  for (int q = 0; q < n; ++q) {
    detail::emit_h(c, q);
    detail::emit_x(c, q);
  }
  c.append(decompose_mcphase(n - 1, beta));
  for (int q = 0; q < n; ++q) {
    detail::emit_x(c, q);
    detail::emit_h(c, q);
  }
  return c;
}

/// Full compiled sequence for a schedule: oracle then diffusion per step,
/// acting on the uniform initial state prepared separately.
inline Circuit build_schedule_circuit(const SearchInstance& instance,
                                      const AngleSchedule& schedule) {
  Circuit c(instance.n);
  for (const StepAngles& step : schedule) {
    c.append(build_oracle_circuit(instance.index(), step.alpha, instance.n));
    c.append(build_diffusion_circuit(step.beta, instance.n));
  }
  return c;
}

inline Eigen::Matrix2cd gate_matrix_1q(const Gate& g) {
  Eigen::Matrix2cd m;
  if (g.kind == GateKind::RZ) {
    m << std::polar(1.0, -0.5 * g.theta), 0.0, 0.0, std::polar(1.0, 0.5 * g.theta);
  } else {
    const double c = std::cos(0.5 * g.theta);
    const Complex s(0.0, -std::sin(0.5 * g.theta));
    m << c, s, s, c;
  }
  return m;
}

/// Dense unitary of the whole circuit (n <= 6), gates applied in order.
inline Eigen::MatrixXcd circuit_unitary(const Circuit& circuit) {
  if (circuit.n > 6) throw std::invalid_argument("circuit_unitary: n must be <= 6");
  const std::int64_t dim = std::int64_t{1} << circuit.n;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::CZ) {
      // diagonal: negate rows where both control bits are set
      for (std::int64_t row = 0; row < dim; ++row)
        if (((row >> g.q0) & 1) && ((row >> g.q1) & 1)) u.row(row) *= -1.0;
    } else {
      const Eigen::Matrix2cd m = gate_matrix_1q(g);
      const std::int64_t mask = std::int64_t{1} << g.q0;
      for (std::int64_t row = 0; row < dim; ++row) {
        if (row & mask) continue;
        const std::int64_t row1 = row | mask;
        const Eigen::RowVectorXcd r0 = u.row(row);
        const Eigen::RowVectorXcd r1 = u.row(row1);
        u.row(row) = m(0, 0) * r0 + m(0, 1) * r1;
        u.row(row1) = m(1, 0) * r0 + m(1, 1) * r1;
      }
    }
  }
  return u;
}

/// Frobenius distance between u and v after aligning the global phase; an
/// upper bound on the operator-norm distance.
inline double phase_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  const Complex tr = (u.adjoint() * v).trace();
  const Complex phase = std::abs(tr) > 1e-12 ? tr / std::abs(tr) : Complex(1.0, 0.0);
  return (u * phase - v).norm();
}

/// Ideal dense targets for the compiled circuits.
inline Eigen::MatrixXcd ideal_oracle_unitary(std::uint64_t omega_index, double alpha, int n) {
  const std::int64_t dim = std::int64_t{1} << n;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  u(static_cast<std::int64_t>(omega_index), static_cast<std::int64_t>(omega_index)) =
      std::polar(1.0, alpha);
  return u;
}

inline Eigen::MatrixXcd ideal_diffusion_unitary(double beta, int n) {
  const std::int64_t dim = std::int64_t{1} << n;
  const Complex b = std::polar(1.0, beta) - 1.0;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Constant(dim, dim, b / static_cast<double>(dim));
  u += Eigen::MatrixXcd::Identity(dim, dim);
  return u;
}

/// One gate per line: `RZ q<i> <theta>` / `RX q<i> <+-pi/2>` / `CZ q<i> q<j>`,
/// little-endian qubit labels.
inline std::string circuit_to_text(const Circuit& circuit) {
  std::ostringstream out;
  out.precision(12);
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::RZ: out << "RZ q" << g.q0 << ' ' << g.theta << '\n'; break;
      case GateKind::RX: out << "RX q" << g.q0 << ' ' << (g.theta > 0 ? "pi/2" : "-pi/2") << '\n'; break;
      case GateKind::CZ: out << "CZ q" << g.q0 << " q" << g.q1 << '\n'; break;
    }
  }
  return out.str();
}

}  // namespace vqs
