#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <vector>

#include "vqs/circuits.hpp"

// Density-matrix simulation of compiled circuits under T1/T2 relaxation.
// Per noisy gate, each touched qubit passes through an amplitude-damping
// channel with gamma = 1 - exp(-d/T1) composed with pure dephasing of
// probability lambda = (1 - exp(-d/T_phi))/2, 1/T_phi = 1/T2 - 1/(2 T1).
// Noise attaches to RX gates (1-qubit duration) and to both qubits of each
// CZ (2-qubit duration); RZ is treated as a noiseless frame change. The
// evolution is deterministic: exact channel expectation values, no
// stochastic trajectories.

namespace vqs {

using DensityMatrix = Eigen::MatrixXcd;

struct NoiseModel {
  double t1;                   // seconds
  double t2;                   // seconds
  double duration_1q = 50e-9;  // RX gate time
  double duration_2q = 150e-9; // CZ gate time

  NoiseModel(double t1_s, double t2_s) : t1(t1_s), t2(t2_s) { validate(); }
  NoiseModel(double t1_s, double t2_s, double d1, double d2)
      : t1(t1_s), t2(t2_s), duration_1q(d1), duration_2q(d2) {
    validate();
  }

  void validate() const {
    if (!(t1 > 0.0) || !(t2 > 0.0)) throw std::invalid_argument("NoiseModel: T1, T2 must be > 0");
    if (t2 > 2.0 * t1 * (1.0 + 1e-12))
      throw std::invalid_argument("NoiseModel: physicality requires T2 <= 2*T1");
    if (!(duration_1q > 0.0) || !(duration_2q > 0.0))
      throw std::invalid_argument("NoiseModel: gate durations must be > 0");
  }
};

struct KrausSet {
  std::vector<Eigen::Matrix2cd> ops;

  /// Entrywise deviation of sum K^dag K from identity.
  double completeness_defect() const {
    Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
    for (const auto& k : ops) s += k.adjoint() * k;
    return (s - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  }
};

/// Single-qubit relaxation channel for one gate of the given duration.
inline KrausSet kraus_relaxation(const NoiseModel& noise, double duration) {
  noise.validate();
  if (duration < 0.0) throw std::invalid_argument("kraus_relaxation: duration must be >= 0");
  const double gamma = 1.0 - std::exp(-duration / noise.t1);
  const double inv_tphi = 1.0 / noise.t2 - 0.5 / noise.t1;  // >= 0 by physicality
  const double lambda = 0.5 * (1.0 - std::exp(-duration * std::max(inv_tphi, 0.0)));

  Eigen::Matrix2cd damp0, damp1;
  damp0 << 1.0, 0.0, 0.0, std::sqrt(1.0 - gamma);
  damp1 << 0.0, std::sqrt(gamma), 0.0, 0.0;

  KrausSet set;
  const double keep = std::sqrt(1.0 - lambda);
  const double flip = std::sqrt(lambda);
  set.ops.push_back(keep * damp0);
  if (gamma > 0.0) set.ops.push_back(keep * damp1);
  if (lambda > 0.0) {
    Eigen::Matrix2cd z = Eigen::Matrix2cd::Identity();
    z(1, 1) = -1.0;
    set.ops.push_back(flip * z * damp0);
    if (gamma > 0.0) set.ops.push_back(flip * z * damp1);
  }
  return set;
}

namespace detail {

inline void apply_unitary_1q(DensityMatrix& rho, const Eigen::Matrix2cd& m, int q) {
  const std::int64_t dim = rho.rows();
  const std::int64_t mask = std::int64_t{1} << q;
  // rho -> U rho U^dag, with U acting on bit q only
  for (std::int64_t row = 0; row < dim; ++row) {
    if (row & mask) continue;
    const std::int64_t row1 = row | mask;
    const Eigen::RowVectorXcd r0 = rho.row(row);
    const Eigen::RowVectorXcd r1 = rho.row(row1);
    rho.row(row) = m(0, 0) * r0 + m(0, 1) * r1;
    rho.row(row1) = m(1, 0) * r0 + m(1, 1) * r1;
  }
  const Eigen::Matrix2cd md = m.adjoint();
  for (std::int64_t col = 0; col < dim; ++col) {
    if (col & mask) continue;
    const std::int64_t col1 = col | mask;
    const Eigen::VectorXcd c0 = rho.col(col);
    const Eigen::VectorXcd c1 = rho.col(col1);
    rho.col(col) = c0 * md(0, 0) + c1 * md(1, 0);
    rho.col(col1) = c0 * md(0, 1) + c1 * md(1, 1);
  }
}

inline void apply_cz(DensityMatrix& rho, int q0, int q1) {
  const std::int64_t dim = rho.rows();
  auto both = [&](std::int64_t x) { return ((x >> q0) & 1) && ((x >> q1) & 1); };
  for (std::int64_t row = 0; row < dim; ++row)
    if (both(row)) rho.row(row) *= -1.0;
  for (std::int64_t col = 0; col < dim; ++col)
    if (both(col)) rho.col(col) *= -1.0;
}

inline void apply_channel(DensityMatrix& rho, const KrausSet& set, int q) {
  DensityMatrix out = DensityMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : set.ops) {
    DensityMatrix term = rho;
    apply_unitary_1q(term, k, q);  // K rho K^dag (works for non-unitary K too)
    out += term;
  }
  rho.swap(out);
}

}  // namespace detail

inline double hermiticity_defect(const DensityMatrix& rho) {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

inline double trace_defect(const DensityMatrix& rho) { return std::abs(rho.trace() - 1.0); }

inline double min_eigenvalue(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<DensityMatrix> es(0.5 * (rho + rho.adjoint()));
  return es.eigenvalues().minCoeff();
}

inline void check_density_invariants(const DensityMatrix& rho) {
  if (hermiticity_defect(rho) > 1e-10) throw invariant_error("density matrix not Hermitian");
  if (trace_defect(rho) > 1e-10) throw invariant_error("density matrix trace drifted");
  if (min_eigenvalue(rho) < -1e-9) throw invariant_error("density matrix not positive");
}

inline DensityMatrix density_from_state(const StateVector& sv) {
  Eigen::VectorXcd v(static_cast<std::int64_t>(sv.dim()));
  for (std::int64_t i = 0; i < v.size(); ++i) v(i) = sv.amps[static_cast<std::size_t>(i)];
  return v * v.adjoint();
}

/// Gate-by-gate evolution: unitary, then the relaxation channel on the
/// qubit(s) the gate touched. RZ gates carry no noise.
inline DensityMatrix simulate_noisy(const Circuit& circuit, const NoiseModel& noise,
                                    DensityMatrix rho) {
  if (circuit.n > 5) throw std::invalid_argument("simulate_noisy: n must be <= 5");
  if (rho.rows() != (std::int64_t{1} << circuit.n) || rho.rows() != rho.cols())
    throw std::invalid_argument("simulate_noisy: density matrix dimension mismatch");
  const KrausSet channel_1q = kraus_relaxation(noise, noise.duration_1q);
  const KrausSet channel_2q = kraus_relaxation(noise, noise.duration_2q);
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::RZ:
        detail::apply_unitary_1q(rho, gate_matrix_1q(g), g.q0);
        break;
      case GateKind::RX:
        detail::apply_unitary_1q(rho, gate_matrix_1q(g), g.q0);
        detail::apply_channel(rho, channel_1q, g.q0);
        break;
      case GateKind::CZ:
        detail::apply_cz(rho, g.q0, g.q1);
        detail::apply_channel(rho, channel_2q, g.q0);
        detail::apply_channel(rho, channel_2q, g.q1);
        break;
    }
  }
  check_density_invariants(rho);
  return rho;
}

struct SweepPoint {
  double t1;
  double t2;
  double probability;
  bool significant;  // noisy variational beats noiseless Grover optimum by > 5%
};

/// Runs the compiled schedule once per (T1, T2) pair, starting from the
/// uniform state. `significant` marks points where the retained advantage
/// over Grover's noiseless optimum exceeds 5% of that optimum.
inline std::vector<SweepPoint> t1t2_sweep(const SearchInstance& instance,
                                          const AngleSchedule& schedule,
                                          const std::vector<std::pair<double, double>>& grid,
                                          double duration_1q = 50e-9,
                                          double duration_2q = 150e-9) {
  const Circuit circuit = build_schedule_circuit(instance, schedule);
  const DensityMatrix rho0 = density_from_state(uniform_state(instance.n));
  const SearchSize size(instance.n);
  const double grover_opt = grover_probability(grover_pmax(size), size);
  const std::int64_t w = static_cast<std::int64_t>(instance.index());

  std::vector<SweepPoint> points;
  points.reserve(grid.size());
  for (const auto& [t1, t2] : grid) {
    const NoiseModel noise(t1, t2, duration_1q, duration_2q);
    const DensityMatrix rho = simulate_noisy(circuit, noise, rho0);
    const double prob = rho(w, w).real();
    points.push_back({t1, t2, prob, (prob - grover_opt) / grover_opt > 0.05});
  }
  return points;
}

}  // namespace vqs
