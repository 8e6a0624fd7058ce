#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

// Exact evolution of a marked-item search state inside the two-dimensional
// invariant subspace span{|u>, |w>}, where |w> is the marked basis state and
// |u> is the uniform superposition of the remaining N-1 states. Both the
// oracle phase V(alpha) = exp(i*alpha |w><w|) and the diffusion phase
// K(beta) = exp(i*beta |s><s|) preserve this subspace, so a length-p angle
// schedule reduces to a product of p complex 2x2 matrices. This is the fast
// objective kernel: evaluation is O(p), independent of the qubit count.

namespace vqs {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Thrown when a numerical invariant (norm, unitarity, trace, positivity)
/// is violated at runtime. The CLI maps this to exit code 3.
class invariant_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double reduce_angle(double x) {
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

/// Search-space size N = 2^n for n qubits.
struct SearchSize {
  int n;
  std::uint64_t N;

  explicit SearchSize(int qubits) : n(qubits), N(0) {
    if (qubits < 1 || qubits > 30)
      throw std::invalid_argument("SearchSize: qubit count must be in [1, 30]");
    N = std::uint64_t{1} << qubits;
  }

  double size() const { return static_cast<double>(N); }
};

/// One (oracle, diffusion) angle pair, stored reduced into [0, 2*pi).
struct StepAngles {
  double alpha;
  double beta;

  StepAngles(double a, double b) : alpha(reduce_angle(a)), beta(reduce_angle(b)) {}
};

using AngleSchedule = std::vector<StepAngles>;

/// Amplitudes (a_perp, a_target) on |u> and |w>. Unit norm is preserved by
/// every operation here; it is checked, not re-imposed.
struct SubspaceState {
  Complex a_perp;
  Complex a_target;

  double norm_sq() const { return std::norm(a_perp) + std::norm(a_target); }
};

/// 2x2 matrix of K(beta)V(alpha) restricted to span{|u>, |w>}.
struct TransferMatrix {
  Complex m11, m12, m21, m22;
  SearchSize size;

  SubspaceState apply(const SubspaceState& s) const {
    return {m11 * s.a_perp + m12 * s.a_target, m21 * s.a_perp + m22 * s.a_target};
  }

  /// Largest entrywise deviation of M^dag M from the identity.
  double unitarity_defect() const {
    const Complex c11 = std::conj(m11) * m11 + std::conj(m21) * m21;
    const Complex c12 = std::conj(m11) * m12 + std::conj(m21) * m22;
    const Complex c21 = std::conj(m12) * m11 + std::conj(m22) * m21;
    const Complex c22 = std::conj(m12) * m12 + std::conj(m22) * m22;
    double d = std::abs(c11 - 1.0);
    d = std::max(d, std::abs(c12));
    d = std::max(d, std::abs(c21));
    return std::max(d, std::abs(c22 - 1.0));
  }

  Complex det() const { return m11 * m22 - m12 * m21; }
};

/// Rotation angle of one standard Grover iterate in the invariant subspace:
/// cos(phi) = 1 - 2/N, sin(phi) = 2*sqrt(N-1)/N.
struct GroverAngle {
  double phi;
};

/// Uniform superposition |s> expressed in the subspace basis:
/// (sqrt((N-1)/N), 1/sqrt(N)) = (cos(phi/2), sin(phi/2)).
inline SubspaceState initial_state(SearchSize size) {
  const double N = size.size();
  return {Complex(std::sqrt((N - 1.0) / N), 0.0), Complex(1.0 / std::sqrt(N), 0.0)};
}

/// Matrix of K(beta)V(alpha) on span{|u>, |w>}, derived by expanding
/// V = 1 + a|w><w| and K = 1 + b|s><s| with a = e^{i alpha} - 1,
/// b = e^{i beta} - 1 and |s> = sqrt((N-1)/N)|u> + (1/sqrt(N))|w>.
/// The derivation is validated against the full statevector simulator.
inline TransferMatrix transfer_matrix(StepAngles angles, SearchSize size) {
  const double N = size.size();
  const Complex a = std::polar(1.0, angles.alpha) - 1.0;
  const Complex b = std::polar(1.0, angles.beta) - 1.0;
  const double r = std::sqrt(N - 1.0) / N;
  return {
      1.0 + b * ((N - 1.0) / N),  // <u| K V |u>
      (1.0 + a) * b * r,          // <u| K V |w>
      b * r,                      // <w| K V |u>
      (1.0 + a) * (1.0 + b / N),  // <w| K V |w>
      size,
  };
}

/// Applies step 1 first: M(step_p) ... M(step_1) |state>.
inline SubspaceState apply_schedule(SubspaceState state, const AngleSchedule& schedule,
                                    SearchSize size) {
  for (const StepAngles& step : schedule) state = transfer_matrix(step, size).apply(state);
  return state;
}

/// |<w|state>|^2 for a normalized state.
inline double success_probability(const SubspaceState& state) {
  return std::norm(state.a_target);
}

/// Variational cost <phi|P_perp|phi> = 1 - success probability of the
/// schedule applied to the uniform initial state.
inline double cost(const AngleSchedule& schedule, SearchSize size) {
  return 1.0 - success_probability(apply_schedule(initial_state(size), schedule, size));
}

inline GroverAngle grover_angle(SearchSize size) {
  if (size.N < 2) throw std::invalid_argument("grover_angle: requires N >= 2");
  const double N = size.size();
  // atan2 keeps both defining identities accurate to ~1 ulp.
  return {std::atan2(2.0 * std::sqrt(N - 1.0) / N, 1.0 - 2.0 / N)};
}

/// Closed-form success probability of standard Grover after p oracle calls,
/// P_p = sin^2((p + 1/2) phi). Exact for every N >= 2, not only N >> 1.
inline double grover_probability(std::int64_t p, SearchSize size) {
  if (p < 0) throw std::invalid_argument("grover_probability: p must be >= 0");
  const double s = std::sin((static_cast<double>(p) + 0.5) * grover_angle(size).phi);
  return s * s;
}

/// The integer oracle-call count maximizing grover_probability: whichever of
/// floor(pi sqrt(N)/4 - 1/2) and that plus one wins, ties toward smaller p.
inline int grover_pmax(SearchSize size) {
  const double N = size.size();
  const double guess = std::floor(pi * std::sqrt(N) / 4.0 - 0.5);
  const int base = guess < 0.0 ? 0 : static_cast<int>(guess);
  const double p_base = grover_probability(base, size);
  const double p_next = grover_probability(base + 1, size);
  return p_next > p_base ? base + 1 : base;
}

/// Same probability obtained by iterating the exact unitary rotation
/// [[c, -s], [s, c]], c = 1-2/N, s = 2 sqrt(N-1)/N, from (cos(phi/2),
/// sin(phi/2)). Agrees with grover_probability to ~1e-14; kept as the
/// recursion-side route of the closed-form/iteration cross-check.
inline double grover_prob_by_iteration(std::int64_t p, SearchSize size) {
  if (p < 0) throw std::invalid_argument("grover_prob_by_iteration: p must be >= 0");
  const double N = size.size();
  const double c = 1.0 - 2.0 / N;
  const double s = 2.0 * std::sqrt(N - 1.0) / N;
  double a = std::sqrt((N - 1.0) / N);  // cos(phi/2)
  double b = 1.0 / std::sqrt(N);        // sin(phi/2)
  for (std::int64_t i = 0; i < p; ++i) {
    const double a_next = c * a - s * b;
    b = s * a + c * b;
    a = a_next;
  }
  return b * b;
}

}  // namespace vqs
