#pragma once

#include <span>
#include <vector>

#include "vqs/subspace.hpp"

// The four constrained parameterizations of the angle schedule. Each maps a
// free parameter vector to a full schedule of p (alpha, beta) pairs:
//
//   P1  oracle fixed at pi, one free diffusion angle per step      (dim p)
//   P2  oracle fixed at pi, one shared diffusion angle             (dim 1)
//   P3  one shared angle for both oracle and diffusion             (dim 1)
//   P4  every oracle and diffusion angle free                      (dim 2p)
//
// Setting every angle to pi recovers the standard Grover schedule in all
// four families.

namespace vqs {

enum class ProblemKind { P1 = 1, P2 = 2, P3 = 3, P4 = 4 };

inline ProblemKind problem_from_int(int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("problem kind must be 1, 2, 3 or 4");
  return static_cast<ProblemKind>(k);
}

struct Interval {
  double lo;
  double hi;

  bool contains(double x) const { return x >= lo && x <= hi; }
  double clamp(double x) const { return x < lo ? lo : (x > hi ? hi : x); }
  double width() const { return hi - lo; }
};

using Bounds = std::vector<Interval>;

/// Free parameters together with their box bounds.
struct ParameterVector {
  std::vector<double> values;
  Bounds bounds;

  bool within_bounds() const {
    if (values.size() != bounds.size()) return false;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (!bounds[i].contains(values[i])) return false;
    return true;
  }
};

inline int dimension(ProblemKind problem, int p) {
  if (p < 1) throw std::invalid_argument("dimension: p must be >= 1");
  switch (problem) {
    case ProblemKind::P1: return p;
    case ProblemKind::P2: return 1;
    case ProblemKind::P3: return 1;
    case ProblemKind::P4: return 2 * p;
  }
  throw std::invalid_argument("dimension: bad problem kind");
}

inline AngleSchedule expand(ProblemKind problem, std::span<const double> params, int p) {
  if (static_cast<int>(params.size()) != dimension(problem, p))
    throw std::invalid_argument("expand: parameter count does not match problem dimension");
  AngleSchedule schedule;
  schedule.reserve(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    switch (problem) {
      case ProblemKind::P1: schedule.emplace_back(pi, params[i]); break;
      case ProblemKind::P2: schedule.emplace_back(pi, params[0]); break;
      case ProblemKind::P3: schedule.emplace_back(params[0], params[0]); break;
      case ProblemKind::P4: schedule.emplace_back(params[i], params[p + i]); break;
    }
  }
  return schedule;
}

inline double objective(ProblemKind problem, std::span<const double> params, SearchSize size,
                        int p) {
  return cost(expand(problem, params, p), size);
}

/// P2/P3 are restricted to [0, pi]; P1/P4 get the full period per
/// coordinate (the conjugation symmetry P(a) = P(2pi - a) makes one period
/// sufficient).
inline Bounds default_bounds(ProblemKind problem, int p) {
  const int dim = dimension(problem, p);
  const bool half = (problem == ProblemKind::P2 || problem == ProblemKind::P3);
  return Bounds(static_cast<std::size_t>(dim), Interval{0.0, half ? pi : two_pi});
}

/// The all-pi parameter point (standard Grover), feasible for every kind.
inline std::vector<double> grover_start(ProblemKind problem, int p) {
  return std::vector<double>(static_cast<std::size_t>(dimension(problem, p)), pi);
}

}  // namespace vqs
