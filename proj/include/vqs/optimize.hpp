#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <utility>

#include "vqs/problems.hpp"

// Derivative-free optimization: a bounded Nelder-Mead local minimizer, a
// basin-hopping outer loop (uniform perturbation + local descent + Metropolis
// acceptance), and an exhaustive grid scanner used as the validation oracle
// in one and two dimensions. Everything is deterministic for a fixed seed;
// random numbers come from a fixed mt19937_64-to-double mapping rather than
// std::uniform_real_distribution so traces are reproducible bit-for-bit.

namespace vqs {

using Objective = std::function<double(std::span<const double>)>;

struct BasinHoppingConfig {
  int hop_count = 100;
  double perturbation_scale = 0.5;  // radians, per coordinate
  double temperature = 0.01;        // Metropolis parameter
  std::uint64_t rng_seed = 0;
  Bounds bounds;
  // Optional start; defaults to the box midpoint. Callers optimizing a
  // search problem seed this with the all-pi Grover point so the result can
  // never fall below the Grover baseline.
  std::optional<std::vector<double>> start;

  void validate() const {
    if (hop_count < 1) throw std::invalid_argument("basin_hop: hop_count must be >= 1");
    if (!(perturbation_scale > 0.0))
      throw std::invalid_argument("basin_hop: perturbation_scale must be > 0");
    if (temperature < 0.0) throw std::invalid_argument("basin_hop: temperature must be >= 0");
    if (bounds.empty()) throw std::invalid_argument("basin_hop: bounds must be non-empty");
    if (start && start->size() != bounds.size())
      throw std::invalid_argument("basin_hop: start dimension mismatch");
  }
};

struct OptimizationResult {
  ParameterVector best_params;
  double best_cost = 0.0;
  double success_probability = 0.0;  // 1 - best_cost
  long evaluations = 0;
  std::vector<std::pair<int, double>> trace;  // (hop index, accepted cost)
};

struct LocalResult {
  std::vector<double> x;
  double cost = 0.0;
  long evaluations = 0;
};

namespace detail {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline void clamp_to(std::vector<double>& x, const Bounds& bounds) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = bounds[i].clamp(x[i]);
}

}  // namespace detail

/// Bounded Nelder-Mead descent. Out-of-bounds proposals are clamped to the
/// box. Stops when the simplex diameter falls below 1e-8 or after
/// 500 * dimension evaluations; the returned cost never exceeds the cost at
/// the start point (the start is a simplex vertex and the best vertex only
/// improves).
inline LocalResult local_minimize(const Objective& objective, std::span<const double> start,
                                  const Bounds& bounds) {
  const std::size_t d = bounds.size();
  if (start.size() != d) throw std::invalid_argument("local_minimize: dimension mismatch");

  long evals = 0;
  const long max_evals = 500 * static_cast<long>(d);
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return objective(x);
  };

  std::vector<std::vector<double>> simplex;
  simplex.reserve(d + 1);
  std::vector<double> x0(start.begin(), start.end());
  detail::clamp_to(x0, bounds);
  simplex.push_back(x0);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<double> xi = x0;
    double h = 0.1 * bounds[i].width();
    if (h == 0.0) h = 1e-4;
    xi[i] = (xi[i] + h <= bounds[i].hi) ? xi[i] + h : xi[i] - h;
    detail::clamp_to(xi, bounds);
    simplex.push_back(xi);
  }
  std::vector<double> f(d + 1);
  for (std::size_t i = 0; i <= d; ++i) f[i] = eval(simplex[i]);

  auto order = [&] {
    std::vector<std::size_t> idx(d + 1);
    for (std::size_t i = 0; i <= d; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
    std::vector<std::vector<double>> s2(d + 1);
    std::vector<double> f2(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      s2[i] = simplex[idx[i]];
      f2[i] = f[idx[i]];
    }
    simplex.swap(s2);
    f.swap(f2);
  };
  auto diameter = [&] {
    double dia = 0.0;
    for (std::size_t i = 1; i <= d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        dia = std::max(dia, std::abs(simplex[i][j] - simplex[0][j]));
    return dia;
  };

  while (true) {
    order();
    if (diameter() < 1e-8 || evals >= max_evals) break;

    std::vector<double> centroid(d, 0.0);  // of all vertices but the worst
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) centroid[j] += simplex[i][j] / static_cast<double>(d);
    const std::vector<double>& worst = simplex[d];

    auto blend = [&](double t) {
      std::vector<double> x(d);
      for (std::size_t j = 0; j < d; ++j) x[j] = centroid[j] + t * (centroid[j] - worst[j]);
      detail::clamp_to(x, bounds);
      return x;
    };

    std::vector<double> xr = blend(1.0);
    const double fr = eval(xr);
    if (fr < f[0]) {
      std::vector<double> xe = blend(2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[d] = std::move(xe);
        f[d] = fe;
      } else {
        simplex[d] = std::move(xr);
        f[d] = fr;
      }
    } else if (fr < f[d - 1]) {
      simplex[d] = std::move(xr);
      f[d] = fr;
    } else {
      const bool outside = fr < f[d];
      std::vector<double> xc = blend(outside ? 0.5 : -0.5);
      const double fc = eval(xc);
      if (fc < (outside ? fr : f[d])) {
        simplex[d] = std::move(xc);
        f[d] = fc;
      } else {
        // shrink toward the best vertex
        for (std::size_t i = 1; i <= d; ++i) {
          for (std::size_t j = 0; j < d; ++j)
            simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
          f[i] = eval(simplex[i]);
        }
      }
    }
  }
  return {simplex[0], f[0], evals};
}

/// Basin hopping around the best-known point: perturb, descend, accept by
/// strict decrease or Metropolis. The trace records (hop, accepted cost)
/// entries; hop 0 is the descent from the start point.
inline OptimizationResult basin_hop(const Objective& objective, const BasinHoppingConfig& config) {
  config.validate();
  const std::size_t d = config.bounds.size();

  std::vector<double> start;
  if (config.start) {
    start = *config.start;
  } else {
    start.resize(d);
    for (std::size_t i = 0; i < d; ++i)
      start[i] = 0.5 * (config.bounds[i].lo + config.bounds[i].hi);
  }
  detail::clamp_to(start, config.bounds);

  OptimizationResult result;
  LocalResult first = local_minimize(objective, start, config.bounds);
  result.evaluations = first.evaluations;
  std::vector<double> best_x = first.x;
  double best_cost = first.cost;
  std::vector<double> cur_x = first.x;
  double cur_cost = first.cost;
  result.trace.emplace_back(0, cur_cost);

  std::mt19937_64 rng(config.rng_seed);
  auto metropolis = [&](double delta) {
    if (delta <= 0.0) return 1.0;
    if (config.temperature == 0.0) return 0.0;
    return std::exp(-delta / config.temperature);
  };

  for (int hop = 1; hop <= config.hop_count; ++hop) {
    std::vector<double> proposal(d);
    for (std::size_t i = 0; i < d; ++i) {
      const double step = (2.0 * detail::uniform01(rng) - 1.0) * config.perturbation_scale;
      proposal[i] = config.bounds[i].clamp(best_x[i] + step);
    }
    LocalResult local = local_minimize(objective, proposal, config.bounds);
    result.evaluations += local.evaluations;

    const double delta = local.cost - cur_cost;
    const bool accept = delta < 0.0 || detail::uniform01(rng) < metropolis(delta);
    if (accept) {
      cur_x = local.x;
      cur_cost = local.cost;
      result.trace.emplace_back(hop, cur_cost);
      if (cur_cost < best_cost) {
        best_cost = cur_cost;
        best_x = cur_x;
      }
    }
  }

  result.best_params = {best_x, config.bounds};
  result.best_cost = best_cost;
  result.success_probability = 1.0 - best_cost;
  return result;
}

struct GridScan {
  std::vector<std::pair<std::vector<double>, double>> points;  // axis-major order
  std::size_t argmin = 0;                                      // lowest index on ties
};

/// Exhaustive evaluation on the inclusive uniform grid (resolution points
/// per axis, endpoints included); dimension must be 1 or 2. Axis 0 is the
/// slow (outer) index.
inline GridScan grid_scan(const Objective& objective, const Bounds& bounds, int resolution) {
  if (bounds.empty() || bounds.size() > 2)
    throw std::invalid_argument("grid_scan: dimension must be 1 or 2");
  if (resolution < 2) throw std::invalid_argument("grid_scan: resolution must be >= 2");

  auto axis_value = [&](std::size_t axis, int i) {
    return bounds[axis].lo + bounds[axis].width() * static_cast<double>(i) /
                                 static_cast<double>(resolution - 1);
  };

  GridScan scan;
  double best = 0.0;
  if (bounds.size() == 1) {
    scan.points.reserve(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
      std::vector<double> x{axis_value(0, i)};
      const double c = objective(x);
      if (scan.points.empty() || c < best) {
        best = c;
        scan.argmin = scan.points.size();
      }
      scan.points.emplace_back(std::move(x), c);
    }
  } else {
    scan.points.reserve(static_cast<std::size_t>(resolution) * resolution);
    for (int i0 = 0; i0 < resolution; ++i0) {
      for (int i1 = 0; i1 < resolution; ++i1) {
        std::vector<double> x{axis_value(0, i0), axis_value(1, i1)};
        const double c = objective(x);
        if (scan.points.empty() || c < best) {
          best = c;
          scan.argmin = scan.points.size();
        }
        scan.points.emplace_back(std::move(x), c);
      }
    }
  }
  return scan;
}

}  // namespace vqs
