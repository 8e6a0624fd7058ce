#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vqs/noise.hpp"
#include "vqs/optimize.hpp"

// Experiment runners behind the CLI subcommands, plus CSV/JSON emission.
// Every runner is deterministic for a fixed seed, and CSV output is
// byte-stable: floats are printed with 12 significant digits via %.12g.

namespace vqs {

inline std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct OptimizerSettings {
  std::uint64_t seed = 0;
  int hops = 100;
};

struct GroverRow {
  int n;
  std::uint64_t N;
  double phi;
  int pmax;
  double probability;
};

inline std::vector<GroverRow> grover_table(int n_lo, int n_hi) {
  if (n_lo < 2 || n_hi > 24 || n_lo > n_hi)
    throw std::invalid_argument("grover_table: need 2 <= n_lo <= n_hi <= 24");
  std::vector<GroverRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    const SearchSize size(n);
    const int pmax = grover_pmax(size);
    rows.push_back({n, size.N, grover_angle(size).phi, pmax, grover_probability(pmax, size)});
  }
  return rows;
}

struct ComparisonRow {
  std::uint64_t N;
  int pmax;
  double grover_probability;
  double variational_probability;
  double improvement_percent;  // 100 * (P_var - P_G) / P_G
  std::vector<double> best_angles;
};

/// Maps a shared angle into the reported half-period [0, pi].
inline double canonical_half_period(double angle) {
  const double a = reduce_angle(angle);
  return a > pi ? two_pi - a : a;
}

struct OptimizeOutcome {
  ProblemKind problem;
  int n;
  int p;
  OptimizationResult result;
  ComparisonRow row;
};

inline int resolve_p(SearchSize size, int p) {  // p <= 0 means "auto"
  return p > 0 ? p : grover_pmax(size);
}

inline OptimizeOutcome optimize_problem(ProblemKind problem, int n, int p,
                                        const OptimizerSettings& settings = {}) {
  const SearchSize size(n);
  const int steps = resolve_p(size, p);

  BasinHoppingConfig config;
  config.hop_count = settings.hops;
  config.rng_seed = settings.seed;
  config.bounds = default_bounds(problem, steps);
  config.start = grover_start(problem, steps);  // never worse than Grover
  Objective objective = [problem, size, steps](std::span<const double> x) {
    return vqs::objective(problem, x, size, steps);
  };
  OptimizationResult result = basin_hop(objective, config);

  const double p_grover = grover_probability(steps, size);
  const double p_var = result.success_probability;
  std::vector<double> angles = result.best_params.values;
  if (problem == ProblemKind::P2 || problem == ProblemKind::P3)
    for (double& a : angles) a = canonical_half_period(a);

  ComparisonRow row{size.N,
                    steps,
                    p_grover,
                    p_var,
                    100.0 * (p_var - p_grover) / p_grover,
                    angles};
  return {problem, n, steps, std::move(result), std::move(row)};
}

/// The four-row comparison table (N = 8..64, shared-angle problem at the
/// Grover-optimal call count).
inline std::vector<ComparisonRow> table1_rows(const OptimizerSettings& settings = {}) {
  std::vector<ComparisonRow> rows;
  for (int n = 3; n <= 6; ++n)
    rows.push_back(optimize_problem(ProblemKind::P3, n, 0, settings).row);
  return rows;
}

struct SweepRow {
  double angle;
  double probability;
};

/// Probability landscape of a one-parameter problem over the full period
/// [0, 2*pi] (inclusive; the endpoint repeats angle 0 by periodicity).
inline std::vector<SweepRow> sweep_rows(ProblemKind problem, int n, int p, int resolution) {
  if (problem != ProblemKind::P2 && problem != ProblemKind::P3)
    throw std::invalid_argument("sweep: only the one-parameter problems (2, 3) are supported");
  const SearchSize size(n);
  const int steps = resolve_p(size, p);
  Objective objective = [problem, size, steps](std::span<const double> x) {
    return vqs::objective(problem, x, size, steps);
  };
  const GridScan scan = grid_scan(objective, Bounds{{0.0, two_pi}}, resolution);
  std::vector<SweepRow> rows;
  rows.reserve(scan.points.size());
  for (const auto& [x, c] : scan.points) rows.push_back({x[0], 1.0 - c});
  return rows;
}

struct QubitSweepRow {
  int n;
  int p;
  double grover_probability;
  double variational_probability;
  double difference;
};

inline std::vector<QubitSweepRow> qubit_sweep_rows(ProblemKind problem, int n_max,
                                                   const OptimizerSettings& settings = {}) {
  if (n_max < 2 || n_max > 14)
    throw std::invalid_argument("qubit_sweep: need 2 <= n_max <= 14");
  std::vector<QubitSweepRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    const OptimizeOutcome out = optimize_problem(problem, n, 0, settings);
    rows.push_back({n, out.p, out.row.grover_probability, out.row.variational_probability,
                    out.row.variational_probability - out.row.grover_probability});
  }
  return rows;
}

struct NoiseGridSpec {
  double t1_min = 1e-6;
  double t1_max = 1e-2;
  double t2_min = 1e-6;
  double t2_max = 1e-2;
  int points_per_axis = 8;
};

/// Log-spaced product grid filtered to physical pairs (T2 <= 2*T1). An
/// entirely unphysical request is a configuration error.
inline std::vector<std::pair<double, double>> physical_noise_grid(const NoiseGridSpec& spec) {
  if (!(spec.t1_min > 0.0) || !(spec.t2_min > 0.0) || spec.t1_min > spec.t1_max ||
      spec.t2_min > spec.t2_max || spec.points_per_axis < 2)
    throw std::invalid_argument("noise grid: bad range or resolution");
  auto log_axis = [&](double lo, double hi) {
    std::vector<double> v;
    for (int i = 0; i < spec.points_per_axis; ++i)
      v.push_back(lo * std::pow(hi / lo, static_cast<double>(i) /
                                             static_cast<double>(spec.points_per_axis - 1)));
    return v;
  };
  std::vector<std::pair<double, double>> grid;
  for (double t1 : log_axis(spec.t1_min, spec.t1_max))
    for (double t2 : log_axis(spec.t2_min, spec.t2_max))
      if (t2 <= 2.0 * t1 * (1.0 + 1e-12)) grid.emplace_back(t1, t2);
  if (grid.empty())
    throw std::invalid_argument("noise grid: no physical (T2 <= 2*T1) grid points in range");
  return grid;
}

/// Optimizes the problem at n (shared-angle by default), compiles the best
/// schedule and sweeps it over the noise grid. The marked string defaults to
/// all-ones (probability is omega-independent without noise; under noise the
/// all-ones oracle carries no X conjugation overhead).
inline std::vector<SweepPoint> noise_sweep_rows(ProblemKind problem, int n,
                                                const NoiseGridSpec& spec,
                                                const OptimizerSettings& settings = {},
                                                double duration_1q = 50e-9,
                                                double duration_2q = 150e-9) {
  if (n < 2 || n > 4) throw std::invalid_argument("noise_sweep: n must be in [2, 4]");
  const OptimizeOutcome out = optimize_problem(problem, n, 0, settings);
  const AngleSchedule schedule =
      expand(problem, out.result.best_params.values, out.p);
  const SearchInstance instance(n, std::string(static_cast<std::size_t>(n), '1'));
  return t1t2_sweep(instance, schedule, physical_noise_grid(spec), duration_1q, duration_2q);
}

// ---- serialization ----

inline std::string to_csv(const std::vector<GroverRow>& rows) {
  std::string out = "n,N,phi,p_max,probability\n";
  for (const auto& r : rows)
    out += std::to_string(r.n) + ',' + std::to_string(r.N) + ',' + fmt12(r.phi) + ',' +
           std::to_string(r.pmax) + ',' + fmt12(r.probability) + '\n';
  return out;
}

inline std::string to_csv(const std::vector<ComparisonRow>& rows) {
  std::string out = "N,p_max,grover_probability,variational_probability,improvement_percent,best_angles\n";
  for (const auto& r : rows) {
    out += std::to_string(r.N) + ',' + std::to_string(r.pmax) + ',' + fmt12(r.grover_probability) +
           ',' + fmt12(r.variational_probability) + ',' + fmt12(r.improvement_percent) + ',';
    for (std::size_t i = 0; i < r.best_angles.size(); ++i) {
      if (i) out += ';';
      out += fmt12(r.best_angles[i]);
    }
    out += '\n';
  }
  return out;
}

inline std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "angle,probability\n";
  for (const auto& r : rows) out += fmt12(r.angle) + ',' + fmt12(r.probability) + '\n';
  return out;
}

inline std::string to_csv(const std::vector<QubitSweepRow>& rows) {
  std::string out = "n,p_max,grover_probability,variational_probability,difference\n";
  for (const auto& r : rows)
    out += std::to_string(r.n) + ',' + std::to_string(r.p) + ',' + fmt12(r.grover_probability) +
           ',' + fmt12(r.variational_probability) + ',' + fmt12(r.difference) + '\n';
  return out;
}

inline std::string to_csv(const std::vector<SweepPoint>& rows) {
  std::string out = "t1,t2,probability,exceeds_5pct_flag\n";
  for (const auto& r : rows)
    out += fmt12(r.t1) + ',' + fmt12(r.t2) + ',' + fmt12(r.probability) + ',' +
           (r.significant ? '1' : '0') + '\n';
  return out;
}

inline nlohmann::json to_json(const std::vector<GroverRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows)
    j.push_back({{"n", r.n}, {"N", r.N}, {"phi", r.phi}, {"p_max", r.pmax},
                 {"probability", r.probability}});
  return j;
}

inline nlohmann::json to_json(const ComparisonRow& r) {
  return {{"N", r.N},
          {"p_max", r.pmax},
          {"grover_probability", r.grover_probability},
          {"variational_probability", r.variational_probability},
          {"improvement_percent", r.improvement_percent},
          {"best_angles", r.best_angles}};
}

inline nlohmann::json to_json(const std::vector<ComparisonRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows) j.push_back(to_json(r));
  return j;
}

inline nlohmann::json to_json(const OptimizeOutcome& out) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& [hop, cost] : out.result.trace) trace.push_back({{"hop", hop}, {"cost", cost}});
  return {{"problem", static_cast<int>(out.problem)},
          {"n", out.n},
          {"p", out.p},
          {"best_params", out.result.best_params.values},
          {"best_cost", out.result.best_cost},
          {"success_probability", out.result.success_probability},
          {"evaluations", out.result.evaluations},
          {"trace", trace},
          {"comparison", to_json(out.row)}};
}

inline nlohmann::json to_json(const std::vector<SweepRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows) j.push_back({{"angle", r.angle}, {"probability", r.probability}});
  return j;
}

inline nlohmann::json to_json(const std::vector<QubitSweepRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows)
    j.push_back({{"n", r.n}, {"p_max", r.p}, {"grover_probability", r.grover_probability},
                 {"variational_probability", r.variational_probability},
                 {"difference", r.difference}});
  return j;
}

inline nlohmann::json to_json(const std::vector<SweepPoint>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows)
    j.push_back({{"t1", r.t1}, {"t2", r.t2}, {"probability", r.probability},
                 {"exceeds_5pct_flag", r.significant}});
  return j;
}

}  // namespace vqs
