// Command-line front end: Grover baselines, variational optimization of the
// four constrained problem families, landscape and qubit sweeps, and the
// T1/T2 noise study. Emits CSV or JSON, deterministically for a fixed seed.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vqs/report.hpp"

namespace {

struct CommonOut {
  std::string format = "csv";
  std::string out_path;  // empty = stdout
};

void add_output_flags(CLI::App* cmd, CommonOut& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", out.out_path, "Write output to this file instead of stdout");
}

int parse_p(const std::string& p) {  // "auto" resolves to the Grover-optimal count
  if (p == "auto") return 0;
  const int value = std::stoi(p);
  if (value < 1) throw CLI::ValidationError("--p", "must be a positive integer or 'auto'");
  return value;
}

void emit(const CommonOut& out, const std::string& csv, const nlohmann::json& json) {
  const std::string payload = out.format == "csv" ? csv : json.dump(2) + "\n";
  if (out.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream file(out.out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + out.out_path);
    file << payload;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vqsearch: variational optimization of Grover-type search schedules"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key=value file (flags override)");

  // grover
  auto* grover = app.add_subcommand("grover", "Closed-form Grover baselines per qubit count");
  int g_n = 0, g_n_min = 2, g_n_max = 0;
  CommonOut g_out;
  grover->add_option("--n", g_n, "Single qubit count");
  grover->add_option("--n-min", g_n_min, "Range start")->capture_default_str();
  grover->add_option("--n-max", g_n_max, "Range end");
  add_output_flags(grover, g_out);

  // optimize
  auto* optimize = app.add_subcommand("optimize", "Basin-hopping optimization of one problem");
  int o_problem = 3, o_n = 3, o_hops = 100;
  std::string o_p = "auto";
  std::uint64_t o_seed = 0;
  CommonOut o_out;
  optimize->add_option("--problem", o_problem, "Problem family 1-4")
      ->check(CLI::Range(1, 4))->capture_default_str();
  optimize->add_option("--n", o_n, "Qubit count")->required();
  optimize->add_option("--p", o_p, "Step count or 'auto'")->capture_default_str();
  optimize->add_option("--seed", o_seed, "RNG seed")->capture_default_str();
  optimize->add_option("--hops", o_hops, "Basin-hopping iterations")->capture_default_str();
  add_output_flags(optimize, o_out);

  // table1
  auto* table1 = app.add_subcommand("table1", "Variational-vs-Grover comparison table, N = 8..64");
  int t_hops = 100;
  std::uint64_t t_seed = 0;
  CommonOut t_out;
  table1->add_option("--seed", t_seed, "RNG seed")->capture_default_str();
  table1->add_option("--hops", t_hops, "Basin-hopping iterations")->capture_default_str();
  add_output_flags(table1, t_out);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Probability landscape of a one-parameter problem");
  int s_problem = 3, s_n = 3, s_resolution = 10001;
  std::string s_p = "auto";
  CommonOut s_out;
  sweep->add_option("--problem", s_problem, "Problem family (2 or 3)")
      ->check(CLI::Range(1, 4))->capture_default_str();
  sweep->add_option("--n", s_n, "Qubit count")->capture_default_str();
  sweep->add_option("--p", s_p, "Step count or 'auto'")->capture_default_str();
  sweep->add_option("--resolution", s_resolution, "Grid points over [0, 2*pi]")
      ->capture_default_str();
  add_output_flags(sweep, s_out);

  // qubit-sweep
  auto* qsweep = app.add_subcommand("qubit-sweep",
                                    "Optimized-vs-Grover difference per qubit count");
  int q_problem = 3, q_n_max = 11, q_hops = 100;
  std::uint64_t q_seed = 0;
  CommonOut q_out;
  qsweep->add_option("--problem", q_problem, "Problem family 1-4")
      ->check(CLI::Range(1, 4))->capture_default_str();
  qsweep->add_option("--n-max", q_n_max, "Last qubit count (<= 14)")->capture_default_str();
  qsweep->add_option("--seed", q_seed, "RNG seed")->capture_default_str();
  qsweep->add_option("--hops", q_hops, "Basin-hopping iterations")->capture_default_str();
  add_output_flags(qsweep, q_out);

  // noise-sweep
  auto* nsweep = app.add_subcommand("noise-sweep",
                                    "Noisy success probability over a T1/T2 grid");
  int n_problem = 3, n_n = 3, n_points = 8, n_hops = 100;
  double t1_min = 1e-6, t1_max = 1e-2, t2_min = 1e-6, t2_max = 1e-2;
  double dur_1q = 50e-9, dur_2q = 150e-9;
  std::uint64_t n_seed = 0;
  CommonOut n_out;
  nsweep->add_option("--problem", n_problem, "Problem family 1-4")
      ->check(CLI::Range(1, 4))->capture_default_str();
  nsweep->add_option("--n", n_n, "Qubit count (<= 4)")->capture_default_str();
  nsweep->add_option("--t1-min", t1_min, "T1 range start, seconds")->capture_default_str();
  nsweep->add_option("--t1-max", t1_max, "T1 range end, seconds")->capture_default_str();
  nsweep->add_option("--t2-min", t2_min, "T2 range start, seconds")->capture_default_str();
  nsweep->add_option("--t2-max", t2_max, "T2 range end, seconds")->capture_default_str();
  nsweep->add_option("--grid-points", n_points, "Log-spaced points per axis")
      ->capture_default_str();
  nsweep->add_option("--duration-1q", dur_1q, "RX gate time, seconds")->capture_default_str();
  nsweep->add_option("--duration-2q", dur_2q, "CZ gate time, seconds")->capture_default_str();
  nsweep->add_option("--seed", n_seed, "RNG seed")->capture_default_str();
  nsweep->add_option("--hops", n_hops, "Basin-hopping iterations")->capture_default_str();
  add_output_flags(nsweep, n_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (grover->parsed()) {
      const int lo = g_n > 0 ? g_n : g_n_min;
      const int hi = g_n > 0 ? g_n : (g_n_max > 0 ? g_n_max : 11);
      const auto rows = vqs::grover_table(lo, hi);
      emit(g_out, vqs::to_csv(rows), vqs::to_json(rows));
    } else if (optimize->parsed()) {
      const auto out = vqs::optimize_problem(vqs::problem_from_int(o_problem), o_n, parse_p(o_p),
                                             {o_seed, o_hops});
      emit(o_out, vqs::to_csv(std::vector<vqs::ComparisonRow>{out.row}), vqs::to_json(out));
    } else if (table1->parsed()) {
      const auto rows = vqs::table1_rows({t_seed, t_hops});
      emit(t_out, vqs::to_csv(rows), vqs::to_json(rows));
    } else if (sweep->parsed()) {
      const auto rows = vqs::sweep_rows(vqs::problem_from_int(s_problem), s_n, parse_p(s_p),
                                        s_resolution);
      emit(s_out, vqs::to_csv(rows), vqs::to_json(rows));
    } else if (qsweep->parsed()) {
      const auto rows =
          vqs::qubit_sweep_rows(vqs::problem_from_int(q_problem), q_n_max, {q_seed, q_hops});
      emit(q_out, vqs::to_csv(rows), vqs::to_json(rows));
    } else if (nsweep->parsed()) {
      vqs::NoiseGridSpec spec{t1_min, t1_max, t2_min, t2_max, n_points};
      const auto rows = vqs::noise_sweep_rows(vqs::problem_from_int(n_problem), n_n, spec,
                                              {n_seed, n_hops}, dur_1q, dur_2q);
      emit(n_out, vqs::to_csv(rows), vqs::to_json(rows));
    }
  } catch (const vqs::invariant_error& e) {
    std::cerr << "numerical invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
