#include <catch2/catch_amalgamated.hpp>

#include "vqs/report.hpp"

using namespace vqs;
using Catch::Matchers::WithinAbs;

TEST_CASE("grover table rows") {
  const auto rows = grover_table(2, 6);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].pmax == 1);
  CHECK_THAT(rows[0].probability, WithinAbs(1.0, 1e-14));
  CHECK(rows[1].pmax == 2);
  CHECK_THAT(rows[1].probability, WithinAbs(121.0 / 128.0, 1e-14));
  CHECK(rows[4].pmax == 6);
  CHECK(rows[4].N == 64);
  CHECK_THROWS_AS(grover_table(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(grover_table(4, 25), std::invalid_argument);
}

TEST_CASE("optimize outcome carries a consistent comparison row") {
  const OptimizeOutcome out = optimize_problem(ProblemKind::P3, 3, 0, {0, 50});
  CHECK(out.p == 2);
  CHECK(out.row.N == 8);
  const double recomputed = 100.0 *
      (out.row.variational_probability - out.row.grover_probability) / out.row.grover_probability;
  CHECK_THAT(out.row.improvement_percent, WithinAbs(recomputed, 1e-9));
  CHECK_THAT(out.result.success_probability, WithinAbs(out.row.variational_probability, 1e-15));
  CHECK_THAT(out.row.best_angles[0], WithinAbs(2.12, 0.02));
}

TEST_CASE("comparison table reproduces the published values") {
  const auto rows = table1_rows({0, 100});
  REQUIRE(rows.size() == 4);
  const double improvements[] = {5.77, 3.95, 0.08, 0.34};
  const int pmaxes[] = {2, 3, 4, 6};
  const double angles[] = {2.12, 2.19, 2.76, 2.60};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(rows[i].pmax == pmaxes[i]);
    CHECK_THAT(rows[i].improvement_percent, WithinAbs(improvements[i], 0.1));
    CHECK_THAT(rows[i].best_angles[0], WithinAbs(angles[i], 0.02));
  }
  // the near-degenerate N=32 row also meets the tighter tolerance
  CHECK_THAT(rows[2].improvement_percent, WithinAbs(0.08, 0.05));
}

TEST_CASE("sweep rows") {
  const auto rows = sweep_rows(ProblemKind::P3, 3, 0, 101);
  REQUIRE(rows.size() == 101);
  CHECK_THAT(rows.front().angle, WithinAbs(0.0, 1e-15));
  CHECK_THAT(rows.front().probability, WithinAbs(0.125, 1e-12));  // identity schedule
  CHECK_THAT(rows.back().angle, WithinAbs(two_pi, 1e-12));
  CHECK_THROWS_AS(sweep_rows(ProblemKind::P1, 3, 0, 101), std::invalid_argument);
  CHECK_THROWS_AS(sweep_rows(ProblemKind::P4, 3, 0, 101), std::invalid_argument);
}

TEST_CASE("qubit sweep rows") {
  const auto rows = qubit_sweep_rows(ProblemKind::P3, 6, {0, 40});
  REQUIRE(rows.size() == 5);
  for (const auto& r : rows) CHECK(r.difference >= -1e-9);
  CHECK(rows[1].n == 3);
  CHECK(rows[3].n == 5);
  CHECK(rows[1].difference > rows[3].difference);  // 5.47 pp vs 0.08 pp
  CHECK_THROWS_AS(qubit_sweep_rows(ProblemKind::P3, 15, {}), std::invalid_argument);
}

TEST_CASE("noise grid construction") {
  NoiseGridSpec spec;
  spec.points_per_axis = 5;
  const auto grid = physical_noise_grid(spec);
  CHECK_FALSE(grid.empty());
  for (const auto& [t1, t2] : grid) CHECK(t2 <= 2.0 * t1 * (1.0 + 1e-9));
  // the full-square product grid would have 25 points; unphysical ones are dropped
  CHECK(grid.size() < 25);

  NoiseGridSpec empty;
  empty.t1_min = empty.t1_max = 1e-6;
  empty.t2_min = empty.t2_max = 1e-2;
  CHECK_THROWS_AS(physical_noise_grid(empty), std::invalid_argument);
}

TEST_CASE("noise sweep rows carry flags and match grid size") {
  NoiseGridSpec spec;
  spec.points_per_axis = 4;
  const auto grid = physical_noise_grid(spec);
  const auto rows = noise_sweep_rows(ProblemKind::P3, 3, spec, {0, 30});
  CHECK(rows.size() == grid.size());
  bool any_set = false, any_clear = false;
  for (const auto& r : rows) (r.significant ? any_set : any_clear) = true;
  CHECK(any_set);
  CHECK(any_clear);
}

TEST_CASE("csv emission") {
  SECTION("12 significant digits, stable header") {
    std::vector<GroverRow> rows{{3, 8, 0.7227342478134157, 2, 121.0 / 128.0}};
    CHECK(to_csv(rows) ==
          "n,N,phi,p_max,probability\n3,8,0.722734247813,2,0.9453125\n");
  }
  SECTION("comparison rows join multiple angles with semicolons") {
    std::vector<ComparisonRow> rows{{8, 2, 0.5, 0.75, 50.0, {1.5, 2.5}}};
    CHECK(to_csv(rows) ==
          "N,p_max,grover_probability,variational_probability,improvement_percent,best_angles\n"
          "8,2,0.5,0.75,50,1.5;2.5\n");
  }
  SECTION("byte-stable across repeated runs") {
    const OptimizerSettings settings{7, 25};
    CHECK(to_csv(table1_rows(settings)) == to_csv(table1_rows(settings)));
    CHECK(to_csv(qubit_sweep_rows(ProblemKind::P3, 5, settings)) ==
          to_csv(qubit_sweep_rows(ProblemKind::P3, 5, settings)));
  }
}

TEST_CASE("json emission round-trips the comparison payload") {
  const OptimizeOutcome out = optimize_problem(ProblemKind::P3, 3, 0, {0, 25});
  const nlohmann::json j = to_json(out);
  CHECK(j["n"] == 3);
  CHECK(j["p"] == 2);
  CHECK(j["comparison"]["N"] == 8);
  const auto parsed = nlohmann::json::parse(j.dump());
  CHECK_THAT(parsed["success_probability"].get<double>(),
             WithinAbs(out.result.success_probability, 0.0));
  CHECK(parsed["trace"].size() == out.result.trace.size());
}

TEST_CASE("canonical half-period mapping") {
  CHECK_THAT(canonical_half_period(2.12), WithinAbs(2.12, 1e-15));
  CHECK_THAT(canonical_half_period(two_pi - 2.12), WithinAbs(2.12, 1e-12));
  CHECK_THAT(canonical_half_period(-2.12), WithinAbs(2.12, 1e-12));
}
