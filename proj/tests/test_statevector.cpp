#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vqs/statevector.hpp"

using namespace vqs;
using Catch::Matchers::WithinAbs;

namespace {
double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace

TEST_CASE("uniform state") {
  const StateVector one = uniform_state(1);
  REQUIRE(one.dim() == 2);
  CHECK_THAT(one.amps[0].real(), WithinAbs(0.7071067811865475, 1e-15));
  CHECK_THAT(one.amps[1].real(), WithinAbs(0.7071067811865475, 1e-15));

  const StateVector three = uniform_state(3);
  REQUIRE(three.dim() == 8);
  for (const Complex& a : three.amps)
    CHECK_THAT(std::abs(a - Complex(1.0 / std::sqrt(8.0), 0.0)), WithinAbs(0.0, 1e-15));
  CHECK_THAT(three.norm_sq(), WithinAbs(1.0, 1e-15));

  CHECK_THROWS_AS(uniform_state(0), std::invalid_argument);
  CHECK_THROWS_AS(uniform_state(25), std::invalid_argument);
}

TEST_CASE("search instance bitstring convention is big-endian") {
  CHECK(SearchInstance(3, "101").index() == 5);
  CHECK(SearchInstance(3, "100").index() == 4);
  CHECK(SearchInstance(4, "0001").index() == 1);
  CHECK_THROWS_AS(SearchInstance(3, "10"), std::invalid_argument);
  CHECK_THROWS_AS(SearchInstance(3, "1x1"), std::invalid_argument);
  CHECK_THROWS_AS(SearchInstance(0, ""), std::invalid_argument);
}

TEST_CASE("oracle phase") {
  SECTION("alpha = 0 leaves the state untouched") {
    const StateVector s = apply_oracle_phase(uniform_state(2), 3, 0.0);
    for (const Complex& a : s.amps)
      CHECK_THAT(std::abs(a - Complex(0.5, 0.0)), WithinAbs(0.0, 1e-15));
  }
  SECTION("alpha = pi is the standard sign-flip oracle") {
    const StateVector s = apply_oracle_phase(uniform_state(2), 1, pi);
    CHECK_THAT(std::abs(s.amps[1] + Complex(0.5, 0.0)), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(s.amps[0] - Complex(0.5, 0.0)), WithinAbs(0.0, 1e-15));
  }
  SECTION("alpha = pi/2 on |11> of the uniform two-qubit state gives i/2") {
    const StateVector s =
        apply_oracle_phase(uniform_state(2), SearchInstance(2, "11").index(), pi / 2);
    CHECK_THAT(std::abs(s.amps[3] - Complex(0.0, 0.5)), WithinAbs(0.0, 1e-15));
  }
  SECTION("index out of range") {
    CHECK_THROWS_AS(apply_oracle_phase(uniform_state(2), 4, 1.0), std::invalid_argument);
  }
}

TEST_CASE("diffusion phase") {
  SECTION("beta = 0 leaves the state untouched") {
    const StateVector s = apply_diffusion_phase(uniform_state(3), 0.0);
    CHECK_THAT(std::abs(s.amps[0] - Complex(1.0 / std::sqrt(8.0), 0.0)), WithinAbs(0.0, 1e-15));
  }
  SECTION("beta = pi negates the uniform state (global phase)") {
    const StateVector s = apply_diffusion_phase(uniform_state(3), pi);
    for (const Complex& a : s.amps)
      CHECK_THAT(std::abs(a + Complex(1.0 / std::sqrt(8.0), 0.0)), WithinAbs(0.0, 1e-14));
  }
  SECTION("states orthogonal to |s> are untouched") {
    StateVector s = uniform_state(1);
    s.amps[0] = 1.0 / std::sqrt(2.0);
    s.amps[1] = -1.0 / std::sqrt(2.0);
    const StateVector t = apply_diffusion_phase(s, pi);
    CHECK_THAT(std::abs(t.amps[0] - s.amps[0]), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(t.amps[1] - s.amps[1]), WithinAbs(0.0, 1e-15));
  }
}

TEST_CASE("oracle phases on the same projector add") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const std::uint64_t w = rng() % (std::uint64_t{1} << n);
    const double a1 = uniform(rng, 0, two_pi), a2 = uniform(rng, 0, two_pi);
    StateVector s = uniform_state(n);
    for (std::uint64_t x = 0; x < s.dim(); ++x)  // random-ish dense state
      s.amps[x] *= std::polar(1.0, uniform(rng, 0, two_pi));
    const StateVector twice =
        apply_oracle_phase(apply_oracle_phase(s, w, a1), w, a2);
    const StateVector once = apply_oracle_phase(s, w, a1 + a2);
    for (std::uint64_t x = 0; x < s.dim(); ++x)
      CHECK_THAT(std::abs(twice.amps[x] - once.amps[x]), WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("run_sequence") {
  SECTION("two qubits reach the marked string with certainty in one step") {
    for (const char* w : {"00", "01", "10", "11"})
      CHECK_THAT(run_sequence(SearchInstance(2, w), {{pi, pi}}), WithinAbs(1.0, 1e-13));
  }
  SECTION("three qubits, two Grover steps") {
    CHECK_THAT(run_sequence(SearchInstance(3, "101"), {{pi, pi}, {pi, pi}}),
               WithinAbs(121.0 / 128.0, 1e-13));
  }
  SECTION("shared angle 2.12 and omega-independence") {
    const AngleSchedule schedule{{2.12, 2.12}, {2.12, 2.12}};
    double lo = 1.0, hi = 0.0;
    for (int w = 0; w < 8; ++w) {
      std::string bits;
      for (int b = 2; b >= 0; --b) bits += static_cast<char>('0' + ((w >> b) & 1));
      const double prob = run_sequence(SearchInstance(3, bits), schedule);
      lo = std::min(lo, prob);
      hi = std::max(hi, prob);
    }
    CHECK_THAT(lo, WithinAbs(0.9999906112150863, 1e-12));
    CHECK(hi - lo <= 1e-12);
  }
}

TEST_CASE("norm is preserved by every operator application") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    StateVector s = uniform_state(n);
    const std::uint64_t w = rng() % s.dim();
    for (int i = 0; i < 16; ++i) {
      s = apply_oracle_phase(std::move(s), w, uniform(rng, 0, two_pi));
      CHECK_THAT(s.norm_sq(), WithinAbs(1.0, 1e-12));
      s = apply_diffusion_phase(std::move(s), uniform(rng, 0, two_pi));
      CHECK_THAT(s.norm_sq(), WithinAbs(1.0, 1e-12));
    }
  }
}

TEST_CASE("probability does not depend on the marked string") {
  std::mt19937_64 rng(13);
  for (int n : {2, 3, 4, 5}) {
    AngleSchedule schedule;
    const int p = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < p; ++i)
      schedule.push_back({uniform(rng, 0, two_pi), uniform(rng, 0, two_pi)});
    double lo = 1.0, hi = 0.0;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
      std::string bits;
      for (int b = n - 1; b >= 0; --b) bits += static_cast<char>('0' + ((w >> b) & 1));
      const double prob = run_sequence(SearchInstance(n, bits), schedule);
      lo = std::min(lo, prob);
      hi = std::max(hi, prob);
    }
    CHECK(hi - lo <= 1e-12);
  }
}
