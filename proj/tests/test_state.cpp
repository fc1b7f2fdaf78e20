#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qftlab/state.hpp"

using namespace qftlab;

TEST_CASE("basis states are unit norm") {
  CHECK(StateVector::basis1(5, 3).norm() == doctest::Approx(1.0));
  CHECK(StateVector::basis2(3, 1, 2).norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(StateVector::basis1(5, 5), RangeError);
}

TEST_CASE("product state layout: register 1 is the slow index") {
  StateVector u = StateVector::zero1(2);
  u.amps = {Cplx(1.0, 0.0), Cplx(0.0, 0.0)};
  StateVector v = StateVector::zero1(2);
  v.amps = {Cplx(0.0, 0.0), Cplx(1.0, 0.0)};
  const StateVector w = StateVector::product(u, v);
  CHECK(w.amps[0 * 2 + 1] == Cplx(1.0, 0.0));
  CHECK(std::abs(w.amps[1 * 2 + 0]) == 0.0);
}

TEST_CASE("product basis state measures deterministically") {
  const std::size_t n = 6;
  const StateVector s = StateVector::basis2(n, 3, 4);
  const std::vector<double> reg1 = register_distribution(s, 1);
  CHECK(reg1[3] == doctest::Approx(1.0));
  const DeterministicOutcome out = deterministic_outcome(s, 1);
  CHECK(out.deterministic);
  CHECK(out.outcome == 3);
  CHECK(out.probability == doctest::Approx(1.0));
  CHECK(deterministic_outcome(s, 2).outcome == 4);
}

TEST_CASE("uniform two-register state on Z2 gives 1/2 per outcome") {
  StateVector s = StateVector::zero2(2);
  for (auto& a : s.amps) a = Cplx(0.5, 0.0);
  for (int reg : {1, 2}) {
    const std::vector<double> dist = register_distribution(s, reg);
    CHECK(dist[0] == doctest::Approx(0.5));
    CHECK(dist[1] == doctest::Approx(0.5));
  }
  const DeterministicOutcome out = deterministic_outcome(s, 1);
  CHECK_FALSE(out.deterministic);
}

TEST_CASE("norm violation is an integrity error") {
  StateVector s = StateVector::basis2(2, 0, 0);
  s.amps[3] = Cplx(0.5, 0.0);  // norm now > 1
  CHECK_THROWS_AS(register_distribution(s, 1), IntegrityError);
}

TEST_CASE("sampling is seeded and follows the marginal") {
  StateVector s = StateVector::zero2(2);
  s.amps[0 * 2 + 0] = std::sqrt(0.25);
  s.amps[1 * 2 + 1] = std::sqrt(0.75);
  std::mt19937_64 rng(42);
  std::size_t ones = 0;
  const std::size_t draws = 20000;
  for (std::size_t i = 0; i < draws; ++i) {
    ones += sample_register(s, 1, rng);
  }
  const double rate = static_cast<double>(ones) / draws;
  CHECK(rate == doctest::Approx(0.75).epsilon(0.05));

  std::mt19937_64 rng_a(7), rng_b(7);
  for (int i = 0; i < 100; ++i) {
    CHECK(sample_register(s, 1, rng_a) == sample_register(s, 1, rng_b));
  }
}

TEST_CASE("register argument validation") {
  const StateVector one = StateVector::basis1(4, 0);
  CHECK_THROWS_AS(register_distribution(one, 1), StructuralError);
  const StateVector two = StateVector::basis2(2, 0, 0);
  CHECK_THROWS_AS(register_distribution(two, 3), StructuralError);
}
