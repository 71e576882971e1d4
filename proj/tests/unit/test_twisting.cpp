#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qdx/errors.hpp"
#include "qdx/oracle.hpp"
#include "qdx/twisting.hpp"

using namespace qdx;
using std::numbers::pi;

TEST_CASE("expectations at hand-checkable points") {
  const auto e0 = expectations({12, 0.0});
  CHECK(e0.sz == -1.0);
  CHECK(e0.szz == 1.0);
  CHECK(e0.spm == 0.0);
  CHECK(std::abs(e0.smm) == 0.0);

  const auto e2 = expectations({2, pi});
  CHECK(std::abs(e2.sz) < 1e-15);
  CHECK(e2.szz == doctest::Approx(1.0));
  CHECK(std::abs(e2.spm) < 1e-15);
  CHECK(std::abs(e2.smm.real()) < 1e-15);
  CHECK(e2.smm.imag() == doctest::Approx(-0.5));
}

TEST_CASE("reduced state from expectations") {
  const auto down = reduced_state({-1.0, 1.0, 0.0, {}});
  CHECK(down.d4 == 1.0);
  CHECK(down.d1 == 0.0);
  CHECK(down.d2 == 0.0);
  CHECK(down.d3 == 0.0);

  const auto mix = reduced_state({0.0, 1.0, 0.0, {}});
  CHECK(mix.d1 == 0.5);
  CHECK(mix.d4 == 0.5);
  CHECK(mix.d2 == 0.0);

  // A coherence in an empty block cannot come from any state.
  CHECK_THROWS_AS(reduced_state({0.0, 1.0, 0.25, {}}), InvalidStateError);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(TwistingParams({1, 0.0}).validate(), DomainError);
  CHECK_THROWS_AS(TwistingParams({kMaxParticles + 1, 0.0}).validate(), DomainError);
  CHECK_THROWS_AS(TwistingParams({4, std::nan("")}).validate(), DomainError);
  CHECK_THROWS_AS(TwistingParams({4, INFINITY}).validate(), DomainError);
  CHECK_NOTHROW(TwistingParams({kMaxParticles, 123.0}).validate());
  CHECK_THROWS_AS(expectations({0, 0.1}), DomainError);
}

TEST_CASE("integer powers keep their sign") {
  CHECK(int_pow(-0.5, 3) == -0.125);
  CHECK(int_pow(-0.5, 4) == 0.0625);
  CHECK(int_pow(0.3, 0) == 1.0);
  CHECK(int_pow(-1.0, 999'999) == -1.0);
  CHECK(int_pow(0.9, 1'000'000) == 0.0);
  CHECK(int_pow(1.0 - 1e-7, 1'000'000) == doctest::Approx(std::pow(1.0 - 1e-7, 1e6)).epsilon(1e-12));
}

TEST_CASE("display angle") {
  CHECK(display_angle(5.0 * pi) == doctest::Approx(pi));
  CHECK(display_angle(-pi) == doctest::Approx(3.0 * pi));
  CHECK(display_angle(0.3) == 0.3);
}

TEST_CASE("large N degrades gracefully") {
  const auto s = twisting_state({kMaxParticles, 0.1 * pi});
  CHECK(s.is_valid());
  CHECK(std::isfinite(quantum_discord(s).qd));
}

TEST_CASE("every grid state is a density matrix with d2 = d3") {
  for (int n = 2; n <= 20; ++n)
    for (int i = 0; i <= 100; ++i) {
      const double theta = 2.0 * pi * i / 100;
      const auto s = twisting_state({n, theta});
      CHECK(std::abs(s.trace() - 1.0) < 1e-12);
      CHECK(s.is_valid(1e-10));
      CHECK(s.d2 == s.d3);
    }
}

TEST_CASE("reflection and period symmetry of QD and GMQD") {
  for (int n = 2; n <= 20; ++n)
    for (int i = 0; i <= 100; ++i) {
      const double theta = 2.0 * pi * i / 100;
      const auto f = correlations(twisting_state({n, theta}));
      const auto reflected = correlations(twisting_state({n, 2.0 * pi - theta}));
      const auto shifted = correlations(twisting_state({n, theta + 2.0 * pi}));
      CHECK(std::abs(f.qd - reflected.qd) < 1e-10);
      CHECK(std::abs(f.qd - shifted.qd) < 1e-10);
      CHECK(std::abs(f.gmqd_normalized - reflected.gmqd_normalized) < 1e-10);
      CHECK(std::abs(f.gmqd_normalized - shifted.gmqd_normalized) < 1e-10);
    }
}

TEST_CASE("closed form matches the symmetric-subspace simulation at N=12, theta=0.1pi") {
  const TwistingParams p{12, 0.1 * pi};
  CHECK(max_entry_difference(twisting_state(p), oracle::exact_reduced_state(p)) < 1e-10);
}
