#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "coulomb1d/eigensolver.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace coulomb1d;

TEST_CASE("solver config validation") {
  SolverConfig c;
  c.bracket_pad = 0.6;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = {};
  c.beta_tol = 0.0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = {};
  c.n_max = 0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  CHECK_NOTHROW(validate(SolverConfig{}));
}

TEST_CASE("bracketing around asymptotic guesses") {
  SolverConfig cfg;
  PotentialParams p{0.01};
  const auto iv = bracket(Parity::Odd, 1, p, cfg);
  const double target = 1.0 + 2.0 / 3.0 * 1e-4;
  CHECK(iv.lo < target);
  CHECK(iv.hi > target);

  PotentialParams p0{1e-4};
  const auto iv0 = bracket(Parity::Even, 0, p0, cfg);
  CHECK(iv0.lo > std::sqrt(5e-5));
  CHECK(iv0.hi <= 0.5);

  PotentialParams p2{1e-7};
  const auto iv2 = bracket(Parity::Even, 2, p2, cfg);
  CHECK(iv2.lo < 2.0654);
  CHECK(iv2.hi > 2.0654);

  CHECK_THROWS_AS(bracket(Parity::Odd, 0, p, cfg), std::invalid_argument);
}

TEST_CASE("refinement reaches the predicted roots") {
  SolverConfig cfg;
  PotentialParams p{0.01};
  const auto odd1 = refine(bracket(Parity::Odd, 1, p, cfg), Parity::Odd, 1, p, cfg);
  const double rho_pred = 2.0 / 3.0 * 1e-4;
  CHECK(std::abs(odd1.beta - 1.0 - rho_pred) / rho_pred < 0.05);
  CHECK(odd1.residual < 1e-10);
  CHECK_THAT(odd1.energy, WithinRel(-1.0 / (odd1.beta * odd1.beta), 1e-15));

  PotentialParams p7{1e-7};
  const auto even1 = refine(bracket(Parity::Even, 1, p7, cfg), Parity::Even, 1, p7, cfg);
  CHECK_THAT(even1.beta, WithinAbs(1.0650, 1e-2));
}

TEST_CASE("degenerate bracket at a root is accepted") {
  SolverConfig cfg;
  PotentialParams p{0.01};
  const auto s = refine(bracket(Parity::Odd, 2, p, cfg), Parity::Odd, 2, p, cfg);
  const auto again = refine({s.beta, s.beta}, Parity::Odd, 2, p, cfg);
  CHECK(again.beta == s.beta);
  CHECK_THROWS_AS(refine({2.2, 2.3}, Parity::Odd, 2, p, cfg), std::invalid_argument);
}

TEST_CASE("spectrum layout and ordering") {
  SolverConfig cfg;
  cfg.n_max = 3;
  PotentialParams p{1e-3};
  const auto sp = spectrum(p, cfg);
  REQUIRE(sp.size() == 7);
  CHECK(sp[0].parity == Parity::Even);
  CHECK(sp[0].n == 0);
  for (size_t i = 1; i < sp.size(); ++i) CHECK(sp[i - 1].energy < sp[i].energy);
  for (const auto& s : sp) {
    CHECK(s.residual < 1e-10);
    CHECK(s.energy < 0.0);
    if (s.n >= 1) {
      CHECK(s.beta > s.n - 0.5);
      CHECK(s.beta < s.n + 0.5);
      CHECK(s.beta - s.n > 0.0);  // positive quantum defect
    }
  }
  // Within each n the odd state is deeper: its defect is smaller.
  for (int n = 1; n <= 3; ++n) {
    const EigenState *ev = nullptr, *od = nullptr;
    for (const auto& s : sp) {
      if (s.n != n) continue;
      (s.parity == Parity::Even ? ev : od) = &s;
    }
    REQUIRE(ev);
    REQUIRE(od);
    CHECK(od->energy < ev->energy);
    CHECK(od->beta < ev->beta);
  }
}

TEST_CASE("odd defects track (2/3) delta^2") {
  SolverConfig cfg;
  PotentialParams p{1e-2};
  for (int n = 1; n <= 3; ++n) {
    const auto s = solve_state(Parity::Odd, n, p, cfg);
    CHECK(std::abs(s.beta - n) < 7e-5);
    CHECK(std::abs(s.beta - n) > 5e-5);
  }
}

TEST_CASE("even betas decrease toward the integers as delta shrinks") {
  SolverConfig cfg;
  double prev = 10.0;
  for (double d : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7}) {
    const auto s = solve_state(Parity::Even, 1, PotentialParams{d}, cfg);
    CHECK(s.beta < prev);
    CHECK(s.beta > 1.0);
    prev = s.beta;
  }
}

TEST_CASE("ground state dives as delta shrinks") {
  SolverConfig cfg;
  double prev_beta = 1.0, prev_e = 0.0;
  for (double d : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7}) {
    const auto s = solve_state(Parity::Even, 0, PotentialParams{d}, cfg);
    CHECK(s.beta < prev_beta);
    CHECK(s.energy < prev_e);
    CHECK(s.beta > std::sqrt(d / 2.0));
    CHECK(s.beta < 0.5);
    prev_beta = s.beta;
    prev_e = s.energy;
  }
}

TEST_CASE("result independent of bracket_pad") {
  PotentialParams p{1e-4};
  SolverConfig a, b;
  a.bracket_pad = 0.2;
  b.bracket_pad = 0.4;
  for (int n = 1; n <= 3; ++n) {
    const double ba = solve_state(Parity::Even, n, p, a).beta;
    const double bb = solve_state(Parity::Even, n, p, b).beta;
    CHECK(std::abs(ba - bb) <= a.beta_tol);
  }
}

TEST_CASE("asymptotic fallback below delta_switch") {
  SolverConfig cfg;
  PotentialParams p{1e-9};
  const auto ev = solve_state(Parity::Even, 1, p, cfg);
  CHECK(ev.beta > 1.0);
  CHECK(ev.beta < 1.06);
  const auto od = solve_state(Parity::Odd, 1, p, cfg);
  CHECK_THAT(od.beta, WithinAbs(1.0, 1e-15));
  CHECK_THAT(od.energy, WithinRel(-1.0, 1e-12));
}

TEST_CASE("amplitudes reproduce continuity at the seam") {
  SolverConfig cfg;
  PotentialParams p{1e-3};
  for (auto par : {Parity::Even, Parity::Odd}) {
    const auto s = solve_state(par, 2, p, cfg);
    const double q = wave_vector_q({s.beta}, p);
    const double inner = s.a_inner * (par == Parity::Even ? std::cos(q * p.delta)
                                                          : std::sin(q * p.delta));
    const detail::qfloat a = 1 - static_cast<detail::qfloat>(s.beta);
    const detail::qfloat z = 2 * static_cast<detail::qfloat>(p.delta) / s.beta;
    const double outer = s.b_outer * p.delta / s.beta * std::exp(-p.delta / s.beta) *
                         detail::to_double(detail::tricomi_u_int_b_q(a, 1, z, 500));
    CHECK_THAT(inner, WithinRel(outer, 1e-12));
  }
}
