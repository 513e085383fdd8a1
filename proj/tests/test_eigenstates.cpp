#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dqw/eigenstates.hpp"
#include "dqw/fd_oracle.hpp"
#include "dqw/oracle_quad.hpp"
#include "dqw/spectrum.hpp"
#include "helpers.hpp"

using namespace dqw;

TEST_CASE("closed form and null-space solve give the same coefficients") {
  const WellParams p = testhelp::gaas();
  for (const Level& lv : find_levels(p)) {
    const CoefficientSet a = coefficients(lv, p);
    const CoefficientSet b = coefficients_nullspace(lv, p);
    CHECK(std::fabs(a.a1 - b.a1) < 1e-8);
    CHECK(std::fabs(a.a2 - b.a2) < 1e-8);
    CHECK(std::fabs(a.b1 - b.b1) < 1e-8);
    CHECK(std::fabs(a.b2 - b.b2) < 1e-8);
    CHECK(std::fabs(a.b3 - b.b3) < 1e-8);
    CHECK(std::fabs(a.b4 - b.b4) < 1e-8);
    CHECK(std::fabs(a.c1 - b.c1) < 1e-8);
    CHECK(std::fabs(a.c2 - b.c2) < 1e-8);
  }
}

TEST_CASE("coefficient structure follows the parity pattern") {
  const WellParams p = testhelp::gaas();
  for (const Level& lv : find_levels(p)) {
    const CoefficientSet c = coefficients(lv, p);
    const WaveNumbers& w = lv.waves;
    if (lv.parity == Parity::Symmetric) {
      CHECK(c.a1 == c.a2);
      CHECK(c.b1 == c.b4);
      CHECK(c.b1 == c.c1);
      CHECK(c.c1 == c.c2);
      CHECK(c.b2 == c.b3);
      // A1 = C2s chi_c m0 / (k mc), with |C2s| the general normalizer
      CHECK(c.a1 / c.c1 ==
            doctest::Approx(w.chi_c * p.m0 / (w.k * p.mc)).epsilon(1e-12));
      CHECK(std::fabs(c.c2) ==
            doctest::Approx(c2_general(lv.parity, w, p)).epsilon(1e-12));
    } else {
      CHECK(c.a1 == -c.a2);
      CHECK(c.b1 == -c.b4);
      CHECK(c.c1 == -c.c2);
      CHECK(c.b2 == -c.b3);
      CHECK(std::fabs(c.c2) ==
            doctest::Approx(c2_general(lv.parity, w, p)).epsilon(1e-12));
    }
    // sign convention
    CHECK(eval_psi(0.5 * p.a, BoundState{lv, c, p}) > 0.0);
  }
}

TEST_CASE("equal-mass normalizer reduction matches the general form") {
  // vb < vc exercises the chi_b/chi_c confinement term of the reduction
  for (WellParams p : {testhelp::equal_mass(), WellParams{6.0, 5.0, 0.10, 0.1671,
                                                          0.067, 0.067, 0.067}}) {
    for (const Level& lv : find_levels(p)) {
      if (lv.energy >= p.vb) continue;
      CHECK(c2_equal_mass(lv.parity, lv.waves, p) ==
            doctest::Approx(c2_general(lv.parity, lv.waves, p)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS((void)c2_equal_mass(Parity::Symmetric,
                                      wavenumbers(0.05, testhelp::gaas()), testhelp::gaas()),
                  Error);
}

TEST_CASE("matching residuals stay below 1e-10 for every bound state") {
  for (double b : {1.0, 5.0, 15.0}) {
    const WellParams p = testhelp::gaas(b);
    for (const BoundState& st : solve_all_states(p))
      for (double r : boundary_residuals(st)) CHECK(r < 1e-10);
  }
}

TEST_CASE("residuals are sensitive to coefficient perturbations") {
  const WellParams p = testhelp::gaas();
  BoundState st = solve_state(p, find_levels(p)[0]);
  st.coeffs.a1 *= 1.01;
  const auto r = boundary_residuals(st);
  CHECK(r[1] > 1e-4);  // the derivative match at x = 0 reacts to A1
}

TEST_CASE("unit norm, quadratic scaling and norm insensitivity") {
  const WellParams p = testhelp::gaas();
  const auto states = solve_all_states(p);
  for (const BoundState& st : states) CHECK(std::fabs(quad_norm(st) - 1.0) < 1e-10);

  BoundState doubled = states[0];
  for (double* x : {&doubled.coeffs.a1, &doubled.coeffs.a2, &doubled.coeffs.b1,
                    &doubled.coeffs.b2, &doubled.coeffs.b3, &doubled.coeffs.b4,
                    &doubled.coeffs.c1, &doubled.coeffs.c2})
    *x *= 2.0;
  CHECK(std::fabs(quad_norm(doubled) - 4.0) < 1e-9);

  const double n1 = quad_norm(states[0], 1e-13, 5);
  const double n2 = quad_norm(states[0], 1e-13, 6);  // doubled panel resolution
  CHECK(std::fabs(n1 - n2) < 1e-11);
}

TEST_CASE("analytic norm agrees with quadrature") {
  const WellParams p = testhelp::gaas();
  for (const BoundState& st : solve_all_states(p))
    CHECK(analytic_norm(st.coeffs, st.level.waves, p) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("orthonormality of all solved pairs") {
  const WellParams p = testhelp::gaas();
  const auto states = solve_all_states(p);
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i; j < states.size(); ++j) {
      const double ov = quad_overlap(states[i], states[j]);
      if (i == j)
        CHECK(std::fabs(ov - 1.0) < 1e-10);
      else
        CHECK(std::fabs(ov) < 1e-8);
    }
}

TEST_CASE("eigenfunction parity under reflection about the centre") {
  const WellParams p = testhelp::gaas();
  const auto states = solve_all_states(p);
  const double L = 2.0 * p.a + p.b;
  for (const BoundState& st : states) {
    const double sign = st.level.parity == Parity::Symmetric ? 1.0 : -1.0;
    for (int i = 0; i < 50; ++i) {
      const double x = -3.0 + (L + 6.0) * i / 49.0;
      CHECK(std::fabs(eval_psi(x, st) - sign * eval_psi(L - x, st)) < 1e-10);
    }
    if (st.level.parity == Parity::Antisymmetric)
      CHECK(std::fabs(eval_psi(p.a + 0.5 * p.b, st)) < 1e-10);
  }
}

TEST_CASE("pointwise agreement with the fd eigenvector") {
  const WellParams p = testhelp::gaas();
  const BoundState st = solve_state(p, find_levels(p)[0]);
  const FdGrid g = make_fd_grid(p, 0.005, 30.0);
  const auto fd = fd_solve(p, g, 1);
  REQUIRE(fd.size() == 1);
  double worst = 0.0;
  for (int i = 0; i < g.n; ++i)
    worst = std::max(worst, std::fabs(fd[0].psi[i] - eval_psi(fd_node_x(g, i), st)));
  CHECK(worst < 1e-4);
}

TEST_CASE("states above the barrier top go through the null-space route") {
  WellParams p = testhelp::gaas();
  p.vb = 0.06;
  const auto levels = find_levels(p);
  bool saw_propagating = false;
  for (const Level& lv : levels) {
    if (lv.energy < p.vb) continue;
    saw_propagating = true;
    CHECK_THROWS_AS((void)coefficients(lv, p), Error);  // closed form declines
    const BoundState st = solve_state(p, lv);
    for (double r : boundary_residuals(st)) CHECK(r < 1e-10);
    CHECK(std::fabs(quad_norm(st) - 1.0) < 1e-10);
    CHECK(eval_psi(0.5 * p.a, st) > 0.0);
  }
  CHECK(saw_propagating);
  // orthogonality across the regime boundary
  const auto states = solve_all_states(p);
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j)
      CHECK(std::fabs(quad_overlap(states[i], states[j])) < 1e-8);
}

TEST_CASE("a non-root energy is rejected") {
  const WellParams p = testhelp::gaas();
  Level fake = find_levels(p)[0];
  fake.energy *= 1.001;
  fake.waves = wavenumbers(fake.energy, p);
  CHECK_THROWS_AS((void)coefficients(fake, p), Error);
  CHECK_THROWS_AS((void)coefficients_nullspace(fake, p), Error);
}
