// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Tolerances are fixed here, not tuned at run time.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "dqw/dipole.hpp"
#include "dqw/eigenstates.hpp"
#include "dqw/fd_oracle.hpp"
#include "dqw/oracle_quad.hpp"
#include "dqw/spectrum.hpp"
#include "helpers.hpp"

using namespace dqw;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double s() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void verdict(int n, bool pass, const char* what, const std::string& detail, double secs,
             double budget) {
  const bool in_budget = secs < budget;
  if (!pass || !in_budget) ++g_failures;
  std::printf("[%s] criterion %d: %s  (%s; %.2f s%s)\n", pass && in_budget ? "PASS" : "FAIL", n,
              what, detail.c_str(), secs, in_budget ? "" : " OVER BUDGET");
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[200];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// gap E_2a - E_1s at b = 15 nm from the finite-difference oracle
// (Richardson-extrapolated, padding-converged); frozen as golden
constexpr double kGapGoldenB15 = 3.5088953159331804e-05;

}  // namespace

// 1. every closed-form level matches the fd oracle to relative 1e-6
static void criterion1() {
  Timer t;
  double worst = 0.0;
  bool ok = true;
  for (double b : {1.0, 3.0, 5.0, 8.0, 15.0}) {
    const WellParams p = testhelp::gaas(b);
    const auto levels = find_levels(p);
    const auto fd = fd_spectrum_converged(p, static_cast<int>(levels.size()));
    if (fd.energies.size() != levels.size()) {
      ok = false;
      continue;
    }
    for (std::size_t i = 0; i < levels.size(); ++i)
      worst = std::max(worst, std::fabs(levels[i].energy - fd.energies[i]) / levels[i].energy);
  }
  ok = ok && worst < 1e-6;
  verdict(1, ok, "spectrum matches the finite-difference oracle",
          fmt("max rel dev %.3e, tol 1e-6", worst), t.s(), 60.0);
}

// 2. determinant factorization identity on random parameter sets
static void criterion2() {
  Timer t;
  std::mt19937 rng(20260810);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  double worst = 0.0;
  for (int set = 0; set < 5; ++set) {
    WellParams p;
    p.a = 2.0 + 8.0 * U(rng);
    p.b = 0.5 + 9.5 * U(rng);
    p.vb = 0.05 + 0.25 * U(rng);
    p.vc = p.vb + 0.2 * U(rng);
    p.m0 = 0.03 + 0.12 * U(rng);
    p.mb = 0.03 + 0.12 * U(rng);
    p.mc = 0.03 + 0.12 * U(rng);
    for (int i = 0; i < 100; ++i) {
      const double e = p.vb * (i + 0.5) / 100.0;
      const double lhs = det_full_matrix(e, p);
      const double rhs = -std::pow(p.m0, -4.0) * std::pow(p.mc, -2.0) * std::pow(p.mb, -2.0) *
                         det_scaled(e, Parity::Symmetric, p) *
                         det_scaled(e, Parity::Antisymmetric, p);
      worst = std::max(worst, std::fabs(lhs - rhs) / std::fabs(lhs));
    }
  }
  verdict(2, worst < 1e-8, "8x8 determinant factorizes into D_s D_a",
          fmt("max rel dev %.3e, tol 1e-8", worst), t.s(), 1.0);
}

// 3. eigenfunction contracts: residuals, norms, orthogonality
static void criterion3() {
  Timer t;
  double wres = 0.0, wnorm = 0.0, worth = 0.0;
  for (double b : {1.0, 3.0, 5.0, 8.0, 15.0}) {
    const auto states = solve_all_states(testhelp::gaas(b));
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (double r : boundary_residuals(states[i])) wres = std::max(wres, r);
      wnorm = std::max(wnorm, std::fabs(quad_norm(states[i]) - 1.0));
      for (std::size_t j = i + 1; j < states.size(); ++j)
        worth = std::max(worth, std::fabs(quad_overlap(states[i], states[j])));
    }
  }
  const bool ok = wres < 1e-10 && wnorm < 1e-10 && worth < 1e-8;
  verdict(3, ok, "boundary residuals, unit norms, orthogonality",
          fmt("res %.1e norm %.1e orth %.1e", wres, wnorm, worth), t.s(), 10.0);
}

// 4. closed-form dipole equals region-wise quadrature component by component
static void criterion4() {
  Timer t;
  double worst = 0.0;
  bool ok = true;
  for (int b = 1; b <= 15; ++b) {
    const WellParams p = testhelp::equal_mass(b);
    const auto levels = find_levels(p);
    if (levels.size() < 3) {
      ok = false;
      continue;
    }
    const BoundState s1 = solve_state(p, levels[0]);
    const BoundState a2 = solve_state(p, levels[1]);
    const BoundState s3 = solve_state(p, levels[2]);
    for (const auto& pair : {std::pair{&s1, &a2}, std::pair{&s3, &a2}}) {
      const DipoleBreakdown cf = dipole_closed_form(*pair.first, *pair.second);
      const DipoleBreakdown nq = dipole_numeric_breakdown(*pair.first, *pair.second);
      worst = std::max({worst, std::fabs(cf.d1 - nq.d1) / std::fabs(nq.d1),
                        std::fabs(cf.d2 - nq.d2) / std::fabs(nq.d2),
                        std::fabs(cf.d3 - nq.d3) / std::fabs(nq.d3),
                        std::fabs(cf.total - nq.total) / std::fabs(nq.total)});
    }
  }
  ok = ok && worst < 1e-8;
  verdict(4, ok, "closed-form dipole vs quadrature (components and totals)",
          fmt("max rel dev %.3e, tol 1e-8", worst), t.s(), 10.0);
}

// 5. tunnel splitting shrinks monotonically and reaches the golden gap
static void criterion5() {
  Timer t;
  bool monotone = true;
  double prev = 1e9, gap15 = 0.0;
  for (int b = 1; b <= 15; ++b) {
    const auto levels = find_levels(testhelp::gaas(b), 2);
    const double gap = levels[1].energy - levels[0].energy;
    monotone = monotone && gap < prev;
    prev = gap;
    if (b == 15) gap15 = gap;
  }
  const bool ok = monotone && gap15 < 2e-3 && std::fabs(gap15 - kGapGoldenB15) < 2e-9;
  verdict(5, ok, "splitting decreases with b; b=15 gap at golden value",
          fmt("gap(15) = %.6e eV, golden dev %.1e", gap15, std::fabs(gap15 - kGapGoldenB15)),
          t.s(), 30.0);
}

// 6. infinite-well trend bands for the two transitions
static void criterion6() {
  Timer t;
  std::vector<double> bs, d12;
  double worst23 = 0.0;
  const double flat = dipole_infinite_well_approx(6.0, 0.0, Transition::TwoA_ThreeS);
  for (int b = 1; b <= 15; ++b) {
    const WellParams p = testhelp::gaas(b);
    const auto levels = find_levels(p);
    const BoundState s1 = solve_state(p, levels[0]);
    const BoundState a2 = solve_state(p, levels[1]);
    const BoundState s3 = solve_state(p, levels[2]);
    bs.push_back(b);
    d12.push_back(std::fabs(dipole_numeric(s1, a2)));
    worst23 = std::max(worst23, std::fabs(std::fabs(dipole_numeric(s3, a2)) - flat) / flat);
  }
  // least-squares slope of |d_1s2a| against b
  double sb = 0, sd = 0, sbb = 0, sbd = 0;
  const double n = static_cast<double>(bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) {
    sb += bs[i];
    sd += d12[i];
    sbb += bs[i] * bs[i];
    sbd += bs[i] * d12[i];
  }
  const double slope = (n * sbd - sb * sd) / (n * sbb - sb * sb);
  const bool slope_ok = std::fabs(slope - 0.5) < 0.25 * 0.5;
  const bool flat_ok = worst23 < 0.35;
  verdict(6, slope_ok && flat_ok, "dipole trends against the infinite-well estimates",
          fmt("slope %.4f (band 0.375..0.625); max 2a-3s dev %.0f%% (band 35%%)", slope,
              100.0 * worst23),
          t.s(), 30.0);
}

// 7. numeric dipole between same-parity states vanishes
static void criterion7() {
  Timer t;
  double worst = 0.0;
  for (double b : {1.0, 5.0, 15.0}) {
    const auto states = solve_all_states(testhelp::gaas(b));
    for (std::size_t i = 0; i < states.size(); ++i)
      for (std::size_t j = i + 1; j < states.size(); ++j)
        if (states[i].level.parity == states[j].level.parity)
          worst = std::max(worst, std::fabs(dipole_numeric(states[i], states[j])));
  }
  verdict(7, worst < 1e-10, "parity selection rule", fmt("max |d| %.2e nm, tol 1e-10", worst),
          t.s(), 10.0);
}

// 8. b = 0 and b -> infinity reductions
static void criterion8() {
  Timer t;
  double worst0 = 0.0;
  {
    const WellParams p = testhelp::gaas(0.0);
    const auto iso = testhelp::single_well_levels(2.0 * p.a, p.m0, p.mc, p.vc);
    const auto levels = find_levels(p);
    if (levels.size() != iso.size())
      worst0 = 1.0;
    else
      for (std::size_t i = 0; i < iso.size(); ++i)
        worst0 = std::max(worst0, std::fabs(levels[i].energy - iso[i]));
  }
  double worst200 = 0.0;
  {
    const WellParams p = testhelp::gaas(200.0);
    const auto iso = testhelp::single_well_levels(p.a, p.m0, p.mc, p.vc);
    for (const Level& lv : find_levels(p)) {
      double best = 1.0;
      for (double e : iso) best = std::min(best, std::fabs(lv.energy - e));
      worst200 = std::max(worst200, best);
    }
  }
  const bool ok = worst0 < 1e-8 && worst200 < 1e-8;
  verdict(8, ok, "b=0 and b=200 reductions to single wells",
          fmt("b=0 dev %.2e eV; b=200 dev %.2e eV; tol 1e-8", worst0, worst200), t.s(), 10.0);
}

// 9. measured convergence order of the fd oracle (exactly halving spacings)
static void criterion9() {
  Timer t;
  const WellParams p = testhelp::gaas();
  double e[3];
  int idx = 0;
  for (double h : {1.0 / 16, 1.0 / 32, 1.0 / 64})
    e[idx++] = fd_solve(p, make_fd_grid(p, h, 24.0), 1)[0].energy;
  const double order = std::log2(std::fabs(e[0] - e[1]) / std::fabs(e[1] - e[2]));
  verdict(9, order > 1.9 && order < 2.1, "fd oracle converges at second order",
          fmt("measured order %.4f (band 1.9..2.1)", order), t.s(), 10.0);
}

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (g_failures)
    std::printf("%d criterion(s) FAILED\n", g_failures);
  else
    std::printf("all criteria passed\n");
  return g_failures;
}
