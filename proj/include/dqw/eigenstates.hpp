#pragma once

#include <array>

#include "dqw/params.hpp"
#include "dqw/spectrum.hpp"

namespace dqw {

// Amplitudes of the piecewise wavefunction, all nm^-1/2:
//   region 1 (x < 0):         b1 e^{chi_c x}
//   region 2 (0 <= x <= a):   a1 sin kx + c1 cos kx
//   region 3 (a < x < a+b):   evanescent:  b2 e^{chi_b (a-x)} + b3 e^{-chi_b (a+b-x)}
//                             propagating: b2 cos(kappa_b u) + b3 sin(kappa_b u),
//                             u = x - a - b/2
//   region 4 (a+b <= x <= 2a+b): a2 sin k(2a+b-x) + c2 cos k(2a+b-x)
//   region 5 (x > 2a+b):      b4 e^{chi_c (2a+b-x)}
struct CoefficientSet {
  double a1, a2, b1, b2, b3, b4, c1, c2;
};

struct BoundState {
  Level level;
  CoefficientSet coeffs;  // normalized, psi > 0 in the left well interior
  WellParams params;
};

// Closed-form coefficients (evanescent regime only): all eight amplitudes
// expressed through the normalization constant, with the sign of b2/b3
// fixed by derivative continuity at x = a and x = a+b (both candidates are
// tried; exactly one must pass at 1e-8).  The result is normalized to unit
// L2 norm and flipped so psi(a/2) > 0.
// Errors: NotARoot if the determinant residual at level.energy is too large,
// RegimeUnsupported for energy >= vb.
CoefficientSet coefficients(const Level& level, const WellParams& p);

// Independent route: null-space vector of the 8x8 matching system (works in
// both regimes), rescaled to unit norm and the same sign convention.
CoefficientSet coefficients_nullspace(const Level& level, const WellParams& p);

// Closed form below the barrier top, null-space solve above it.
BoundState solve_state(const WellParams& p, const Level& level);
std::vector<BoundState> solve_all_states(const WellParams& p, int max_levels = -1,
                                         Exec ex = Exec::Par);

// Residuals of the eight matching conditions, each normalized by the
// largest coefficient magnitude.
std::array<double, 8> boundary_residuals(const BoundState& state);

double eval_psi(double x, const BoundState& state);

// Exact piecewise L2 norm integral of an (unnormalized) coefficient set.
double analytic_norm(const CoefficientSet& c, const WaveNumbers& w, const WellParams& p);

// Normalization constants C_2s / C_2a of the closed-form solution.
// c2_general is valid for arbitrary masses; c2_equal_mass is the reduction
// for m0 == mb == mc.  In that reduction the confinement term of the
// bracket is chi_b/chi_c (it is sometimes quoted as chi_b^2/chi_c^2, which
// agrees only when vb == vc; the general-mass form and direct quadrature
// both give chi_b/chi_c).
double c2_general(Parity parity, const WaveNumbers& w, const WellParams& p);
double c2_equal_mass(Parity parity, const WaveNumbers& w, const WellParams& p);

}  // namespace dqw
