#pragma once

#include "dqw/eigenstates.hpp"

namespace dqw {

// Contributions of the five potential regions to the dipole matrix element
// integral psi_s (x - a - b/2) psi_a dx between opposite-parity states; by
// mirror symmetry region 5 equals region 1 and region 4 equals region 2.
struct DipoleBreakdown {
  double d1, d2, d3;  // nm
  double total;       // = 2 d1 + 2 d2 + d3
};

// Closed-form dipole for the equal-mass, vb == vc case, both states in the
// evanescent regime, opposite parities (standard decomposition with
// normalization folded into the region-1/2 amplitudes; see dipole.cpp for
// the exact expressions and the barrier-integral derivation).  Signs follow
// the states' own sign convention (psi > 0 in the left well), so the total
// is directly comparable with dipole_numeric.
DipoleBreakdown dipole_closed_form(const BoundState& sym, const BoundState& asym);

// Adaptive per-region quadrature of psi_i (x - a - b/2) psi_j.
double dipole_numeric(const BoundState& i, const BoundState& j, double abs_tol = 1e-10);
DipoleBreakdown dipole_numeric_breakdown(const BoundState& i, const BoundState& j,
                                         double abs_tol = 1e-10);

enum class Transition { OneS_TwoA, TwoA_ThreeS };

// Infinite-well estimates: half-period sines in the wells and nothing
// elsewhere give (a+b)/2 for 1s-2a and 16 a / (9 pi^2) for 2a-3s.
double dipole_infinite_well_approx(double a, double b, Transition t);

}  // namespace dqw
