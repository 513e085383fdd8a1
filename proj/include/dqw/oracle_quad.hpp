#pragma once

#include "dqw/eigenstates.hpp"

namespace dqw {

// Quadrature oracles.  Integrals run per region so interface kinks never
// straddle a panel; the confinement tails are truncated where the integrand
// is below 1e-16 of its peak.

// integral psi^2 dx; abs_tol is the quadrature target, min_splits forces
// extra uniform subdivision (resolution-doubling checks).
double quad_norm(const BoundState& state, double abs_tol = 1e-12, int min_splits = 0);

// integral psi_i psi_j dx; throws ParameterMismatch if the states belong to
// different parameter sets.
double quad_overlap(const BoundState& i, const BoundState& j, double abs_tol = 1e-12);

}  // namespace dqw
