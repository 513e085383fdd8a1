#pragma once

#include <vector>

#include "dqw/parallel.hpp"
#include "dqw/params.hpp"

namespace dqw {

// Finite-difference ground truth for the spectrum.  Kept independent of the
// closed-form modules on purpose: this header pulls in params only.
//
// Discretization of  -kC d/dx[(1/m) dpsi/dx] + V psi = E psi  on a uniform
// grid with Dirichlet ends:
//   * interfaces 0, a, a+b, 2a+b are snapped onto grid nodes (h is chosen
//     as an exact common divisor of a, b and the padding),
//   * 1/m is sampled at cell faces x_i +- h/2; with interfaces on nodes each
//     face lies strictly inside one layer, which reproduces the mass-jump
//     matching to O(h^2) (averaging node masses instead degrades the
//     interface cells to O(h)),
//   * V is cell-averaged, so interface nodes carry the mean of the two
//     adjacent layer potentials.
// The resulting matrix is symmetric tridiagonal; eigenvalues come from
// Sturm-sequence bisection, eigenvectors from inverse iteration.

struct FdGrid {
  double x0, x1;  // domain ends (Dirichlet), nm
  int n;          // interior node count
  double h;       // spacing, nm; h = (x1 - x0)/(n + 1)
};

// Grid with interfaces on nodes, spacing <= h_target, padding >= pad on each
// side of the outer interfaces.
FdGrid make_fd_grid(const WellParams& p, double h_target, double pad);

struct FdLevel {
  double energy;            // eV
  std::vector<double> psi;  // on interior nodes, trapezoid-normalized
};

// Lowest `count` eigenpairs below vc at the given grid, no convergence
// check.  c_scale multiplies kC (test hook for corrupting the constant).
std::vector<FdLevel> fd_solve(const WellParams& p, const FdGrid& grid, int count,
                              double c_scale = 1.0, Exec ex = Exec::Par);

// Same, but additionally solves at h/2 and throws GridTooCoarse when any
// requested eigenvalue moves by more than 1e-7 eV.
std::vector<FdLevel> fd_spectrum(const WellParams& p, const FdGrid& grid, int count,
                                 double c_scale = 1.0, Exec ex = Exec::Par);

// Sturm count of eigenvalues below `energy` (no vectors).
int fd_count_below(const WellParams& p, const FdGrid& grid, double energy,
                   double c_scale = 1.0);

struct FdConverged {
  std::vector<double> energies;  // Richardson-extrapolated from h and h/2
  double pad;                    // padding after the doubling loop, nm
  double h;                      // base spacing used
};

// Self-contained converged spectrum: the padding is doubled until every
// requested eigenvalue is stable to 1e-9 eV (weakly bound levels near vc
// need far more room than the ground state), then h and h/2 solutions are
// Richardson-extrapolated.
FdConverged fd_spectrum_converged(const WellParams& p, int count, double h_target = 0.005,
                                  double pad0 = 12.0, double c_scale = 1.0,
                                  Exec ex = Exec::Par);

inline double fd_node_x(const FdGrid& g, int i) { return g.x0 + g.h * (i + 1); }

}  // namespace dqw
