#pragma once

#include <vector>

#include "dqw/parallel.hpp"
#include "dqw/params.hpp"

namespace dqw {

enum class Parity { Symmetric, Antisymmetric };

inline char parity_tag(Parity p) { return p == Parity::Symmetric ? 'S' : 'A'; }

struct Level {
  int n;  // 1-based index in the merged, energy-sorted spectrum
  Parity parity;
  double energy;  // eV
  WaveNumbers waves;
};

// Determinant value together with the sum of the magnitudes of its additive
// terms; |value|/scale is a dimensionless residual usable as a root test.
struct DetParts {
  double value;
  double scale;
};

// Spectrum determinant, rescaled by e^{-b chi_b} below the barrier top so
// that large b cannot overflow (the rescale factor is positive: same zeros).
// Above the barrier top the real-valued continuation chi_b -> i kappa_b is
// used (cosh(b chi/2) -> cos(b kappa/2), chi sinh(b chi/2) -> -kappa sin(b
// kappa/2)), with the unit-modulus continuation of the rescale factor
// dropped.  The two branches take the same value at energy == vb.
//
// Note: the antisymmetric determinant vanishes identically at energy == vb
// (the two barrier exponentials degenerate there); that zero touches without
// a sign change and is not an eigenvalue.
double det_scaled(double energy, Parity parity, const WellParams& p);
DetParts det_scaled_parts(double energy, Parity parity, const WellParams& p);

// Simplified determinant for the two-material case vb == vc, mb == mc (same
// rescaling, identical value to det_scaled by algebra).  In the compact
// "+/-" form of this determinant both the sign of the sin a k bracket and
// the sign of its e^{b chi} term flip between parities:
//   D_{s,a} = -2 k chi m0 mb e^{b chi} cos ak
//             +/- [ (k^2 mb^2 + chi^2 m0^2) +/- e^{b chi}(k^2 mb^2 - chi^2 m0^2) ] sin ak,
// upper signs symmetric, lower signs antisymmetric.
double det_special_equal_barrier(double energy, Parity parity, const WellParams& p);

// Determinant of the 8x8 boundary-matching system in the evanescent regime
// (0 < energy < vb).  Columns are ordered (A1,B1,C1,B2,B3,A2,C2,B4); rows
// are the matching conditions (d/dx at 0, value at 0, value at a, d/dx at a,
// value at a+b, d/dx at a+b, value at 2a+b, d/dx at 2a+b).  With this
// ordering
//   det = -m0^-4 mc^-2 mb^-2 * [e^{-b chi_b} D_s] * [e^{-b chi_b} D_a].
double det_full_matrix(double energy, const WellParams& p);

// All bound levels with 0 < E < vc, merged across parities, sorted by
// energy, indexed from 1.  Roots are bracketed on a uniform k grid with at
// least 40 samples per pi/(2a+b) and refined to relative 1e-12 in k.
// max_levels < 0 means all.
std::vector<Level> find_levels(const WellParams& p, int max_levels = -1, Exec ex = Exec::Par);

}  // namespace dqw
