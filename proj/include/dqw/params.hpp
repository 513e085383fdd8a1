#pragma once

#include <cmath>

#include "dqw/error.hpp"

namespace dqw {

// hbar^2/(2 m_e) in eV nm^2 (CODATA hbar = 1.054571817e-34 J s,
// m_e = 9.1093837015e-31 kg, e = 1.602176634e-19 C).  With lengths in nm,
// energies in eV and masses in units of m_e every quantity below is O(1).
inline constexpr double kC = 0.03809982;

// Symmetric double well: two wells of width a separated by a barrier of
// width b and height vb, confined on both sides by barriers of height vc.
// Effective masses: m0 in the wells, mb in the central barrier, mc in the
// confinement regions.  Lengths nm, energies eV, masses in m_e.
struct WellParams {
  double a;
  double b;
  double vb;
  double vc;
  double m0;
  double mb;
  double mc;
};

// Throws Error on invalid input, returns the parameters unchanged otherwise.
WellParams validate(const WellParams& raw);

struct BarrierMode {
  enum Kind { Evanescent, Propagating } kind;
  double value;  // chi_b (Evanescent) or kappa_b (Propagating), nm^-1

  double chi_b() const {
    if (kind != Evanescent) fail(Errc::RegimeUnsupported, "barrier mode is propagating");
    return value;
  }
  double kappa_b() const {
    if (kind != Propagating) fail(Errc::RegimeUnsupported, "barrier mode is evanescent");
    return value;
  }
};

struct WaveNumbers {
  double k;      // well wavevector, nm^-1;  E = kC k^2 / m0
  double chi_c;  // confinement decay constant, nm^-1
  BarrierMode barrier;
};

// Requires 0 < energy < vc.  energy == vb is assigned to the evanescent
// branch with chi_b = 0.
WaveNumbers wavenumbers(double energy, const WellParams& p);

inline double energy_from_k(double k, const WellParams& p) { return kC * k * k / p.m0; }
inline double k_from_energy(double energy, const WellParams& p) {
  return std::sqrt(p.m0 * energy / kC);
}

}  // namespace dqw
