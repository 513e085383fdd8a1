#include "dqw/params.hpp"

#include <cmath>
#include <string>

namespace dqw {

WellParams validate(const WellParams& raw) {
  if (!(raw.a > 0.0) || !(raw.b >= 0.0) || !std::isfinite(raw.a) || !std::isfinite(raw.b))
    fail(Errc::NonPositiveDimension,
         "well width a must be > 0 and barrier width b >= 0 (got a=" + std::to_string(raw.a) +
             ", b=" + std::to_string(raw.b) + ")");
  if (!(raw.m0 > 0.0) || !(raw.mb > 0.0) || !(raw.mc > 0.0))
    fail(Errc::NonPositiveMass, "all effective masses must be > 0");
  if (!(raw.vb > 0.0) || !(raw.vc > 0.0))
    fail(Errc::NonPositivePotential, "barrier heights must be > 0");
  if (raw.vb > raw.vc)
    fail(Errc::BarrierAboveConfinement, "vb=" + std::to_string(raw.vb) + " exceeds vc=" +
                                            std::to_string(raw.vc));
  return raw;
}

WaveNumbers wavenumbers(double energy, const WellParams& p) {
  if (!(energy > 0.0) || !(energy < p.vc))
    fail(Errc::EnergyOutOfRange,
         "energy " + std::to_string(energy) + " outside (0, vc=" + std::to_string(p.vc) + ")");
  WaveNumbers w;
  w.k = std::sqrt(p.m0 * energy / kC);
  w.chi_c = std::sqrt(p.mc * (p.vc - energy) / kC);
  if (energy <= p.vb)  // E == vb sits on the evanescent branch with chi_b = 0
    w.barrier = {BarrierMode::Evanescent, std::sqrt(p.mb * (p.vb - energy) / kC)};
  else
    w.barrier = {BarrierMode::Propagating, std::sqrt(p.mb * (energy - p.vb) / kC)};
  return w;
}

}  // namespace dqw
