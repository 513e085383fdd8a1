#pragma once

#include <vector>

#include "dqw/params.hpp"

namespace dqw::detail {

// Quadrature breakpoints at the four interfaces plus truncated tails.
// decay is the tail decay rate of the integrand (2 chi_c for psi^2-type
// integrands, chi_c,i + chi_c,j for products).
inline std::vector<double> region_panels(const WellParams& p, double decay) {
  const double tail = 45.0 / decay;  // integrand below ~1e-16 of its peak
  std::vector<double> pts = {-tail, 0.0};
  pts.push_back(p.a);
  if (p.b > 0.0) pts.push_back(p.a + p.b);
  pts.push_back(2.0 * p.a + p.b);
  pts.push_back(2.0 * p.a + p.b + tail);
  return pts;
}

inline bool same_params(const WellParams& x, const WellParams& y) {
  return x.a == y.a && x.b == y.b && x.vb == y.vb && x.vc == y.vc && x.m0 == y.m0 &&
         x.mb == y.mb && x.mc == y.mc;
}

}  // namespace dqw::detail
