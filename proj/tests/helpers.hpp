#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "dqw/params.hpp"

namespace testhelp {

// GaAs/Ga0.8Al0.2As heterostructure numbers used throughout
inline dqw::WellParams gaas(double b = 5.0) {
  return {6.0, b, 0.1671, 0.1671, 0.067, 0.0836, 0.0836};
}

// same geometry with one mass everywhere (closed-form dipole regime)
inline dqw::WellParams equal_mass(double b = 5.0) {
  return {6.0, b, 0.1671, 0.1671, 0.067, 0.067, 0.067};
}

inline std::vector<double> bracket_roots(const std::function<double(double)>& f, double lo,
                                         double hi, int n) {
  std::vector<double> roots;
  double xp = lo, fp = f(lo);
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double fx = f(x);
    if (fp != 0.0 && fx != 0.0 && (fp < 0.0) != (fx < 0.0)) {
      double a = xp, b = x, fa = fp;
      for (int it = 0; it < 200 && (b - a) > 1e-15 * b; ++it) {
        const double m = 0.5 * (a + b), fm = f(m);
        if ((fa < 0.0) != (fm < 0.0))
          b = m;
        else {
          a = m;
          fa = fm;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    xp = x;
    fp = fx;
  }
  return roots;
}

// independent single square well oracle: width w, inner mass mi, outer mass
// mo, depth v.  Returns all bound energies (even and odd about the centre).
inline std::vector<double> single_well_levels(double w, double mi, double mo, double v) {
  const double kmax = std::sqrt(mi * v / dqw::kC);
  auto chi = [&](double k) { return std::sqrt(mo * (v - dqw::kC * k * k / mi) / dqw::kC); };
  auto even = [&](double k) {
    return k * mo * std::sin(0.5 * k * w) - mi * chi(k) * std::cos(0.5 * k * w);
  };
  auto odd = [&](double k) {
    return k * mo * std::cos(0.5 * k * w) + mi * chi(k) * std::sin(0.5 * k * w);
  };
  std::vector<double> out;
  for (double k : bracket_roots(even, kmax * 1e-9, kmax * (1 - 1e-12), 4000))
    out.push_back(dqw::kC * k * k / mi);
  for (double k : bracket_roots(odd, kmax * 1e-9, kmax * (1 - 1e-12), 4000))
    out.push_back(dqw::kC * k * k / mi);
  std::sort(out.begin(), out.end());
  return out;
}

// textbook equal-mass double-well condition
//   2 cos ak + (xi - 1/xi) sin ak +/- (xi + 1/xi) e^{-chi b} sin ak = 0,
// xi = chi/k; the plus sign is the antisymmetric family.  Used as an
// independent root oracle for the m0 == mb, vb == vc specialization.
inline std::vector<double> textbook_equal_mass_levels(const dqw::WellParams& p,
                                                      bool antisymmetric) {
  const double kmax = std::sqrt(p.m0 * p.vc / dqw::kC);
  auto f = [&](double k) {
    const double E = dqw::kC * k * k / p.m0;
    const double chi = std::sqrt(p.m0 * (p.vb - E) / dqw::kC);
    const double xi = chi / k;
    const double s = antisymmetric ? 1.0 : -1.0;
    return 2.0 * std::cos(p.a * k) + (xi - 1.0 / xi) * std::sin(p.a * k) +
           s * (xi + 1.0 / xi) * std::exp(-chi * p.b) * std::sin(p.a * k);
  };
  std::vector<double> out;
  for (double k : bracket_roots(f, kmax * 1e-6, kmax * (1 - 1e-9), 6000))
    out.push_back(dqw::kC * k * k / p.m0);
  return out;
}

}  // namespace testhelp
