#include "dqw/spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

namespace dqw {

namespace {

struct DetTerms {
  double t[4];
  double value() const { return 2.0 * (t[0] + t[1] + t[2] + t[3]); }
  double scale() const {
    return 2.0 * (std::fabs(t[0]) + std::fabs(t[1]) + std::fabs(t[2]) + std::fabs(t[3]));
  }
};

// e^{-b chi_b} D_parity written through half-width hyperbolics:
//   D_s = 2 e^{b chi/2} [ -k m0 (chi_c mb Ch + chi_b mc Sh) cos ak
//                         + (k^2 mb mc Ch - chi_b chi_c m0^2 Sh) sin ak ],
//   D_a = -2 e^{b chi/2} [ k m0 (chi_c mb Sh + chi_b mc Ch) cos ak
//                          - (k^2 mb mc Sh - chi_b chi_c m0^2 Ch) sin ak ],
// Ch = cosh(b chi/2), Sh = sinh(b chi/2).  Multiplying by e^{-b chi} turns
// Ch, Sh into the bounded (1 +- e^{-b chi})/2.  The bracket itself is an
// entire function of E; continuation above the barrier top is
// Ch -> cos(b kappa/2), chi Sh -> -kappa sin(b kappa/2).
DetTerms det_terms(double energy, Parity parity, const WellParams& p) {
  const WaveNumbers w = wavenumbers(energy, p);
  const double k = w.k, xc = w.chi_c;
  const double sa = std::sin(p.a * k), ca = std::cos(p.a * k);
  DetTerms d;
  if (w.barrier.kind == BarrierMode::Evanescent) {
    const double xb = w.barrier.value;
    const double ch = 0.5 * (1.0 + std::exp(-p.b * xb));
    const double sh = 0.5 * (1.0 - std::exp(-p.b * xb));
    if (parity == Parity::Symmetric) {
      d.t[0] = -k * p.m0 * xc * p.mb * ch * ca;
      d.t[1] = -k * p.m0 * xb * p.mc * sh * ca;
      d.t[2] = k * k * p.mb * p.mc * ch * sa;
      d.t[3] = -xb * xc * p.m0 * p.m0 * sh * sa;
    } else {
      d.t[0] = -k * p.m0 * xc * p.mb * sh * ca;
      d.t[1] = -k * p.m0 * xb * p.mc * ch * ca;
      d.t[2] = k * k * p.mb * p.mc * sh * sa;
      d.t[3] = -xb * xc * p.m0 * p.m0 * ch * sa;
    }
    return d;
  }
  const double kb = w.barrier.value;
  const double cb = std::cos(0.5 * p.b * kb), sb = std::sin(0.5 * p.b * kb);
  if (parity == Parity::Symmetric) {
    d.t[0] = -k * p.m0 * xc * p.mb * cb * ca;
    d.t[1] = k * p.m0 * kb * p.mc * sb * ca;
    d.t[2] = k * k * p.mb * p.mc * cb * sa;
    d.t[3] = kb * xc * p.m0 * p.m0 * sb * sa;
  } else {
    d.t[0] = -k * p.m0 * xc * p.mb * sb * ca;
    d.t[1] = -k * p.m0 * kb * p.mc * cb * ca;
    d.t[2] = k * k * p.mb * p.mc * sb * sa;
    d.t[3] = -kb * xc * p.m0 * p.m0 * cb * sa;
  }
  return d;
}

}  // namespace

double det_scaled(double energy, Parity parity, const WellParams& p) {
  return det_terms(energy, parity, p).value();
}

DetParts det_scaled_parts(double energy, Parity parity, const WellParams& p) {
  const DetTerms d = det_terms(energy, parity, p);
  return {d.value(), d.scale()};
}

double det_special_equal_barrier(double energy, Parity parity, const WellParams& p) {
  if (p.vb != p.vc || p.mb != p.mc)
    fail(Errc::PreconditionViolated, "equal-barrier determinant requires vb == vc and mb == mc");
  const WaveNumbers w = wavenumbers(energy, p);
  const double k = w.k, xb = w.barrier.chi_b();
  const double sa = std::sin(p.a * k), ca = std::cos(p.a * k);
  const double eb = std::exp(-p.b * xb);
  const double plus = k * k * p.mb * p.mb + xb * xb * p.m0 * p.m0;
  const double minus = k * k * p.mb * p.mb - xb * xb * p.m0 * p.m0;
  const double cos_term = -2.0 * k * xb * p.m0 * p.mb * ca;
  if (parity == Parity::Symmetric) return cos_term + (eb * plus + minus) * sa;
  return cos_term - (eb * plus - minus) * sa;
}

double det_full_matrix(double energy, const WellParams& p) {
  if (!(energy > 0.0) || !(energy < p.vb))
    fail(Errc::EnergyOutOfRange, "full-matrix determinant requires 0 < E < vb");
  const WaveNumbers w = wavenumbers(energy, p);
  const double k = w.k, xb = w.barrier.chi_b(), xc = w.chi_c;
  const double sa = std::sin(p.a * k), ca = std::cos(p.a * k);
  const double eb = std::exp(-p.b * xb);

  Eigen::Matrix<double, 8, 8> m = Eigen::Matrix<double, 8, 8>::Zero();
  // columns: A1 B1 C1 B2 B3 A2 C2 B4
  m(0, 0) = -k / p.m0;        // d/dx at 0
  m(0, 1) = xc / p.mc;
  m(1, 1) = 1.0;              // value at 0
  m(1, 2) = -1.0;
  m(2, 0) = sa;               // value at a
  m(2, 2) = ca;
  m(2, 3) = -1.0;
  m(2, 4) = -eb;
  m(3, 0) = k * ca / p.m0;    // d/dx at a
  m(3, 2) = -k * sa / p.m0;
  m(3, 3) = xb / p.mb;
  m(3, 4) = -xb * eb / p.mb;
  m(4, 3) = eb;               // value at a+b
  m(4, 4) = 1.0;
  m(4, 5) = -sa;
  m(4, 6) = -ca;
  m(5, 3) = -xb * eb / p.mb;  // d/dx at a+b
  m(5, 4) = xb / p.mb;
  m(5, 5) = k * ca / p.m0;
  m(5, 6) = -k * sa / p.m0;
  m(6, 6) = 1.0;              // value at 2a+b
  m(6, 7) = -1.0;
  m(7, 5) = -k / p.m0;        // d/dx at 2a+b
  m(7, 7) = xc / p.mc;
  return m.partialPivLu().determinant();
}

namespace {

struct Root {
  double k;
  Parity parity;
};

double refine_root(double lo, double hi, double flo, double fhi, Parity parity,
                   const WellParams& p) {
  auto f = [&](double k) { return det_scaled(energy_from_k(k, p), parity, p); };
  for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
    double cand;
    if (it % 2 == 1 && fhi != flo) {
      cand = hi - fhi * (hi - lo) / (fhi - flo);  // secant step
      const double margin = 0.05 * (hi - lo);
      if (!(cand > lo + margin) || !(cand < hi - margin)) cand = 0.5 * (lo + hi);
    } else {
      cand = 0.5 * (lo + hi);
    }
    const double fc = f(cand);
    if (fc == 0.0) return cand;
    if ((flo < 0.0) != (fc < 0.0)) {
      hi = cand;
      fhi = fc;
    } else {
      lo = cand;
      flo = fc;
    }
  }
  return 0.5 * (lo + hi);
}

// One parity's roots on (0, kmax), rescanned at double density if two
// refined roots collapse (same-parity eigenvalues are simple; a collision
// is a scan artifact).
std::vector<double> scan_parity(Parity parity, double kmax, int base_n, const WellParams& p,
                                Exec ex) {
  for (int densify = 0;; ++densify) {
    const int n = base_n << densify;
    const double dk = kmax / n;
    std::vector<double> ks(n + 1);
    ks[0] = dk * 1e-6;
    for (int i = 1; i < n; ++i) ks[i] = dk * i;
    ks[n] = kmax * (1.0 - 1e-12);

    std::vector<double> fv(n + 1);
    for_indexed(ks.size(), ex,
                [&](std::size_t i) { fv[i] = det_scaled(energy_from_k(ks[i], p), parity, p); });

    struct Bracket {
      double lo, hi, flo, fhi;
      bool exact = false;
      double at = 0.0;
    };
    std::vector<Bracket> brs;
    for (int i = 0; i <= n; ++i) {
      if (fv[i] == 0.0) {
        // grid point hit: a crossing root has opposite-sign neighbours; a
        // touching zero (e.g. the antisymmetric artifact at E == vb) does not
        if (i > 0 && i < n && (fv[i - 1] < 0.0) != (fv[i + 1] < 0.0))
          brs.push_back({ks[i - 1], ks[i + 1], fv[i - 1], fv[i + 1], true, ks[i]});
        continue;
      }
      if (i < n && fv[i + 1] != 0.0 && (fv[i] < 0.0) != (fv[i + 1] < 0.0))
        brs.push_back({ks[i], ks[i + 1], fv[i], fv[i + 1]});
    }

    std::vector<double> roots(brs.size());
    for_indexed(brs.size(), ex, [&](std::size_t i) {
      roots[i] = brs[i].exact ? brs[i].at
                              : refine_root(brs[i].lo, brs[i].hi, brs[i].flo, brs[i].fhi,
                                            parity, p);
    });
    std::sort(roots.begin(), roots.end());

    bool collision = false;
    for (std::size_t i = 1; i < roots.size(); ++i)
      if (roots[i] - roots[i - 1] < 1e-9) collision = true;
    if (!collision || densify >= 4) {
      if (collision) {  // keep one root per cluster
        std::vector<double> dedup;
        for (double r : roots)
          if (dedup.empty() || r - dedup.back() >= 1e-9) dedup.push_back(r);
        return dedup;
      }
      return roots;
    }
  }
}

}  // namespace

std::vector<Level> find_levels(const WellParams& params, int max_levels, Exec ex) {
  const WellParams p = validate(params);
  const double kmax = k_from_energy(p.vc, p);
  const int base_n =
      static_cast<int>(std::ceil(40.0 * (2.0 * p.a + p.b) * kmax / M_PI)) + 1;

  std::vector<Root> roots;
  for (Parity parity : {Parity::Symmetric, Parity::Antisymmetric})
    for (double k : scan_parity(parity, kmax, base_n, p, ex)) roots.push_back({k, parity});

  // energy order; a tie (tunnel splitting below resolution) keeps the
  // symmetric member first
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    const double tie = 1e-10 * std::max(1.0, std::max(a.k, b.k));
    if (std::fabs(a.k - b.k) <= tie)
      return a.parity == Parity::Symmetric && b.parity == Parity::Antisymmetric;
    return a.k < b.k;
  });

  if (roots.empty()) fail(Errc::NoBoundStates, "no bound levels in (0, vc)");

  std::vector<Level> out;
  for (const Root& r : roots) {
    if (max_levels >= 0 && static_cast<int>(out.size()) >= max_levels) break;
    Level lv;
    lv.n = static_cast<int>(out.size()) + 1;
    lv.parity = r.parity;
    lv.energy = energy_from_k(r.k, p);
    lv.waves = wavenumbers(lv.energy, p);
    const DetParts d = det_scaled_parts(lv.energy, r.parity, p);
    if (std::fabs(d.value) > 1e-8 * d.scale)
      fail(Errc::NotARoot, "refined root failed the residual check at E=" +
                               std::to_string(lv.energy));
    out.push_back(lv);
  }
  return out;
}

}  // namespace dqw
