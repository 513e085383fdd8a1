#include "dqw/eigenstates.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

namespace dqw {

namespace {

void check_is_root(const Level& level, const WellParams& p) {
  const DetParts d = det_scaled_parts(level.energy, level.parity, p);
  if (std::fabs(d.value) > 1e-8 * d.scale)
    fail(Errc::NotARoot,
         "energy " + std::to_string(level.energy) + " is not a spectrum root");
}

// Scaled hyperbolics of b*chi: e^{-t} sinh t, e^{-t} cosh t and e^{-t}.
struct ScaledHyp {
  double sh, ch, e;
};
ScaledHyp scaled_hyp(double t) {
  const double e2 = std::exp(-2.0 * t);
  return {0.5 * (1.0 - e2), 0.5 * (1.0 + e2), std::exp(-t)};
}

double derivative_match_residual(double a1, double c1, double b2, double b3, double k, double xb,
                     double ebm, const WellParams& p) {
  const double t1 = b2 * xb / p.mb;
  const double t2 = -b3 * xb * ebm / p.mb;
  const double t3 = a1 * k * std::cos(p.a * k) / p.m0;
  const double t4 = -c1 * k * std::sin(p.a * k) / p.m0;
  const double scale = std::fabs(t1) + std::fabs(t2) + std::fabs(t3) + std::fabs(t4);
  return std::fabs(t1 + t2 + t3 + t4) / scale;
}

CoefficientSet sign_fixed(CoefficientSet c, double k, double a) {
  double v = c.a1 * std::sin(0.5 * a * k) + c.c1 * std::cos(0.5 * a * k);
  if (v == 0.0) v = c.a1 * std::sin(0.25 * a * k) + c.c1 * std::cos(0.25 * a * k);
  if (v < 0.0) {
    for (double* x : {&c.a1, &c.a2, &c.b1, &c.b2, &c.b3, &c.b4, &c.c1, &c.c2}) *x = -*x;
  }
  return c;
}

}  // namespace

double c2_general(Parity parity, const WaveNumbers& w, const WellParams& p) {
  const double k = w.k, xb = w.barrier.chi_b(), xc = w.chi_c;
  const double g1 =
      (k * k * p.mc * p.mc * (1.0 + p.a * xc) + p.m0 * xc * xc * (p.mc + p.m0 * p.a * xc)) / xc;
  const ScaledHyp h = scaled_hyp(p.b * xb);
  const double cross = k * k * p.mc * p.mc + xc * xc * p.m0 * p.m0;
  const double kb2 = k * k * p.mb * p.mb, xb2 = xb * xb * p.m0 * p.m0;
  const double mix = k * k * p.mb + xb * xb * p.m0;
  double num, den;
  if (parity == Parity::Symmetric) {
    num = p.b * xb * k * k * p.mb * h.e + mix * h.sh;
    den = (kb2 - xb2) * h.e + (kb2 + xb2) * h.ch;
  } else {
    num = -p.b * xb * k * k * p.mb * h.e + mix * h.sh;
    den = (xb2 - kb2) * h.e + (kb2 + xb2) * h.ch;
  }
  const double g2 = p.mb * cross * num / (xb * den);
  return k * p.mc / std::sqrt(g1 + g2);
}

double c2_equal_mass(Parity parity, const WaveNumbers& w, const WellParams& p) {
  if (p.m0 != p.mb || p.m0 != p.mc)
    fail(Errc::PreconditionViolated, "equal-mass normalizer requires m0 == mb == mc");
  const double k = w.k, xb = w.barrier.chi_b(), xc = w.chi_c;
  const ScaledHyp h = scaled_hyp(p.b * xb);
  double num, den;
  if (parity == Parity::Symmetric) {
    num = p.b * xb * k * k * h.e + (k * k + xb * xb) * h.sh;
    den = (k * k - xb * xb) * h.e + (k * k + xb * xb) * h.ch;
  } else {
    num = -p.b * xb * k * k * h.e + (k * k + xb * xb) * h.sh;
    den = (xb * xb - k * k) * h.e + (k * k + xb * xb) * h.ch;
  }
  const double bracket = p.a * xb + xb / xc + num / den;
  return std::sqrt(xb) / std::sqrt((1.0 + xc * xc / (k * k)) * bracket);
}

CoefficientSet coefficients(const Level& level, const WellParams& p) {
  check_is_root(level, p);
  if (level.waves.barrier.kind != BarrierMode::Evanescent || level.waves.barrier.value == 0.0)
    fail(Errc::RegimeUnsupported,
         "closed-form coefficients are stated for the evanescent regime (E < vb)");
  const double k = level.waves.k, xb = level.waves.barrier.value, xc = level.waves.chi_c;
  const double c2 = c2_general(level.parity, level.waves, p);
  const double ebm = std::exp(-p.b * xb);
  const double cross = std::sqrt(k * k * p.mc * p.mc + xc * xc * p.m0 * p.m0);

  CoefficientSet c{};
  double mag;
  if (level.parity == Parity::Symmetric) {
    c.a1 = c.a2 = c2 * xc * p.m0 / (k * p.mc);
    c.b1 = c.b4 = c.c1 = c.c2 = c2;
    const double onep = 1.0 + ebm, onem = 1.0 - ebm;
    mag = c2 * p.mb * cross /
          (p.mc * std::sqrt(k * k * p.mb * p.mb * onep * onep +
                            xb * xb * p.m0 * p.m0 * onem * onem));
  } else {
    c.a2 = c2 * xc * p.m0 / (k * p.mc);
    c.a1 = -c.a2;
    c.b4 = c.c2 = c2;
    c.b1 = c.c1 = -c2;
    const double onep = 1.0 + ebm, onem = 1.0 - ebm;
    mag = c2 * p.mb * cross /
          (p.mc * std::sqrt(k * k * p.mb * p.mb * onem * onem +
                            xb * xb * p.m0 * p.m0 * onep * onep));
  }

  // the free sign of the barrier amplitudes must restore derivative
  // continuity at a and a+b; exactly one candidate does
  double res[2];
  for (int i = 0; i < 2; ++i) {
    const double s = i == 0 ? 1.0 : -1.0;
    const double b3 = s * mag;
    const double b2 = level.parity == Parity::Symmetric ? b3 : -b3;
    res[i] = derivative_match_residual(c.a1, c.c1, b2, b3, k, xb, ebm, p);
  }
  const int winner = res[0] <= res[1] ? 0 : 1;
  if (res[winner] > 1e-8 || res[1 - winner] <= 1e-8)
    fail(Errc::NotARoot, "barrier-amplitude sign selection failed (residuals " +
                             std::to_string(res[0]) + ", " + std::to_string(res[1]) + ")");
  c.b3 = (winner == 0 ? 1.0 : -1.0) * mag;
  c.b2 = level.parity == Parity::Symmetric ? c.b3 : -c.b3;

  return sign_fixed(c, k, p.a);
}

double analytic_norm(const CoefficientSet& c, const WaveNumbers& w, const WellParams& p) {
  const double k = w.k, xc = w.chi_c;
  const double s2 = std::sin(2.0 * p.a * k), c2v = std::cos(2.0 * p.a * k);
  auto well = [&](double as, double cs) {
    return as * as * (0.5 * p.a - s2 / (4.0 * k)) + cs * cs * (0.5 * p.a + s2 / (4.0 * k)) +
           as * cs * (1.0 - c2v) / (2.0 * k);
  };
  const double tails = (c.b1 * c.b1 + c.b4 * c.b4) / (2.0 * xc);
  double barrier = 0.0;
  if (p.b > 0.0) {
    if (w.barrier.kind == BarrierMode::Evanescent) {
      const double xb = w.barrier.value;
      const double decay = xb == 0.0 ? p.b : -std::expm1(-2.0 * p.b * xb) / (2.0 * xb);
      barrier = (c.b2 * c.b2 + c.b3 * c.b3) * decay +
                2.0 * p.b * c.b2 * c.b3 * std::exp(-p.b * xb);
    } else {
      const double kb = w.barrier.value;
      barrier = 0.5 * p.b * (c.b2 * c.b2 + c.b3 * c.b3) +
                (c.b2 * c.b2 - c.b3 * c.b3) * std::sin(kb * p.b) / (2.0 * kb);
    }
  }
  return tails + well(c.a1, c.c1) + well(c.a2, c.c2) + barrier;
}

CoefficientSet coefficients_nullspace(const Level& level, const WellParams& p) {
  check_is_root(level, p);
  const double k = level.waves.k, xc = level.waves.chi_c;
  const double sa = std::sin(p.a * k), ca = std::cos(p.a * k);

  Eigen::Matrix<double, 8, 8> m = Eigen::Matrix<double, 8, 8>::Zero();
  // columns: A1 B1 C1 B2 B3 A2 C2 B4 (as in det_full_matrix)
  m(0, 0) = -k / p.m0;
  m(0, 1) = xc / p.mc;
  m(1, 1) = 1.0;
  m(1, 2) = -1.0;
  m(6, 6) = 1.0;
  m(6, 7) = -1.0;
  m(7, 5) = -k / p.m0;
  m(7, 7) = xc / p.mc;
  if (level.waves.barrier.kind == BarrierMode::Evanescent) {
    const double xb = level.waves.barrier.value;
    const double eb = std::exp(-p.b * xb);
    m(2, 0) = sa;
    m(2, 2) = ca;
    m(2, 3) = -1.0;
    m(2, 4) = -eb;
    m(3, 0) = k * ca / p.m0;
    m(3, 2) = -k * sa / p.m0;
    m(3, 3) = xb / p.mb;
    m(3, 4) = -xb * eb / p.mb;
    m(4, 3) = eb;
    m(4, 4) = 1.0;
    m(4, 5) = -sa;
    m(4, 6) = -ca;
    m(5, 3) = -xb * eb / p.mb;
    m(5, 4) = xb / p.mb;
    m(5, 5) = k * ca / p.m0;
    m(5, 6) = -k * sa / p.m0;
  } else {
    // barrier basis cos(kappa u), sin(kappa u) about the centre u = x-a-b/2
    const double kb = level.waves.barrier.value;
    const double cb = std::cos(0.5 * kb * p.b), sb = std::sin(0.5 * kb * p.b);
    m(2, 0) = sa;
    m(2, 2) = ca;
    m(2, 3) = -cb;
    m(2, 4) = sb;
    m(3, 0) = k * ca / p.m0;
    m(3, 2) = -k * sa / p.m0;
    m(3, 3) = -kb * sb / p.mb;
    m(3, 4) = -kb * cb / p.mb;
    m(4, 3) = cb;
    m(4, 4) = sb;
    m(4, 5) = -sa;
    m(4, 6) = -ca;
    m(5, 3) = -kb * sb / p.mb;
    m(5, 4) = kb * cb / p.mb;
    m(5, 5) = k * ca / p.m0;
    m(5, 6) = -k * sa / p.m0;
  }

  Eigen::JacobiSVD<Eigen::Matrix<double, 8, 8>> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (!(sv(7) <= 1e-7 * sv(0)))
    fail(Errc::NotARoot, "matching system has no null direction at this energy");
  const Eigen::Matrix<double, 8, 1> v = svd.matrixV().col(7);

  CoefficientSet c{};
  c.a1 = v(0);
  c.b1 = v(1);
  c.c1 = v(2);
  c.b2 = v(3);
  c.b3 = v(4);
  c.a2 = v(5);
  c.c2 = v(6);
  c.b4 = v(7);

  const double norm = std::sqrt(analytic_norm(c, level.waves, p));
  for (double* x : {&c.a1, &c.a2, &c.b1, &c.b2, &c.b3, &c.b4, &c.c1, &c.c2}) *x /= norm;
  return sign_fixed(c, k, p.a);
}

BoundState solve_state(const WellParams& p, const Level& level) {
  CoefficientSet c = level.energy < p.vb ? coefficients(level, p)
                                         : coefficients_nullspace(level, p);
  return BoundState{level, c, p};
}

std::vector<BoundState> solve_all_states(const WellParams& p, int max_levels, Exec ex) {
  const std::vector<Level> levels = find_levels(p, max_levels, ex);
  std::vector<BoundState> out(levels.size());
  for_indexed(levels.size(), ex, [&](std::size_t i) { out[i] = solve_state(p, levels[i]); });
  return out;
}

std::array<double, 8> boundary_residuals(const BoundState& st) {
  const WellParams& p = st.params;
  const CoefficientSet& c = st.coeffs;
  const double k = st.level.waves.k, xc = st.level.waves.chi_c;
  const double sa = std::sin(p.a * k), ca = std::cos(p.a * k);

  double r2, r3, r4, r5;  // value/derivative matches at a and a+b
  if (st.level.waves.barrier.kind == BarrierMode::Evanescent) {
    const double xb = st.level.waves.barrier.value;
    const double eb = std::exp(-p.b * xb);
    r2 = -c.b2 - c.b3 * eb + c.a1 * sa + c.c1 * ca;
    r3 = (c.b2 * xb - c.b3 * xb * eb) / p.mb + (c.a1 * k * ca - c.c1 * k * sa) / p.m0;
    r4 = c.b3 + c.b2 * eb - c.a2 * sa - c.c2 * ca;
    r5 = (c.b3 * xb - c.b2 * xb * eb) / p.mb + (c.a2 * k * ca - c.c2 * k * sa) / p.m0;
  } else {
    const double kb = st.level.waves.barrier.value;
    const double cb = std::cos(0.5 * kb * p.b), sb = std::sin(0.5 * kb * p.b);
    r2 = c.a1 * sa + c.c1 * ca - (c.b2 * cb - c.b3 * sb);
    r3 = (c.a1 * k * ca - c.c1 * k * sa) / p.m0 - (c.b2 * kb * sb + c.b3 * kb * cb) / p.mb;
    r4 = (c.b2 * cb + c.b3 * sb) - c.a2 * sa - c.c2 * ca;
    r5 = (-c.b2 * kb * sb + c.b3 * kb * cb) / p.mb - (-c.a2 * k * ca + c.c2 * k * sa) / p.m0;
  }

  std::array<double, 8> r = {
      c.b1 - c.c1,
      -c.a1 * k / p.m0 + c.b1 * xc / p.mc,
      r2,
      r3,
      r4,
      r5,
      -c.b4 + c.c2,
      -c.a2 * k / p.m0 + c.b4 * xc / p.mc,
  };
  double cmax = 0.0;
  for (double x : {c.a1, c.a2, c.b1, c.b2, c.b3, c.b4, c.c1, c.c2})
    cmax = std::max(cmax, std::fabs(x));
  for (double& x : r) x = std::fabs(x) / cmax;
  return r;
}

double eval_psi(double x, const BoundState& st) {
  const WellParams& p = st.params;
  const CoefficientSet& c = st.coeffs;
  const double k = st.level.waves.k, xc = st.level.waves.chi_c;
  const double L = 2.0 * p.a + p.b;
  if (x < 0.0) return c.b1 * std::exp(xc * x);
  if (x <= p.a) return c.a1 * std::sin(k * x) + c.c1 * std::cos(k * x);
  if (x < p.a + p.b) {
    if (st.level.waves.barrier.kind == BarrierMode::Evanescent) {
      const double xb = st.level.waves.barrier.value;
      return c.b2 * std::exp(xb * (p.a - x)) + c.b3 * std::exp(-xb * (p.a + p.b - x));
    }
    const double kb = st.level.waves.barrier.value;
    const double u = x - p.a - 0.5 * p.b;
    return c.b2 * std::cos(kb * u) + c.b3 * std::sin(kb * u);
  }
  if (x <= L) return c.a2 * std::sin(k * (L - x)) + c.c2 * std::cos(k * (L - x));
  return c.b4 * std::exp(xc * (L - x));
}

}  // namespace dqw
