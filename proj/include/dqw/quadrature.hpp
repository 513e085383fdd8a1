#pragma once

#include <cmath>
#include <cstddef>

namespace dqw {

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1] (Kronrod abscissae; odd
// indices are the embedded Gauss-7 points).
inline constexpr double kGk15Node[15] = {
    -0.991455371120812639206854697526329,  -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,  -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,  -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,  0.0,
    0.207784955007898467600689403773245,   0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,   0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,   0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};
inline constexpr double kGk15Weight[15] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};
inline constexpr double kG7Weight[7] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

template <class F>
void gk15(const F& f, double lo, double hi, double& i15, double& err) {
  const double c = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
  double s15 = 0.0, s7 = 0.0;
  for (int j = 0; j < 15; ++j) {
    const double v = f(c + r * kGk15Node[j]);
    s15 += kGk15Weight[j] * v;
    if (j % 2 == 1) s7 += kG7Weight[j / 2] * v;
  }
  i15 = r * s15;
  err = std::fabs(r * (s15 - s7));
}

template <class F>
double adapt(const F& f, double lo, double hi, double tol, int depth) {
  double v, err;
  gk15(f, lo, hi, v, err);
  if (err <= tol || depth <= 0) return v;
  const double mid = 0.5 * (lo + hi);
  return adapt(f, lo, mid, 0.5 * tol, depth - 1) + adapt(f, mid, hi, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Gauss-Kronrod with an absolute error target.  min_splits forces
// an initial uniform subdivision into 2^min_splits panels (used by the
// resolution-doubling checks).
template <class F>
double integrate(const F& f, double lo, double hi, double abs_tol, int max_depth = 48,
                 int min_splits = 0) {
  if (lo == hi) return 0.0;
  const std::size_t panels = std::size_t{1} << min_splits;
  const double w = (hi - lo) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double p0 = lo + w * static_cast<double>(i);
    const double p1 = (i + 1 == panels) ? hi : p0 + w;
    total += detail::adapt(f, p0, p1, abs_tol / static_cast<double>(panels), max_depth);
  }
  return total;
}

}  // namespace dqw
