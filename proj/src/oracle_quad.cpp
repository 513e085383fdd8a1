#include "dqw/oracle_quad.hpp"

#include <cmath>

#include "dqw/quadrature.hpp"
#include "region_panels.hpp"

namespace dqw {

double quad_norm(const BoundState& state, double abs_tol, int min_splits) {
  const auto pts = detail::region_panels(state.params, 2.0 * state.level.waves.chi_c);
  const double per_panel = abs_tol / static_cast<double>(pts.size() - 1);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    auto f = [&](double x) {
      const double v = eval_psi(x, state);
      return v * v;
    };
    total += integrate(f, pts[i], pts[i + 1], per_panel, 48, min_splits);
  }
  return total;
}

double quad_overlap(const BoundState& i, const BoundState& j, double abs_tol) {
  if (!detail::same_params(i.params, j.params))
    fail(Errc::ParameterMismatch, "overlap of states from different wells");
  const auto pts =
      detail::region_panels(i.params, i.level.waves.chi_c + j.level.waves.chi_c);
  const double per_panel = abs_tol / static_cast<double>(pts.size() - 1);
  double total = 0.0;
  for (std::size_t q = 0; q + 1 < pts.size(); ++q) {
    auto f = [&](double x) { return eval_psi(x, i) * eval_psi(x, j); };
    total += integrate(f, pts[q], pts[q + 1], per_panel, 48);
  }
  return total;
}

}  // namespace dqw
