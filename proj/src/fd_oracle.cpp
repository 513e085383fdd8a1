#include "dqw/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace dqw {

namespace {

struct Tridiag {
  std::vector<double> d;  // diagonal
  std::vector<double> e;  // superdiagonal (n-1)
};

struct Layer {
  double m, v;
};

Layer layer_at(double x, const WellParams& p) {
  const double L = 2.0 * p.a + p.b;
  if (x < 0.0 || x > L) return {p.mc, p.vc};
  if (x > p.a && x < p.a + p.b) return {p.mb, p.vb};
  return {p.m0, 0.0};
}

Tridiag assemble(const WellParams& p, const FdGrid& g, double c_scale) {
  const double cs = kC * c_scale;
  const double h = g.h, inv_h2 = 1.0 / (h * h);
  Tridiag t;
  t.d.resize(g.n);
  t.e.resize(g.n - 1);
  for (int i = 0; i < g.n; ++i) {
    const double x = fd_node_x(g, i);
    const Layer left = layer_at(x - 0.5 * h, p);
    const Layer right = layer_at(x + 0.5 * h, p);
    // cell-averaged potential: interface nodes carry the mean of both sides
    const double v = 0.5 * (layer_at(x - 0.25 * h, p).v + layer_at(x + 0.25 * h, p).v);
    t.d[i] = cs * (1.0 / left.m + 1.0 / right.m) * inv_h2 + v;
    if (i + 1 < g.n) t.e[i] = -cs / right.m * inv_h2;
  }
  return t;
}

// number of eigenvalues of T strictly below x (Sturm sequence)
int sturm_count(const Tridiag& t, double x) {
  constexpr double tiny = 1e-300;
  int cnt = 0;
  double q = t.d[0] - x;
  if (q < 0.0) ++cnt;
  for (std::size_t i = 1; i < t.d.size(); ++i) {
    if (std::fabs(q) < tiny) q = q < 0.0 ? -tiny : tiny;
    q = t.d[i] - x - t.e[i - 1] * t.e[i - 1] / q;
    if (q < 0.0) ++cnt;
  }
  return cnt;
}

double bisect_eigenvalue(const Tridiag& t, int index, double lo, double hi) {
  while (hi - lo > 1e-14 * std::max(1.0, std::fabs(hi)) + 1e-15) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (sturm_count(t, mid) >= index + 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

void gershgorin(const Tridiag& t, double& lo, double& hi) {
  lo = t.d[0] - std::fabs(t.e[0]);
  hi = t.d[0] + std::fabs(t.e[0]);
  for (std::size_t i = 1; i < t.d.size(); ++i) {
    const double r = (i + 1 < t.d.size() ? std::fabs(t.e[i]) : 0.0) + std::fabs(t.e[i - 1]);
    lo = std::min(lo, t.d[i] - r);
    hi = std::max(hi, t.d[i] + r);
  }
}

// (T - sigma I) v = w, tridiagonal LU with partial pivoting and one
// fill-in band (the dgttrf elimination)
void shifted_solve(const Tridiag& t, double sigma, std::vector<double>& v) {
  const int n = static_cast<int>(t.d.size());
  std::vector<double> d(n), du(n - 1), dl(n - 1), du2(n > 2 ? n - 2 : 0, 0.0);
  for (int i = 0; i < n; ++i) d[i] = t.d[i] - sigma;
  for (int i = 0; i + 1 < n; ++i) du[i] = dl[i] = t.e[i];
  for (int i = 0; i + 1 < n; ++i) {
    if (std::fabs(d[i]) >= std::fabs(dl[i])) {
      if (d[i] == 0.0) d[i] = 1e-300;
      const double f = dl[i] / d[i];
      d[i + 1] -= f * du[i];
      v[i + 1] -= f * v[i];
    } else {  // swap rows i, i+1
      const double f = d[i] / dl[i];
      d[i] = dl[i];
      const double tmp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = tmp - f * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -f * du[i + 1];
      }
      std::swap(v[i], v[i + 1]);
      v[i + 1] -= f * v[i];
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = 1e-300;
  v[n - 1] /= d[n - 1];
  if (n > 1) v[n - 2] = (v[n - 2] - du[n - 2] * v[n - 1]) / d[n - 2];
  for (int i = n - 3; i >= 0; --i)
    v[i] = (v[i] - du[i] * v[i + 1] - du2[i] * v[i + 2]) / d[i];
}

std::vector<double> inverse_iteration(const Tridiag& t, double lambda, double scale,
                                      unsigned seed) {
  const int n = static_cast<int>(t.d.size());
  std::vector<double> v(n);
  std::uint64_t s = 0x9e3779b97f4a7c15ull + seed;
  for (int i = 0; i < n; ++i) {  // deterministic start vector
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    v[i] = static_cast<double>(s >> 11) / 9007199254740992.0 - 0.5;
  }
  const double sigma = lambda + 1e-12 * scale;
  for (int pass = 0; pass < 4; ++pass) {
    shifted_solve(t, sigma, v);
    double nrm = 0.0;
    for (double x : v) nrm += x * x;
    nrm = std::sqrt(nrm);
    for (double& x : v) x /= nrm;
  }
  return v;
}

std::vector<FdLevel> solve_impl(const WellParams& p, const FdGrid& g, int count,
                                double c_scale, Exec ex, bool vectors) {
  if (count <= 0) return {};
  const Tridiag t = assemble(p, g, c_scale);
  const int nbound = sturm_count(t, p.vc * (1.0 - 1e-12));
  const int m = std::min(count, nbound);
  double glo, ghi;
  gershgorin(t, glo, ghi);

  std::vector<FdLevel> out(m);
  for_indexed(static_cast<std::size_t>(m), ex, [&](std::size_t j) {
    out[j].energy = bisect_eigenvalue(t, static_cast<int>(j), glo, ghi);
  });
  if (!vectors) return out;

  const double scale = std::max(std::fabs(glo), std::fabs(ghi));
  for_indexed(static_cast<std::size_t>(m), ex, [&](std::size_t j) {
    out[j].psi = inverse_iteration(t, out[j].energy, scale, static_cast<unsigned>(j));
  });
  // near-degenerate pairs: restore orthogonality, then normalize by trapezoid
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < j; ++i) {
      if (std::fabs(out[j].energy - out[i].energy) > 1e-6) continue;
      double dot = 0.0, nn = 0.0;
      for (int q = 0; q < g.n; ++q) {
        dot += out[j].psi[q] * out[i].psi[q];
        nn += out[i].psi[q] * out[i].psi[q];
      }
      for (int q = 0; q < g.n; ++q) out[j].psi[q] -= dot / nn * out[i].psi[q];
    }
    double nrm = 0.0;
    for (double x : out[j].psi) nrm += x * x;
    nrm = std::sqrt(g.h * nrm);
    // sign: positive in the left well interior, matching the library states
    const int ref = static_cast<int>(std::lround((0.5 * p.a - g.x0) / g.h)) - 1;
    const double sgn = out[j].psi[std::clamp(ref, 0, g.n - 1)] < 0.0 ? -1.0 : 1.0;
    for (double& x : out[j].psi) x *= sgn / nrm;
  }
  return out;
}

}  // namespace

FdGrid make_fd_grid(const WellParams& p, double h_target, double pad) {
  if (!(h_target > 0.0) || !(pad > 0.0))
    fail(Errc::PreconditionViolated, "grid spacing and padding must be positive");
  // express a and b in integer units of 1e-6 nm so the interfaces land on nodes
  const double unit = 1e6;
  const auto ia = static_cast<std::int64_t>(std::llround(p.a * unit));
  const auto ib = static_cast<std::int64_t>(std::llround(p.b * unit));
  if (std::fabs(ia / unit - p.a) > 1e-9 * std::max(1.0, p.a) ||
      std::fabs(ib / unit - p.b) > 1e-9 * std::max(1.0, p.b))
    fail(Errc::PreconditionViolated, "a and b must be representable in 1e-6 nm for the grid");
  const std::int64_t g = ib > 0 ? std::gcd(ia, ib) : ia;
  const double cell = static_cast<double>(g) / unit;
  const double h = cell / std::ceil(cell / h_target);
  const auto npad = static_cast<int>(std::ceil(pad / h - 1e-12));
  FdGrid grid;
  grid.h = h;
  grid.x0 = -npad * h;
  grid.x1 = 2.0 * p.a + p.b + npad * h;
  grid.n = static_cast<int>(std::llround((grid.x1 - grid.x0) / h)) - 1;
  if (grid.n < 3) fail(Errc::GridTooCoarse, "grid has fewer than 3 interior nodes");
  return grid;
}

std::vector<FdLevel> fd_solve(const WellParams& p, const FdGrid& grid, int count,
                              double c_scale, Exec ex) {
  return solve_impl(validate(p), grid, count, c_scale, ex, true);
}

int fd_count_below(const WellParams& p, const FdGrid& grid, double energy, double c_scale) {
  return sturm_count(assemble(validate(p), grid, c_scale), energy);
}

std::vector<FdLevel> fd_spectrum(const WellParams& p, const FdGrid& grid, int count,
                                 double c_scale, Exec ex) {
  std::vector<FdLevel> coarse = solve_impl(validate(p), grid, count, c_scale, ex, true);
  FdGrid fine = grid;
  fine.h = 0.5 * grid.h;
  fine.n = 2 * grid.n + 1;
  std::vector<FdLevel> refined = solve_impl(p, fine, count, c_scale, ex, false);
  for (std::size_t i = 0; i < std::min(coarse.size(), refined.size()); ++i) {
    const double drift = std::fabs(coarse[i].energy - refined[i].energy);
    if (drift > 1e-7)
      fail(Errc::GridTooCoarse, "halving h moved level " + std::to_string(i + 1) + " by " +
                                    std::to_string(drift) + " eV");
  }
  return coarse;
}

FdConverged fd_spectrum_converged(const WellParams& p, int count, double h_target, double pad0,
                                  double c_scale, Exec ex) {
  const WellParams q = validate(p);
  double pad = pad0;
  std::vector<FdLevel> prev = solve_impl(q, make_fd_grid(q, h_target, pad), count, c_scale, ex,
                                         false);
  for (;;) {
    const double pad2 = 2.0 * pad;
    std::vector<FdLevel> cur =
        solve_impl(q, make_fd_grid(q, h_target, pad2), count, c_scale, ex, false);
    double drift = cur.size() == prev.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; i < std::min(cur.size(), prev.size()); ++i)
      drift = std::max(drift, std::fabs(cur[i].energy - prev[i].energy));
    pad = pad2;
    prev = std::move(cur);
    if (drift <= 1e-9) break;
    if (pad > 2048.0)
      fail(Errc::GridTooCoarse, "padding loop did not converge (weakly bound level?)");
  }

  const FdGrid base = make_fd_grid(q, h_target, pad);
  FdGrid fine = base;
  fine.h = 0.5 * base.h;
  fine.n = 2 * base.n + 1;
  std::vector<FdLevel> e1 = std::move(prev);  // already solved at the final padding
  std::vector<FdLevel> e2 = solve_impl(q, fine, count, c_scale, ex, false);

  FdConverged out;
  out.pad = pad;
  out.h = base.h;
  for (std::size_t i = 0; i < std::min(e1.size(), e2.size()); ++i)
    out.energies.push_back((4.0 * e2[i].energy - e1[i].energy) / 3.0);
  return out;
}

}  // namespace dqw
