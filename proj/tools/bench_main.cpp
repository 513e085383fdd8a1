// Serial vs OpenMP timings for the three hot loops: the determinant scan in
// find_levels, the Sturm eigensolver, and a parameter sweep.  The serial
// path is the reference; both paths must produce identical bytes.
#include <chrono>
#include <cstdio>
#include <string>

#include "dqw/commands.hpp"
#include "dqw/fd_oracle.hpp"
#include "dqw/spectrum.hpp"

using dqw::Exec;

namespace {

const dqw::WellParams kGaAs{6.0, 5.0, 0.1671, 0.1671, 0.067, 0.0836, 0.0836};

template <class F>
double best_ms(F&& f, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double ms_seq, double ms_par, bool identical) {
  std::printf("%-28s %9.2f ms %9.2f ms   x%.2f   %s\n", name, ms_seq, ms_par,
              ms_seq / ms_par, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("%-28s %12s %12s %7s\n", "kernel", "serial", "openmp", "speedup");

  {
    dqw::WellParams p = kGaAs;
    p.b = 200.0;  // long scan grid
    std::vector<dqw::Level> a, b;
    const double t_seq = best_ms([&] { a = dqw::find_levels(p, -1, Exec::Seq); });
    const double t_par = best_ms([&] { b = dqw::find_levels(p, -1, Exec::Par); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].energy == b[i].energy;
    report("determinant scan (b=200)", t_seq, t_par, same);
  }

  {
    const dqw::FdGrid g = dqw::make_fd_grid(kGaAs, 0.002, 48.0);
    std::vector<dqw::FdLevel> a, b;
    const double t_seq = best_ms([&] { a = dqw::fd_solve(kGaAs, g, 3, 1.0, Exec::Seq); });
    const double t_par = best_ms([&] { b = dqw::fd_solve(kGaAs, g, 3, 1.0, Exec::Par); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i)
      same = a[i].energy == b[i].energy && a[i].psi == b[i].psi;
    report("fd eigensolver (h=0.002)", t_seq, t_par, same);
  }

  {
    dqw::SweepSpec spec;
    spec.parameter = "b";
    spec.from = 1.0;
    spec.to = 15.0;
    spec.steps = 29;
    spec.levels = 3;
    spec.transitions = {dqw::parse_transition("1s2a")};
    std::string a, b;
    const double t_seq = best_ms([&] { a = dqw::cmd_sweep(kGaAs, spec, Exec::Seq); });
    const double t_par = best_ms([&] { b = dqw::cmd_sweep(kGaAs, spec, Exec::Par); });
    report("b sweep (29 points)", t_seq, t_par, a == b);
  }
  return 0;
}
