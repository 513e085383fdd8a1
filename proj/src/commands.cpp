#include "dqw/commands.hpp"

#include <atomic>
#include <cstdio>
#include <cmath>
#include <sstream>

#include "dqw/dipole.hpp"
#include "dqw/eigenstates.hpp"
#include "dqw/spectrum.hpp"

namespace dqw {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string level_column_name(int n) {
  return "E_" + std::to_string(n) + (n % 2 == 1 ? "s" : "a");
}

bool closed_form_applies(const BoundState& x, const BoundState& y) {
  const WellParams& p = x.params;
  return p.m0 == p.mb && p.m0 == p.mc && p.vb == p.vc &&
         x.level.parity != y.level.parity &&
         x.level.waves.barrier.kind == BarrierMode::Evanescent &&
         y.level.waves.barrier.kind == BarrierMode::Evanescent;
}

std::string approx_cell(const WellParams& p, const TransitionSpec& t) {
  if (t.label == "1s2a") return num(dipole_infinite_well_approx(p.a, p.b, Transition::OneS_TwoA));
  if (t.label == "2a3s") return num(dipole_infinite_well_approx(p.a, p.b, Transition::TwoA_ThreeS));
  return "";
}

}  // namespace

TransitionSpec parse_transition(const std::string& text) {
  if (text == "1s2a") return {1, 2, "1s2a"};
  if (text == "2a3s") return {2, 3, "2a3s"};
  int i = 0, j = 0;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%d,%d%c", &i, &j, &extra) == 2 && i >= 1 && j >= 1 && i != j)
    return {i, j, std::to_string(i) + "-" + std::to_string(j)};  // comma-free CSV label
  fail(Errc::ConfigError, "bad transition `" + text + "` (expected 1s2a, 2a3s or i,j)");
}

std::string cmd_levels(const WellParams& p, int max_levels) {
  const auto levels = find_levels(p, max_levels);
  std::ostringstream out;
  out << "n,parity,E_eV,k_per_nm\n";
  for (const Level& lv : levels)
    out << lv.n << ',' << parity_tag(lv.parity) << ',' << num(lv.energy) << ','
        << num(lv.waves.k) << '\n';
  return out.str();
}

std::string cmd_wavefunction(const WellParams& p, int level_index, int samples, double pad) {
  if (level_index < 1) fail(Errc::LevelNotFound, "level index must be >= 1");
  if (samples < 2) fail(Errc::ConfigError, "need at least 2 samples");
  const auto levels = find_levels(p, level_index);
  if (static_cast<int>(levels.size()) < level_index)
    fail(Errc::LevelNotFound, "level " + std::to_string(level_index) + " is not bound (" +
                                  std::to_string(levels.size()) + " levels)");
  const BoundState st = solve_state(p, levels[level_index - 1]);
  const double lo = -pad, hi = 2.0 * p.a + p.b + pad;
  std::ostringstream out;
  out << "x_nm,psi\n";
  for (int i = 0; i < samples; ++i) {
    const double x = lo + (hi - lo) * i / (samples - 1);
    out << num(x) << ',' << num(eval_psi(x, st)) << '\n';
  }
  return out.str();
}

std::string cmd_dipole(const WellParams& p, const std::vector<TransitionSpec>& transitions) {
  int need = 0;
  for (const auto& t : transitions) need = std::max({need, t.i, t.j});
  const auto levels = find_levels(p, need);
  std::ostringstream out;
  out << "transition,d1,d2,d3,total,abs_total,approx,method\n";
  for (const auto& t : transitions) {
    if (t.i > static_cast<int>(levels.size()) || t.j > static_cast<int>(levels.size()))
      fail(Errc::LevelNotFound, "transition " + t.label + " needs unbound levels");
    const BoundState si = solve_state(p, levels[t.i - 1]);
    const BoundState sj = solve_state(p, levels[t.j - 1]);
    if (si.level.parity == sj.level.parity) {
      // the region breakdown needs an even integrand; same-parity pairs get
      // the (vanishing) single-pass total only
      const double total = dipole_numeric(si, sj);
      out << t.label << ",,,," << num(total) << ',' << num(std::fabs(total)) << ','
          << approx_cell(p, t) << ",numeric\n";
      continue;
    }
    DipoleBreakdown d;
    const char* method;
    if (closed_form_applies(si, sj)) {
      d = si.level.parity == Parity::Symmetric ? dipole_closed_form(si, sj)
                                               : dipole_closed_form(sj, si);
      method = "closed";
    } else {
      d = dipole_numeric_breakdown(si, sj);
      method = "numeric";
    }
    out << t.label << ',' << num(d.d1) << ',' << num(d.d2) << ',' << num(d.d3) << ','
        << num(d.total) << ',' << num(std::fabs(d.total)) << ',' << approx_cell(p, t) << ','
        << method << '\n';
  }
  return out.str();
}

std::string cmd_sweep(const WellParams& base, const SweepSpec& spec, Exec ex) {
  if (!(spec.from < spec.to)) fail(Errc::ConfigError, "sweep needs from < to");
  if (spec.steps < 2) fail(Errc::ConfigError, "sweep needs steps >= 2");
  std::string param_col;
  double WellParams::*field;
  if (spec.parameter == "b") {
    param_col = "b_nm";
    field = &WellParams::b;
  } else if (spec.parameter == "a") {
    param_col = "a_nm";
    field = &WellParams::a;
  } else if (spec.parameter == "vb") {
    param_col = "vb_ev";
    field = &WellParams::vb;
  } else {
    fail(Errc::ConfigError, "sweep parameter must be b, a or vb");
  }

  int need = spec.levels;
  for (const auto& t : spec.transitions) need = std::max({need, t.i, t.j});

  std::ostringstream header;
  header << param_col;
  for (int n = 1; n <= spec.levels; ++n) header << ',' << level_column_name(n);
  for (const auto& t : spec.transitions)
    header << ",d1_" << t.label << ",d2_" << t.label << ",d3_" << t.label << ",d_" << t.label
           << ",approx_" << t.label;

  std::vector<std::string> rows(spec.steps);
  std::atomic<bool> warned{false};
  for_indexed(static_cast<std::size_t>(spec.steps), ex, [&](std::size_t i) {
    WellParams p = base;
    p.*field = spec.from + (spec.to - spec.from) * static_cast<double>(i) / (spec.steps - 1);
    const auto levels = find_levels(p, need, Exec::Seq);
    std::vector<BoundState> states(levels.size());
    for (std::size_t q = 0; q < levels.size(); ++q) states[q] = solve_state(p, levels[q]);

    auto missing = [&](int n) { return n > static_cast<int>(levels.size()); };
    std::ostringstream row;
    row << num(p.*field);
    for (int n = 1; n <= spec.levels; ++n) {
      row << ',';
      if (missing(n)) {
        if (!warned.exchange(true))
          std::fprintf(stderr, "warning: requested level %d not bound at %s=%.6g\n", n,
                       param_col.c_str(), p.*field);
      } else {
        row << num(levels[n - 1].energy);
      }
    }
    for (const auto& t : spec.transitions) {
      if (missing(t.i) || missing(t.j)) {
        if (!warned.exchange(true))
          std::fprintf(stderr, "warning: transition %s not bound at %s=%.6g\n",
                       t.label.c_str(), param_col.c_str(), p.*field);
        row << ",,,," << ',' << approx_cell(p, t);  // dipole cells empty, approx still defined
      } else if (states[t.i - 1].level.parity == states[t.j - 1].level.parity) {
        row << ",,," << ',' << num(dipole_numeric(states[t.i - 1], states[t.j - 1])) << ','
            << approx_cell(p, t);
      } else {
        const BoundState& si = states[t.i - 1];
        const BoundState& sj = states[t.j - 1];
        DipoleBreakdown d;
        if (closed_form_applies(si, sj))
          d = si.level.parity == Parity::Symmetric ? dipole_closed_form(si, sj)
                                                   : dipole_closed_form(sj, si);
        else
          d = dipole_numeric_breakdown(si, sj);
        row << ',' << num(d.d1) << ',' << num(d.d2) << ',' << num(d.d3) << ',' << num(d.total)
            << ',' << approx_cell(p, t);
      }
    }
    rows[i] = row.str();
  });

  std::ostringstream out;
  out << header.str() << '\n';
  for (const auto& r : rows) out << r << '\n';
  return out.str();
}

}  // namespace dqw
