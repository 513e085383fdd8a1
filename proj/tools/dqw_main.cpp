#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dqw/commands.hpp"
#include "dqw/config.hpp"
#include "dqw/error.hpp"

namespace {

struct Common {
  std::string config_path;
  dqw::ConfigValues overrides;
  std::string out_path;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config_path, "parameter file (key = value lines)");
  sub->add_option("--a-nm", c.overrides.a, "well width a [nm]");
  sub->add_option("--b-nm", c.overrides.b, "central barrier width b [nm]");
  sub->add_option("--vb-ev", c.overrides.vb, "central barrier height [eV]");
  sub->add_option("--vc-ev", c.overrides.vc, "confinement barrier height [eV]");
  sub->add_option("--m0", c.overrides.m0, "well effective mass [m_e]");
  sub->add_option("--mb", c.overrides.mb, "barrier effective mass [m_e]");
  sub->add_option("--mc", c.overrides.mc, "confinement effective mass [m_e]");
  sub->add_option("--out", c.out_path, "output file (default: stdout)");
}

dqw::WellParams resolve(const Common& c) {
  dqw::ConfigValues file;
  if (!c.config_path.empty()) file = dqw::parse_config_file(c.config_path);
  return dqw::resolve_params(file, c.overrides);
}

void emit(const Common& c, const std::string& text) {
  if (c.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.out_path, std::ios::binary);
  if (!out) dqw::fail(dqw::Errc::ConfigError, "cannot open output file " + c.out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bound states, eigenfunctions and dipole matrix elements of a "
               "symmetric double quantum well"};
  app.require_subcommand(1);

  Common c_levels, c_sweep, c_wf, c_dip, c_val;
  int max_levels = -1;
  auto* s_levels = app.add_subcommand("levels", "bound-level table");
  add_common(s_levels, c_levels);
  s_levels->add_option("--levels", max_levels, "cap on reported levels");

  dqw::SweepSpec spec;
  spec.parameter = "b";
  spec.levels = 2;
  std::vector<std::string> sweep_transitions;
  bool serial = false;
  auto* s_sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  add_common(s_sweep, c_sweep);
  s_sweep->add_option("--param", spec.parameter, "swept parameter: b, a or vb");
  s_sweep->add_option("--from", spec.from, "sweep start")->required();
  s_sweep->add_option("--to", spec.to, "sweep end")->required();
  s_sweep->add_option("--steps", spec.steps, "number of sweep points (>= 2)")->required();
  s_sweep->add_option("--levels", spec.levels, "energy columns");
  s_sweep->add_option("--transition", sweep_transitions, "dipole columns (1s2a, 2a3s or i,j)");
  s_sweep->add_flag("--serial", serial, "single-threaded sweep (reference path)");

  int wf_level = 1, wf_samples = 1001;
  double wf_pad = 6.0;
  auto* s_wf = app.add_subcommand("wavefunction", "sampled eigenfunction to CSV");
  add_common(s_wf, c_wf);
  s_wf->add_option("--level", wf_level, "1-based level index")->required();
  s_wf->add_option("--samples", wf_samples, "sample count");
  s_wf->add_option("--pad-nm", wf_pad, "padding beyond the outer interfaces");

  std::vector<std::string> dip_transitions;
  auto* s_dip = app.add_subcommand("dipole", "dipole matrix elements");
  add_common(s_dip, c_dip);
  s_dip->add_option("--transition", dip_transitions, "transitions (default 1s2a)");

  double corrupt_c = 1.0;
  auto* s_val = app.add_subcommand("validate", "run the oracle-equivalence suite");
  add_common(s_val, c_val);
  s_val->add_option("--corrupt-c", corrupt_c, "")->group("");  // test hook, hidden

  CLI11_PARSE(app, argc, argv);

  try {
    if (s_levels->parsed()) {
      emit(c_levels, dqw::cmd_levels(resolve(c_levels), max_levels));
    } else if (s_sweep->parsed()) {
      for (const auto& t : sweep_transitions) spec.transitions.push_back(dqw::parse_transition(t));
      emit(c_sweep, dqw::cmd_sweep(resolve(c_sweep), spec,
                                   serial ? dqw::Exec::Seq : dqw::Exec::Par));
    } else if (s_wf->parsed()) {
      emit(c_wf, dqw::cmd_wavefunction(resolve(c_wf), wf_level, wf_samples, wf_pad));
    } else if (s_dip->parsed()) {
      std::vector<dqw::TransitionSpec> ts;
      if (dip_transitions.empty()) dip_transitions.push_back("1s2a");
      for (const auto& t : dip_transitions) ts.push_back(dqw::parse_transition(t));
      emit(c_dip, dqw::cmd_dipole(resolve(c_dip), ts));
    } else if (s_val->parsed()) {
      const dqw::ValidationReport rep = dqw::cmd_validate(resolve(c_val), corrupt_c);
      emit(c_val, rep.text);
      return rep.ok ? 0 : 1;
    }
  } catch (const dqw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
