#pragma once

#include <string>
#include <vector>

#include "dqw/parallel.hpp"
#include "dqw/params.hpp"

namespace dqw {

// Level pair for a dipole column.  label is the CSV-facing name ("1s2a",
// "2a3s", or "i,j" for a generic request).
struct TransitionSpec {
  int i, j;
  std::string label;
};

TransitionSpec parse_transition(const std::string& text);

struct SweepSpec {
  std::string parameter;  // "b" | "a" | "vb"
  double from, to;
  int steps;   // >= 2
  int levels;  // energy columns requested
  std::vector<TransitionSpec> transitions;
};

// All CSV output uses a header row, comma separator and %.17g numbers, so
// identical inputs produce byte-identical files.

// columns: n,parity,E_eV,k_per_nm
std::string cmd_levels(const WellParams& p, int max_levels = -1);

// columns: <param>,E_1s,E_2a,...[,d1_<t>,d2_<t>,d3_<t>,d_<t>,approx_<t> ...]
// Unbound requested levels produce empty cells (one warning on stderr).
std::string cmd_sweep(const WellParams& p, const SweepSpec& spec, Exec ex = Exec::Par);

// columns: x_nm,psi
std::string cmd_wavefunction(const WellParams& p, int level_index, int samples, double pad);

// columns: transition,d1,d2,d3,total,abs_total,approx,method
// Closed form where it applies (equal masses, vb == vc, evanescent pair),
// per-region quadrature otherwise; approx is empty for generic pairs.
std::string cmd_dipole(const WellParams& p, const std::vector<TransitionSpec>& transitions);

struct ValidationReport {
  bool ok;
  std::string text;  // one line per check with max deviations
};

// Oracle-equivalence suite: spectrum vs finite differences, norms, matching
// residuals, orthogonality, parity selection, closed-form dipole vs
// quadrature (when applicable).  corrupt_c scales the constant used by the
// finite-difference side (test hook; 1.0 = honest run).
ValidationReport cmd_validate(const WellParams& p, double corrupt_c = 1.0, Exec ex = Exec::Par);

}  // namespace dqw
