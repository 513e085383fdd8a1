#include <cmath>
#include <cstdio>
#include <sstream>

#include "dqw/commands.hpp"
#include "dqw/dipole.hpp"
#include "dqw/eigenstates.hpp"
#include "dqw/fd_oracle.hpp"
#include "dqw/oracle_quad.hpp"
#include "dqw/spectrum.hpp"

namespace dqw {

namespace {

struct Check {
  std::ostringstream& out;
  bool& ok;
  void line(const char* name, double dev, double tol, bool skipped = false) {
    char buf[160];
    if (skipped) {
      std::snprintf(buf, sizeof buf, "  skip %-34s (not applicable)\n", name);
    } else {
      const bool pass = dev <= tol;
      if (!pass) ok = false;
      std::snprintf(buf, sizeof buf, "  %-4s %-34s max dev %.3e (tol %.0e)\n",
                    pass ? "ok" : "FAIL", name, dev, tol);
    }
    out << buf;
  }
};

}  // namespace

ValidationReport cmd_validate(const WellParams& p, double corrupt_c, Exec ex) {
  std::ostringstream out;
  bool ok = true;
  Check chk{out, ok};

  const auto levels = find_levels(p, -1, ex);
  std::vector<BoundState> states(levels.size());
  for_indexed(levels.size(), ex, [&](std::size_t i) { states[i] = solve_state(p, levels[i]); });

  // spectrum against the finite-difference oracle (corrupt_c scales the
  // constant on the oracle side only)
  {
    const auto fd = fd_spectrum_converged(p, static_cast<int>(levels.size()), 0.005, 12.0,
                                          corrupt_c, ex);
    double dev = fd.energies.size() == levels.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; i < std::min(fd.energies.size(), levels.size()); ++i)
      dev = std::max(dev, std::fabs(levels[i].energy - fd.energies[i]) / levels[i].energy);
    chk.line("spectrum vs fd oracle (rel)", dev, 1e-6);
  }

  {
    double dev = 0.0;
    for (const auto& st : states) dev = std::max(dev, std::fabs(quad_norm(st) - 1.0));
    chk.line("unit norm (quadrature)", dev, 1e-10);
  }

  {
    double dev = 0.0;
    for (const auto& st : states)
      for (double r : boundary_residuals(st)) dev = std::max(dev, r);
    chk.line("matching residuals", dev, 1e-10);
  }

  {
    double dev = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i)
      for (std::size_t j = i + 1; j < states.size(); ++j)
        dev = std::max(dev, std::fabs(quad_overlap(states[i], states[j])));
    chk.line("orthogonality (quadrature)", dev, 1e-8);
  }

  {
    double dev = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i)
      for (std::size_t j = i + 1; j < states.size(); ++j)
        if (states[i].level.parity == states[j].level.parity)
          dev = std::max(dev, std::fabs(dipole_numeric(states[i], states[j])));
    chk.line("parity selection rule (nm)", dev, 1e-10);
  }

  {
    const bool applicable = p.m0 == p.mb && p.m0 == p.mc && p.vb == p.vc;
    double dev = 0.0;
    if (applicable) {
      for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i + 1; j < states.size(); ++j) {
          if (states[i].level.parity == states[j].level.parity) continue;
          const BoundState& s =
              states[i].level.parity == Parity::Symmetric ? states[i] : states[j];
          const BoundState& a =
              states[i].level.parity == Parity::Symmetric ? states[j] : states[i];
          const double cf = dipole_closed_form(s, a).total;
          const double nq = dipole_numeric(s, a);
          dev = std::max(dev, std::fabs(cf - nq) / std::fabs(nq));
        }
    }
    chk.line("closed-form dipole vs quadrature", dev, 1e-8, !applicable);
  }

  ValidationReport rep;
  rep.ok = ok;
  std::ostringstream head;
  head << "validation: a=" << p.a << " b=" << p.b << " vb=" << p.vb << " vc=" << p.vc
       << " m0=" << p.m0 << " mb=" << p.mb << " mc=" << p.mc << " (" << levels.size()
       << " bound levels)\n";
  rep.text = head.str() + out.str() + (ok ? "all checks passed\n" : "CHECKS FAILED\n");
  return rep;
}

}  // namespace dqw
