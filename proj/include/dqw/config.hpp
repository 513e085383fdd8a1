#pragma once

#include <optional>
#include <string>

#include "dqw/params.hpp"

namespace dqw {

// Plain-text parameter files: one `key = value` per line, `#` starts a
// comment, blank lines ignored.  Keys: a_nm, b_nm, vb_ev, vc_ev, m0, mb, mc.
struct ConfigValues {
  std::optional<double> a, b, vb, vc, m0, mb, mc;
};

ConfigValues parse_config_text(const std::string& text, const std::string& origin = "<config>");
ConfigValues parse_config_file(const std::string& path);

// Overrides (CLI flags) beat file values; all seven keys must end up set.
// Missing keys are reported by name.  The result is validated.
WellParams resolve_params(const ConfigValues& file, const ConfigValues& overrides);

}  // namespace dqw
