#include "dqw/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace dqw {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::optional<double>* slot(ConfigValues& c, const std::string& key) {
  if (key == "a_nm") return &c.a;
  if (key == "b_nm") return &c.b;
  if (key == "vb_ev") return &c.vb;
  if (key == "vc_ev") return &c.vc;
  if (key == "m0") return &c.m0;
  if (key == "mb") return &c.mb;
  if (key == "mc") return &c.mc;
  return nullptr;
}

}  // namespace

ConfigValues parse_config_text(const std::string& text, const std::string& origin) {
  ConfigValues out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(Errc::ConfigError,
           origin + ":" + std::to_string(lineno) + ": expected `key = value`, got `" + line + "`");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    std::optional<double>* s = slot(out, key);
    if (!s)
      fail(Errc::ConfigError,
           origin + ":" + std::to_string(lineno) + ": unknown key `" + key + "`");
    char* end = nullptr;
    const double v = std::strtod(val.c_str(), &end);
    if (val.empty() || end != val.c_str() + val.size())
      fail(Errc::ConfigError,
           origin + ":" + std::to_string(lineno) + ": bad numeric value `" + val + "`");
    *s = v;
  }
  return out;
}

ConfigValues parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ConfigError, "cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

WellParams resolve_params(const ConfigValues& file, const ConfigValues& overrides) {
  struct Key {
    const char* name;
    const std::optional<double>* f;
    const std::optional<double>* o;
    double* out;
  };
  WellParams p{};
  const Key keys[] = {
      {"a_nm", &file.a, &overrides.a, &p.a},   {"b_nm", &file.b, &overrides.b, &p.b},
      {"vb_ev", &file.vb, &overrides.vb, &p.vb}, {"vc_ev", &file.vc, &overrides.vc, &p.vc},
      {"m0", &file.m0, &overrides.m0, &p.m0},  {"mb", &file.mb, &overrides.mb, &p.mb},
      {"mc", &file.mc, &overrides.mc, &p.mc},
  };
  std::vector<std::string> missing;
  for (const Key& k : keys) {
    if (k.o->has_value())
      *k.out = **k.o;
    else if (k.f->has_value())
      *k.out = **k.f;
    else
      missing.push_back(k.name);
  }
  if (!missing.empty()) {
    std::string msg = "missing parameter keys:";
    for (const auto& m : missing) msg += " " + m;
    fail(Errc::ConfigError, msg);
  }
  return validate(p);
}

}  // namespace dqw
