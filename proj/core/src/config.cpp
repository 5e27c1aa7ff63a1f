#include "phlo/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace phlo {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  std::ostringstream os;
  os << origin << ":" << line << ": " << msg;
  throw ConfigError(os.str());
}

double num(const std::string& origin, int line, const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing characters");
    return d;
  } catch (const std::exception&) {
    fail(origin, line, "key '" + key + "' needs a number, got '" + v + "'");
  }
}

int integer(const std::string& origin, int line, const std::string& key, const std::string& v) {
  double d = num(origin, line, key, v);
  int i = static_cast<int>(d);
  if (static_cast<double>(i) != d) fail(origin, line, "key '" + key + "' needs an integer");
  return i;
}

double sign_value(const std::string& origin, int line, const std::string& key,
                  const std::string& v) {
  double d = num(origin, line, key, v);
  if (d != 1.0 && d != -1.0) fail(origin, line, "key '" + key + "' must be +1 or -1");
  return d;
}

}  // namespace

SolutionConfig parse_config_text(const std::string& text, const std::string& origin) {
  SolutionConfig cfg;
  Box4 box;
  bool box_set = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail(origin, lineno, "expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty()) fail(origin, lineno, "empty key");
    if (val.empty()) fail(origin, lineno, "key '" + key + "' has no value");

    if (key == "epsilon") {
      cfg.prm.eps = sign_value(origin, lineno, key, val);
    } else if (key == "kappa") {
      cfg.prm.kappa = sign_value(origin, lineno, key, val);
    } else if (key == "l0") {
      cfg.prm.l0 = num(origin, lineno, key, val);
      if (cfg.prm.l0 <= 0.0) fail(origin, lineno, "l0 must be positive");
    } else if (key == "c") {
      cfg.prm.c = num(origin, lineno, key, val);
      if (cfg.prm.c <= 0.0) fail(origin, lineno, "c must be positive");
    } else if (key == "r0") {
      cfg.r0 = num(origin, lineno, key, val);
      if (cfg.r0 <= 0.0) fail(origin, lineno, "r0 must be positive");
    } else if (key == "a") {
      cfg.center_a = num(origin, lineno, key, val);
    } else if (key == "b") {
      cfg.center_b = num(origin, lineno, key, val);
    } else if (key == "gamma") {
      cfg.gamma = num(origin, lineno, key, val);
      if (cfg.gamma <= 0.0) fail(origin, lineno, "gamma must be positive");
    } else if (key == "phi0") {
      cfg.phi0 = num(origin, lineno, key, val);
    } else if (key == "phase_family") {
      if (val == "psi1")
        cfg.family = SolutionConfig::Family::Psi1;
      else if (val == "psi2")
        cfg.family = SolutionConfig::Family::Psi2;
      else
        fail(origin, lineno, "phase_family must be 'psi1' or 'psi2'");
    } else if (key == "u_expr") {
      cfg.u_expr = val;
    } else if (key == "p_expr") {
      cfg.p_expr = val;
    } else if (key == "provider") {
      if (val == "dual")
        cfg.prov.mode = DerivProvider::Mode::Dual;
      else if (val == "fd")
        cfg.prov.mode = DerivProvider::Mode::FiniteDifference;
      else
        fail(origin, lineno, "provider must be 'dual' or 'fd'");
    } else if (key == "fd_step") {
      cfg.prov.h = num(origin, lineno, key, val);
      if (cfg.prov.h <= 0.0) fail(origin, lineno, "fd_step must be positive");
    } else if (key == "seed") {
      double d = num(origin, lineno, key, val);
      if (d < 0) fail(origin, lineno, "seed must be nonnegative");
      cfg.seed = static_cast<std::uint64_t>(d);
    } else if (key == "grid.nx" || key == "grid.ny" || key == "grid.nz") {
      int n = integer(origin, lineno, key, val);
      if (n < 1) fail(origin, lineno, key + " must be >= 1");
      if (key == "grid.nx") cfg.grid.nx = n;
      if (key == "grid.ny") cfg.grid.ny = n;
      if (key == "grid.nz") cfg.grid.nz = n;
    } else if (key.rfind("box.", 0) == 0) {
      static const char* axes = "xyz";
      std::string rest = key.substr(4);  // e.g. "xlo", "xilo", "zhi"
      int axis = -1;
      std::string bound;
      if (rest.size() >= 3 && rest.compare(0, 2, "xi") == 0) {
        axis = 3;
        bound = rest.substr(2);
      } else if (!rest.empty()) {
        for (int d = 0; d < 3; ++d)
          if (rest[0] == axes[d]) axis = d;
        bound = rest.substr(1);
      }
      if (axis < 0 || (bound != "lo" && bound != "hi"))
        fail(origin, lineno, "unknown key '" + key + "'");
      double d = num(origin, lineno, key, val);
      if (bound == "lo")
        box.lo[axis] = d;
      else
        box.hi[axis] = d;
      box_set = true;
    } else {
      fail(origin, lineno, "unknown key '" + key + "'");
    }
  }

  if (box_set) {
    for (int d = 0; d < kDim; ++d)
      if (!(box.lo[d] < box.hi[d]))
        throw ConfigError(origin + ": box bounds must satisfy lo < hi on every axis");
    cfg.box = box;
  }
  if (cfg.u_expr.empty() != cfg.p_expr.empty())
    throw ConfigError(origin + ": u_expr and p_expr must be given together");
  return cfg;
}

SolutionConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), path);
}

std::string config_key_reference() {
  return
      "epsilon        +1 or -1, chirality sign (default -1)\n"
      "kappa          +1 or -1, rotation sense (default +1)\n"
      "l0             length scale > 0 (default 0.25; wavelength = 4 l0, not settable)\n"
      "c              signal speed > 0 (default 1)\n"
      "a, b           transverse disk center (default 1, 1)\n"
      "r0             transverse support radius > 0 (default 0.5)\n"
      "gamma          amplitude scale > 0 (default 1)\n"
      "phi0           phase offset (default 0)\n"
      "phase_family   psi1 | psi2 (default psi1)\n"
      "u_expr, p_expr custom state expressions (given together; see docs/dsl.md)\n"
      "provider       dual | fd derivative provider (default dual)\n"
      "fd_step        finite difference step > 0 (default 1e-5)\n"
      "seed           probe sequence seed (default 42)\n"
      "grid.nx/ny/nz  CSV sampling grid (default 16 each)\n"
      "box.{x,y,z,xi}{lo,hi}  integration box override\n";
}

}  // namespace phlo
