#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// Drives the installed binary end to end: exit codes, golden transcripts, and
// the numeric claims printed by each command.

namespace {

std::string cli_path() {
  const char* p = std::getenv("PHLO_CLI");
  REQUIRE_MESSAGE(p != nullptr, "PHLO_CLI must point at the built binary");
  return p;
}

std::string data_dir() {
  const char* p = std::getenv("PHLO_TEST_DATA");
  REQUIRE_MESSAGE(p != nullptr, "PHLO_TEST_DATA must point at tests/golden");
  return p;
}

std::string config_dir() {
  const char* p = std::getenv("PHLO_CONFIG_DIR");
  REQUIRE_MESSAGE(p != nullptr, "PHLO_CONFIG_DIR must point at the configs directory");
  return p;
}

const std::string& scratch_dir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/phlo_cli_XXXXXX";
    char* d = mkdtemp(tmpl);
    REQUIRE(d != nullptr);
    return std::string(d);
  }();
  return dir;
}

struct RunResult {
  int code{-1};
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_file(const std::string& name, const std::string& content) {
  std::string path = scratch_dir() + "/" + name;
  std::ofstream out(path);
  REQUIRE(out.good());
  out << content;
  out.close();
  return path;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), ("cannot read " + path).c_str());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Value printed after '=' on the first line containing `label`.
double grab(const std::string& out, const std::string& label) {
  std::istringstream is(out);
  std::string line;
  while (std::getline(is, line)) {
    auto at = line.find(label);
    if (at == std::string::npos) continue;
    auto eq = line.find('=', at);
    REQUIRE(eq != std::string::npos);
    return std::stod(line.substr(eq + 1));
  }
  REQUIRE_MESSAGE(false, ("label not found: " + label).c_str());
  return 0.0;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("default verification matches the golden transcript") {
  RunResult r = run("verify");
  CHECK(r.code == 0);
  CHECK(r.out == read_file(data_dir() + "/verify_default.txt"));

  // The shipped default config spells out the built-in defaults.
  RunResult rc = run("verify --config " + config_dir() + "/default.cfg");
  CHECK(rc.code == 0);
  CHECK(rc.out == r.out);
}

TEST_CASE("machine output is byte-identical across thread counts") {
  RunResult r1 = run("--threads 1 verify --format machine");
  RunResult r8 = run("--threads 8 verify --format machine");
  CHECK(r1.code == 0);
  CHECK(r8.code == 0);
  CHECK(!r1.out.empty());
  CHECK(r1.out == r8.out);
}

TEST_CASE("a failing suite exits with the invariant code") {
  std::string cfg = write_file("nonsolution.cfg",
                               "u_expr = x\n"
                               "p_expr = 0\n"
                               "box.xlo = -1\nbox.xhi = 1\n"
                               "box.ylo = -1\nbox.yhi = 1\n"
                               "box.zlo = -1\nbox.zhi = 1\n"
                               "box.xilo = 0\nbox.xihi = 1\n");
  RunResult r = run("verify --config " + cfg);
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("suite: pass") == std::string::npos);
}

TEST_CASE("configuration problems exit with the usage code") {
  CHECK(run("verify --config /no/such/file.cfg").code == 2);

  std::string bad_key = write_file("bad_key.cfg", "epsilon = -1\nwavelength = 2\n");
  CHECK(run("verify --config " + bad_key).code == 2);

  std::string bad_sign = write_file("bad_sign.cfg", "epsilon = 0.5\n");
  CHECK(run("verify --config " + bad_sign).code == 2);

  CHECK(run("energy --grid 0,8,8").code == 2);
  CHECK(run("energy --grid nonsense").code == 2);
  CHECK(run("verify --provider maple").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("expression checking round-trips or rejects") {
  RunResult ok = run("parse-check \"sin(x + y) * 2\"");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("sin") != std::string::npos);
  CHECK(ok.out.back() == '\n');

  CHECK(run("parse-check \"x +\"").code == 2);
  CHECK(run("parse-check \"frob(x)\"").code == 2);
  CHECK(run("parse-check \"\"").code == 2);
}

TEST_CASE("emitted CSV has the documented layout") {
  std::string out_path = scratch_dir() + "/slice.csv";
  RunResult r = run("emit --t 0.25 --grid 2,2,2 --out " + out_path);
  CHECK(r.code == 0);

  std::vector<std::string> lines = split_lines(read_file(out_path));
  REQUIRE(lines.size() == 9);
  CHECK(lines[0] == "x,y,z,t,u,p,phi,psi,energy_density");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::size_t commas = 0;
    for (char c : lines[i])
      if (c == ',') ++commas;
    CHECK(commas == 8);
  }

  CHECK(run("emit --t 0 --out /no/such/dir/out.csv").code == 2);

  // The shipped custom-state example parses and samples cleanly.
  RunResult rc = run("emit --config " + config_dir() + "/custom_state.cfg --t 0.25 --out " +
                     scratch_dir() + "/custom.csv --grid 2,2,2");
  CHECK(rc.code == 0);
}

TEST_CASE("energy reporting scales with the amplitude") {
  std::string g1 = write_file("g1.cfg", "gamma = 1\n");
  std::string g2 = write_file("g2.cfg", "gamma = 2\n");
  RunResult r1 = run("energy --config " + g1 + " --grid 12,12,12");
  RunResult r2 = run("energy --config " + g2 + " --grid 12,12,12");
  CHECK(r1.code == 0);
  CHECK(r2.code == 0);
  double e1 = grab(r1.out, "E ");
  double e2 = grab(r2.out, "E ");
  CHECK(e1 > 0.0);
  CHECK(e2 == doctest::Approx(4.0 * e1).epsilon(1e-10));
}

TEST_CASE("a truncated integration box is reported and exits nonzero") {
  std::string cfg = write_file("tight.cfg",
                               "box.xlo = 0.9\nbox.xhi = 1.1\n"
                               "box.ylo = 0.9\nbox.yhi = 1.1\n"
                               "box.zlo = -0.6\nbox.zhi = 0\n"
                               "box.xilo = 0\nbox.xihi = 1\n");
  RunResult r = run("energy --config " + cfg + " --grid 8,8,8");
  CHECK(r.code == 1);
  CHECK(r.out.find("support truncated") != std::string::npos);
  CHECK(r.out.find("retry with box") != std::string::npos);
}

TEST_CASE("the action integral flips sign with the rotation sense") {
  std::string kp = write_file("kp.cfg", "kappa = 1\n");
  std::string km = write_file("km.cfg", "kappa = -1\n");
  RunResult rp = run("planck --config " + kp + " --grid 16,16,16");
  RunResult rm = run("planck --config " + km + " --grid 16,16,16");
  CHECK(rp.code == 0);
  CHECK(rm.code == 0);

  // Default chirality is -1, so eps*kappa = -kappa.
  double hp = grab(rp.out, "H (action)");
  double hm = grab(rm.out, "H (action)");
  CHECK(hp < 0.0);
  CHECK(hm > 0.0);
  CHECK(hp == doctest::Approx(-hm).epsilon(1e-9));

  double et = grab(rp.out, "E*T");
  CHECK(std::abs(hp) == doctest::Approx(et).epsilon(1e-6));
  double gap = grab(rp.out, "mismatch");
  CHECK(gap <= 1e-6);
}
